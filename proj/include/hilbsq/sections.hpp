#ifndef HILBSQ_SECTIONS_HPP
#define HILBSQ_SECTIONS_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbsq/citations.hpp"
#include "hilbsq/numeric.hpp"

namespace hilbsq::sections {

// Exponent vector of a monomial in x0, x1, x2.
using Exponents = std::array<int, 3>;

// Monomials of total degree d in the documented order: graded
// lexicographic with x0 > x1 > x2, i.e. exponent vectors descending.
// Degree 1: x0, x1, x2.  Degree 2: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
const std::vector<Exponents>& monomials_of_degree(int d);

// Position of an exponent vector in monomials_of_degree(weight).
int monomial_rank(const Exponents& e);

// An exact multihomogeneous polynomial on P^2 x P^2 of bidegree (d1, d2).
// Terms are keyed by (rank of first-factor monomial, rank of second-factor
// monomial) in the documented order; only nonzero coefficients are stored.
class BidegreePoly {
  public:
    using Key = std::pair<int, int>;

    BidegreePoly(int d1, int d2);

    int degree_first() const { return d1_; }
    int degree_second() const { return d2_; }

    // Adds coeff * x^left (x) x^right; erases the term if it cancels.
    void add_term(const Exponents& left, const Exponents& right, const Rat& coeff);

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BidegreePoly& operator+=(const BidegreePoly& other);
    BidegreePoly& scale(const Rat& factor);

    friend bool operator==(const BidegreePoly&, const BidegreePoly&) = default;

  private:
    int d1_;
    int d2_;
    std::map<Key, Rat> terms_;
};

// s_i = x_{i+1} (x) x_{i+2} - x_{i+2} (x) x_{i+1}, indices mod 3.
std::array<BidegreePoly, 3> basis_v();

// t_i = x_{i+1} (x) x_{i+2} + x_{i+2} (x) x_{i+1} and v_i = x_i (x) x_i,
// returned in the order t0, t1, t2, v0, v1, v2.
std::array<BidegreePoly, 6> basis_w();

// Product of two bidegree-(1,1) forms, a bidegree-(2,2) form; throws
// BidegreeMismatch for any other input shape.
BidegreePoly multiply(const BidegreePoly& p, const BidegreePoly& q);

// The i-th component of the cross product as a (1,1)-form, built from the
// definition (p, q) -> p_{i+1} q_{i+2} - p_{i+2} q_{i+1}.
BidegreePoly cross_product_component(int i);

// Dense matrix over the rationals with exact arithmetic.
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

// The matrix of the multiplication map V (x) W -> H^0(O(2,2)).  Rows are
// indexed by (s_i, w_j) with i ascending and w_j in basis_w order (row
// 6*i + j); columns by monomial pairs, first factor major, each factor in
// the documented monomial order.  The serialization of this matrix is part
// of the CLI contract.
ExactMatrix mu_matrix();

// Rank of the linear map whose images of the source basis vectors are the
// rows of the matrix, together with a basis of its kernel: vectors y with
// sum_i y_i * row_i = 0.  rank + kernel dimension = number of rows.
//
// Elimination is fraction-free on integer-cleared rows; divisions appear
// only in back-substitution.  Pivots are chosen as the first nonzero entry
// in scan order, so the output is deterministic.
struct KernelResult {
    std::size_t rank;
    std::vector<std::vector<Rat>> kernel_basis;
};
KernelResult rank_and_kernel(const ExactMatrix& m);

// Documented byte serialization of a matrix: "rows cols\n" followed by one
// line per row of space-separated exact rational entries.
std::string matrix_bytes(const ExactMatrix& m);

// Verification record for the multiplication map: its rank, kernel, the
// three explicit kernel elements, and the match with the section count of
// H+L.  verify_mu throws VerificationFailed at the first failing check.
struct MuVerification {
    std::size_t rank;
    std::size_t kernel_dimension;
    std::array<bool, 3> stated_vectors_annihilated;
    bool stated_vectors_independent;
    bool stated_vectors_span_kernel;
    Int expected_image_dimension;  // h0(X, H+L)
    bool image_matches_h0;
    std::vector<std::vector<Rat>> kernel_basis;
    std::vector<citations::Citation> citations;
};
MuVerification verify_mu();

// The 18-vector of the stated kernel element for k in {0, 1, 2}, over the
// row basis of mu_matrix.
std::vector<Rat> stated_kernel_vector(int k);

// True iff every s_i equals the corresponding cross-product component.
bool cross_product_identity_check();

}  // namespace hilbsq::sections

#endif

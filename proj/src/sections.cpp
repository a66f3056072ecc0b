#include "hilbsq/sections.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hilbsq/errors.hpp"
#include "hilbsq/riemann_roch.hpp"

namespace hilbsq::sections {

namespace {

std::vector<Exponents> generate_monomials(int d) {
    std::vector<Exponents> out;
    for (int e0 = d; e0 >= 0; --e0)
        for (int e1 = d - e0; e1 >= 0; --e1)
            out.push_back(Exponents{e0, e1, d - e0 - e1});
    return out;
}

Exponents variable(int i) {
    Exponents e{0, 0, 0};
    e[i] = 1;
    return e;
}

int weight(const Exponents& e) { return e[0] + e[1] + e[2]; }

}  // namespace

const std::vector<Exponents>& monomials_of_degree(int d) {
    // Deque so that growing the cache never moves the lists callers
    // already hold references to; the mutex covers concurrent first use.
    static std::deque<std::vector<Exponents>> cache;
    static std::mutex cache_mutex;
    if (d < 0) throw std::invalid_argument("negative monomial degree");
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (static_cast<int>(cache.size()) <= d)
        cache.push_back(generate_monomials(static_cast<int>(cache.size())));
    return cache[static_cast<std::size_t>(d)];
}

int monomial_rank(const Exponents& e) {
    const auto& monos = monomials_of_degree(weight(e));
    const auto it = std::find(monos.begin(), monos.end(), e);
    if (it == monos.end()) throw std::logic_error("exponent vector not found");
    return static_cast<int>(it - monos.begin());
}

BidegreePoly::BidegreePoly(int d1, int d2) : d1_(d1), d2_(d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative bidegree");
}

void BidegreePoly::add_term(const Exponents& left, const Exponents& right,
                            const Rat& coeff) {
    if (weight(left) != d1_ || weight(right) != d2_)
        throw std::invalid_argument("monomial weights do not match the bidegree");
    if (coeff == 0) return;
    const Key key{monomial_rank(left), monomial_rank(right)};
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BidegreePoly& BidegreePoly::operator+=(const BidegreePoly& other) {
    if (other.d1_ != d1_ || other.d2_ != d2_)
        throw BidegreeMismatch("cannot add forms of different bidegrees");
    for (const auto& [key, coeff] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

BidegreePoly& BidegreePoly::scale(const Rat& factor) {
    if (factor == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= factor;
    return *this;
}

std::array<BidegreePoly, 3> basis_v() {
    std::array<BidegreePoly, 3> out{BidegreePoly(1, 1), BidegreePoly(1, 1),
                                    BidegreePoly(1, 1)};
    for (int i = 0; i < 3; ++i) {
        out[i].add_term(variable((i + 1) % 3), variable((i + 2) % 3), Rat(1));
        out[i].add_term(variable((i + 2) % 3), variable((i + 1) % 3), Rat(-1));
    }
    return out;
}

std::array<BidegreePoly, 6> basis_w() {
    std::array<BidegreePoly, 6> out{BidegreePoly(1, 1), BidegreePoly(1, 1),
                                    BidegreePoly(1, 1), BidegreePoly(1, 1),
                                    BidegreePoly(1, 1), BidegreePoly(1, 1)};
    for (int i = 0; i < 3; ++i) {
        out[i].add_term(variable((i + 1) % 3), variable((i + 2) % 3), Rat(1));
        out[i].add_term(variable((i + 2) % 3), variable((i + 1) % 3), Rat(1));
        out[3 + i].add_term(variable(i), variable(i), Rat(1));
    }
    return out;
}

BidegreePoly multiply(const BidegreePoly& p, const BidegreePoly& q) {
    if (p.degree_first() != 1 || p.degree_second() != 1 || q.degree_first() != 1 ||
        q.degree_second() != 1)
        throw BidegreeMismatch("multiply expects two forms of bidegree (1,1)");

    const auto& deg1 = monomials_of_degree(1);
    BidegreePoly out(2, 2);
    for (const auto& [kp, cp] : p.terms()) {
        for (const auto& [kq, cq] : q.terms()) {
            Exponents left{}, right{};
            for (int v = 0; v < 3; ++v) {
                left[v] = deg1[kp.first][v] + deg1[kq.first][v];
                right[v] = deg1[kp.second][v] + deg1[kq.second][v];
            }
            out.add_term(left, right, cp * cq);
        }
    }
    return out;
}

BidegreePoly cross_product_component(int i) {
    BidegreePoly out(1, 1);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Rat coeff(0);
            if (a == (i + 1) % 3 && b == (i + 2) % 3) coeff = 1;
            if (a == (i + 2) % 3 && b == (i + 1) % 3) coeff = -1;
            if (coeff != 0) out.add_term(variable(a), variable(b), coeff);
        }
    return out;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

ExactMatrix mu_matrix() {
    const auto v = basis_v();
    const auto w = basis_w();
    ExactMatrix m(18, 36);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 6; ++j) {
            const BidegreePoly product = multiply(v[i], w[j]);
            const std::size_t row = static_cast<std::size_t>(6 * i + j);
            for (const auto& [key, coeff] : product.terms())
                m.at(row, static_cast<std::size_t>(key.first * 6 + key.second)) = coeff;
        }
    }
    return m;
}

KernelResult rank_and_kernel(const ExactMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Equations of the left kernel: one per column of m, unknowns indexed
    // by rows.  Rows of n are scaled to integers; scaling an equation does
    // not change its solutions.
    std::vector<std::vector<Int>> n(cols, std::vector<Int>(rows));
    for (std::size_t j = 0; j < cols; ++j) {
        Int common = 1;
        for (std::size_t i = 0; i < rows; ++i) {
            Rat e = m.at(i, j);
            e.canonicalize();
            Int den = e.get_den();
            common = common / gcd(common, den) * den;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            Rat e = m.at(i, j) * Rat(common);
            e.canonicalize();
            n[j][i] = e.get_num();
        }
    }

    // Fraction-free (Bareiss) forward elimination.
    std::vector<std::size_t> pivot_cols;
    Int prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < rows && pivot_row < cols; ++col) {
        std::size_t found = cols;
        for (std::size_t i = pivot_row; i < cols; ++i) {
            if (n[i][col] != 0) {
                found = i;
                break;
            }
        }
        if (found == cols) continue;  // free unknown
        std::swap(n[pivot_row], n[found]);
        const Int pivot = n[pivot_row][col];
        for (std::size_t i = pivot_row + 1; i < cols; ++i) {
            for (std::size_t j = col + 1; j < rows; ++j) {
                Int t = n[i][j] * pivot - n[i][col] * n[pivot_row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                n[i][j] = t;
            }
            n[i][col] = 0;
        }
        prev = pivot;
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    const std::size_t rank = pivot_cols.size();

    // Back-substitution: one kernel vector per free unknown, with a 1 in
    // the free position.  This is the only place divisions happen.
    std::vector<bool> is_pivot(rows, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    KernelResult result{rank, {}};
    for (std::size_t f = 0; f < rows; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> x(rows, Rat(0));
        x[f] = 1;
        for (std::size_t p = rank; p-- > 0;) {
            const std::size_t pc = pivot_cols[p];
            Rat sum(0);
            for (std::size_t j = pc + 1; j < rows; ++j)
                if (n[p][j] != 0) sum += Rat(n[p][j]) * x[j];
            x[pc] = -sum / Rat(n[p][pc]);
            x[pc].canonicalize();
        }
        result.kernel_basis.push_back(std::move(x));
    }
    return result;
}

std::string matrix_bytes(const ExactMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << to_string(m.at(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::vector<Rat> stated_kernel_vector(int k) {
    // Row basis order: (s_i, w_j) at index 6*i + j with w = (t0,t1,t2,v0,v1,v2).
    std::vector<Rat> vec(18, Rat(0));
    const int k1 = (k + 1) % 3;
    const int k2 = (k + 2) % 3;
    vec[static_cast<std::size_t>(6 * k1 + k2)] = 1;      // s_{k+1} (x) t_{k+2}
    vec[static_cast<std::size_t>(6 * k2 + k1)] = 1;      // s_{k+2} (x) t_{k+1}
    vec[static_cast<std::size_t>(6 * k + 3 + k)] = 2;    // 2 s_k (x) v_k
    return vec;
}

MuVerification verify_mu() {
    const auto v = basis_v();
    const auto w = basis_w();

    MuVerification report{};
    report.citations = {citations::cite("kernel-basis"),
                        citations::cite("mu-kernel-dimension"),
                        citations::cite("mu-surjective"),
                        citations::cite("kernel-dimension-bridge")};

    // (i) the three stated elements multiply to zero, checked on the level
    // of polynomial identities, independently of the matrix elimination.
    for (int k = 0; k < 3; ++k) {
        const int k1 = (k + 1) % 3;
        const int k2 = (k + 2) % 3;
        BidegreePoly sum = multiply(v[k1], w[k2]);
        sum += multiply(v[k2], w[k1]);
        BidegreePoly last = multiply(v[k], w[3 + k]);
        last.scale(Rat(2));
        sum += last;
        report.stated_vectors_annihilated[static_cast<std::size_t>(k)] = sum.is_zero();
        if (!sum.is_zero())
            throw VerificationFailed("stated kernel element " + std::to_string(k) +
                                     " does not multiply to zero");
    }

    // (ii) independence of the stated vectors.
    ExactMatrix stated(3, 18);
    for (int k = 0; k < 3; ++k) {
        const auto vec = stated_kernel_vector(k);
        for (std::size_t j = 0; j < 18; ++j) stated.at(static_cast<std::size_t>(k), j) = vec[j];
    }
    report.stated_vectors_independent = rank_and_kernel(stated).rank == 3;
    if (!report.stated_vectors_independent)
        throw VerificationFailed("the three stated kernel elements are dependent");

    // (iii) computed kernel dimension is 3, so the stated vectors span.
    const KernelResult kr = rank_and_kernel(mu_matrix());
    report.rank = kr.rank;
    report.kernel_dimension = kr.kernel_basis.size();
    report.kernel_basis = kr.kernel_basis;
    if (report.kernel_dimension != 3)
        throw VerificationFailed("kernel dimension is " +
                                 std::to_string(report.kernel_dimension) +
                                 ", expected 3");
    report.stated_vectors_span_kernel = true;

    // (iv) the image is 15-dimensional and matches h0(X, H+L).
    report.expected_image_dimension = riemann_roch::euler_characteristic(Int(6), 2);
    report.image_matches_h0 =
        report.rank == 15 && Int(static_cast<long>(report.rank)) == report.expected_image_dimension;
    if (!report.image_matches_h0)
        throw VerificationFailed("image dimension " + std::to_string(report.rank) +
                                 " does not match h0(X, H+L)");
    return report;
}

bool cross_product_identity_check() {
    const auto v = basis_v();
    for (int i = 0; i < 3; ++i)
        if (!(v[static_cast<std::size_t>(i)] == cross_product_component(i))) return false;
    return true;
}

}  // namespace hilbsq::sections

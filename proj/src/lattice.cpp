#include "hilbsq/lattice.hpp"

#include <stdexcept>

#include "hilbsq/errors.hpp"

namespace hilbsq::lattice {

namespace {

void require_valid_n(long n) {
    if (n < 2) throw std::invalid_argument("Hilbert-scheme parameter n must be >= 2");
}

void require_same_ambient(const GeneralClass& c1, const GeneralClass& c2) {
    if (c1.n != c2.n)
        throw MismatchedAmbient("classes live on Hilbert schemes of different n");
    if (c1.lambda_tag != c2.lambda_tag)
        throw MismatchedAmbient("classes are declared over different lambda lines");
    if (c1.half_lambda_square != c2.half_lambda_square)
        throw MismatchedAmbient("same lambda tag but different q(lambda)/2");
}

}  // namespace

Int bbf_square(const GeneralClass& c) {
    require_valid_n(c.n);
    return 2 * c.half_lambda_square * c.a * c.a - 2 * (c.n - 1) * c.b * c.b;
}

Int bbf_pair(const GeneralClass& c1, const GeneralClass& c2) {
    require_valid_n(c1.n);
    require_same_ambient(c1, c2);
    return 2 * c1.half_lambda_square * c1.a * c2.a - 2 * (c1.n - 1) * c1.b * c2.b;
}

Int divisibility(const GeneralClass& c) {
    require_valid_n(c.n);
    if (c.is_zero()) throw ZeroClass("divisibility of the zero class is undefined");
    return gcd(c.a, 2 * c.b * (c.n - 1));
}

bool is_primitive(const GeneralClass& c) {
    require_valid_n(c.n);
    if (c.is_zero()) throw ZeroClass("primitivity of the zero class is undefined");
    return gcd(c.a, c.b) == 1;
}

Int lattice_discriminant(long n) {
    require_valid_n(n);
    return Int(2 * (n - 1));
}

std::pair<Int, Int> hl_to_hdelta(const HLClass& c) {
    return {c.a + c.b, -c.b};
}

HLClass hdelta_to_hl(const Int& a, const Int& b) {
    return HLClass{a + b, -b};
}

GeneralClass to_general(const HLClass& c) {
    auto [a, b] = hl_to_hdelta(c);
    return GeneralClass{a, b, 1, 2};
}

HLClass wall_class() { return HLClass{-1, 3}; }

Int hl_square(const HLClass& c) { return bbf_square(to_general(c)); }

Int hl_pair(const HLClass& c1, const HLClass& c2) {
    return bbf_pair(to_general(c1), to_general(c2));
}

GramLattice::GramLattice(std::vector<std::vector<Int>> gram) : g_(std::move(gram)) {
    if (g_.empty()) throw std::invalid_argument("empty Gram matrix");
    const auto n = g_.size();
    for (const auto& row : g_)
        if (row.size() != n) throw std::invalid_argument("Gram matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (g_[i][i] % 2 != 0)
            throw std::invalid_argument("Gram matrix has an odd diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j)
            if (g_[i][j] != g_[j][i])
                throw std::invalid_argument("Gram matrix is not symmetric");
    }
}

Int GramLattice::square(const std::vector<Int>& v) const { return pair(v, v); }

Int GramLattice::pair(const std::vector<Int>& u, const std::vector<Int>& v) const {
    const auto n = g_.size();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("vector length does not match lattice rank");
    Int total = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) total += u[i] * g_[i][j] * v[j];
    return total;
}

Int GramLattice::discriminant() const {
    switch (rank()) {
        case 1:
            return g_[0][0];
        case 2:
            return g_[0][0] * g_[1][1] - g_[0][1] * g_[1][0];
        default:
            throw RankUnsupported("discriminant implemented for rank <= 2 only");
    }
}

}  // namespace hilbsq::lattice

#ifndef HILBSQ_NUMERIC_HPP
#define HILBSQ_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hilbsq {

// All lattice arithmetic runs on arbitrary-precision integers; rationals
// appear only where the half-integral flop constant enters.
using Int = mpz_class;
using Rat = mpq_class;

// Nonnegative gcd; gcd(0, 0) = 0 (callers decide whether that is an error).
inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Generalized binomial coefficient C(top, k) for an arbitrary integer top
// and k >= 0, via the exact descending product top(top-1)...(top-k+1)/k!.
// Vanishes exactly for top in [0, k) and extends Riemann-Roch counts to
// negative arguments without ever leaving integer arithmetic.
inline Int binomial(const Int& top, long k) {
    if (k < 0) throw std::invalid_argument("binomial: negative lower index");
    Int result = 1;
    Int factor = top;
    for (long i = 1; i <= k; ++i) {
        result *= factor;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(),
                        static_cast<unsigned long>(i));
        factor -= 1;
    }
    return result;
}

// Parses a decimal integer, rejecting anything mpz does not accept.
inline Int parse_int(const std::string& text) {
    try {
        return Int(text, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    }
}

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_str();
}

}  // namespace hilbsq

#endif

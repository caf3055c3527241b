#ifndef TRIPLEINT_RATIONAL_HPP
#define TRIPLEINT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "tripleint/errors.hpp"

namespace tripleint {

// Arbitrary-precision scalars. mpq_class keeps values reduced with a
// positive denominator, which is exactly the ExactRational contract.
using Int = mpz_class;
using Rational = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// binomial(n, k) with the convention binom(n, k) = 0 for k < 0 or k > n.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

inline Rational rational_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZero("rational division by zero");
    return a / b;
}

// p^e as an exact rational, e of either sign.
inline Rational pow_rational(long p, long e) {
    Rational r;
    if (e >= 0) {
        mpz_ui_pow_ui(r.get_num().get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(r.get_den().get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline double to_double(const Rational& v) { return v.get_d(); }

} // namespace tripleint

#endif

#pragma once

// Exact scalar arithmetic.  All linear algebra in this library runs over the
// rationals with no rounding anywhere, so the scalar type is GMP's mpq_class
// behind a typedef.  mpq_class keeps values canonical (reduced, positive
// denominator) under arithmetic, which the subspace normal forms rely on.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace verma {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Exact conversion to long; the value must be an integer that fits.
inline long to_long(const Rational& x) {
    if (!is_integer(x)) throw std::invalid_argument("to_long: " + x.get_str() + " is not an integer");
    if (!x.get_num().fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return x.get_num().get_si();
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Binomial as size_t for dimension counts at working scale.
inline std::size_t binomial_sz(unsigned long n, unsigned long k) {
    Integer b = binomial(n, k);
    if (!b.fits_ulong_p()) throw std::overflow_error("binomial_sz: dimension out of range");
    return static_cast<std::size_t>(b.get_ui());
}

} // namespace verma

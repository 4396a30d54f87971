#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace cover {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in
// canonical reduced form (positive denominator, gcd(num, den) = 1) after
// every operation, which is exactly the invariant the kernel needs.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }

// "3", "-7", "22/7"
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline std::optional<std::int64_t> to_int64(const Integer& z) {
    if (!z.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

// Nearest integer, ties away from zero.
inline Integer round_nearest(const Rational& q) {
    if (sgn(q) < 0) return -round_nearest(Rational(-q));
    Integer num = q.get_num(), den = q.get_den();
    Integer twice = 2 * num + den;
    Integer two_den = 2 * den;
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), two_den.get_mpz_t());
    return r;
}

}  // namespace cover

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace k3aut {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer isqrt(const Integer& n)
{
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Integer& n)
{
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Least non-negative residue of n modulo |m|.
inline Integer mod_floor(const Integer& n, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer floor_div(const Integer& n, const Integer& m)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return q;
}

inline bool divides(const Integer& m, const Integer& n)
{
    if (m == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t()) != 0;
}

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
struct ExtGcd {
    Integer g, s, t;
};

inline ExtGcd ext_gcd(const Integer& a, const Integer& b)
{
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const Integer& n) { return n.get_str(10); }

/// Parses an optionally signed decimal integer; throws Error(InvalidArgument) on junk.
Integer parse_integer(std::string_view text, std::string_view field = "value");

} // namespace k3aut

#pragma once

// Independent reference implementations used only by the tests.

#include "k3aut/aut.hpp"
#include "k3aut/divisors.hpp"
#include "k3aut/lattice.hpp"
#include "k3aut/pell.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace k3aut {

inline std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << to_string(m); }

inline std::ostream& operator<<(std::ostream& os, const PellSolution& s)
{
    return os << "(" << s.u << "," << s.v << ";d=" << s.d << ",m=" << s.m << ")";
}

inline std::ostream& operator<<(std::ostream& os, const DivisorClass& c)
{
    return os << "(" << c.x << "," << c.y << ";sq=" << c.square << ")";
}

} // namespace k3aut

namespace oracle {

using k3aut::Integer;
using k3aut::Mat2;
using k3aut::PellSolution;
using k3aut::Rank2Lattice;

inline std::int64_t isqrt64(std::int64_t n)
{
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool square64(std::int64_t n, std::int64_t& root)
{
    if (n < 0) return false;
    root = isqrt64(n);
    return root * root == n;
}

/// Smallest (u, v) with u, v > 0 and u^2 - d v^2 = m, searching v = 1..vmax.
inline std::optional<std::pair<std::int64_t, std::int64_t>> brute_min_positive(std::int64_t d, std::int64_t m,
                                                                               std::int64_t vmax)
{
    for (std::int64_t v = 1; v <= vmax; ++v) {
        std::int64_t u;
        if (square64(m + d * v * v, u) && u > 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

/// Every (u, v) with |v| <= vmax and u^2 - d v^2 = m.
inline std::vector<std::pair<std::int64_t, std::int64_t>> brute_solutions(std::int64_t d, std::int64_t m,
                                                                          std::int64_t vmax)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t v = -vmax; v <= vmax; ++v) {
        std::int64_t u;
        if (!square64(m + d * v * v, u)) continue;
        out.emplace_back(u, v);
        if (u != 0) out.emplace_back(-u, v);
    }
    return out;
}

/// Fundamental solution of u^2 - d v^2 = 1 by the chakravala method
/// (no continued fractions involved).
inline PellSolution chakravala(const Integer& d)
{
    Integer a = k3aut::isqrt(d);
    if ((a + 1) * (a + 1) - d < d - a * a) a += 1;
    Integer b = 1;
    Integer k = a * a - d;
    while (true) {
        if (k == 1) return PellSolution::make(abs(a), abs(b), d);
        if (k == -1) {
            PellSolution s = PellSolution::make(abs(a), abs(b), d);
            return k3aut::pell_multiply(s, s);
        }
        // choose m with k | a + b m minimizing |m^2 - d|
        const Integer ak = abs(k);
        Integer best_m;
        bool have = false;
        const Integer s = k3aut::isqrt(d);
        // a + b m ≡ 0 (mod |k|): b invertible mod |k| since gcd(b, k) = 1
        Integer binv;
        mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), ak.get_mpz_t());
        const Integer m0 = k3aut::mod_floor(-a * binv, ak);
        // candidates around sqrt(d)
        Integer base = s - k3aut::mod_floor(s - m0, ak);
        for (Integer m = base - ak; m <= base + 2 * ak; m += ak) {
            if (m <= 0) continue;
            if (!have || abs(m * m - d) < abs(best_m * best_m - d)) {
                best_m = m;
                have = true;
            }
        }
        const Integer na = (a * best_m + d * b) / ak;
        const Integer nb = (a + b * best_m) / ak;
        const Integer nk = (best_m * best_m - d) / k;
        a = na;
        b = nb;
        k = nk;
    }
}

/// Orbit representatives by enumerating the window 0 <= v <= sqrt(|m|/d) * rho_1
/// (both signs of u) and deduplicating with `same_unit_orbit` under ±1.
inline std::vector<PellSolution> window_orbits(const Integer& d, const Integer& m)
{
    const PellSolution eta = k3aut::pell1_fundamental(d);
    // rho_1 < 2 u_1, so the bound is at most ceil(2 u_1 sqrt(|m| / d)) + 1
    const Integer bound = k3aut::isqrt(4 * eta.u * eta.u * abs(m) / d) + 2;
    std::vector<PellSolution> reps;
    for (Integer v = 0; v <= bound; ++v) {
        const Integer rhs = m + d * v * v;
        if (rhs < 0 || !k3aut::is_square(rhs)) continue;
        const Integer u = k3aut::isqrt(rhs);
        for (const Integer& uu : {u, Integer(-u)}) {
            for (const Integer& vv : {v, Integer(-v)}) {
                PellSolution s{uu, vv, d, m};
                bool seen = false;
                for (const auto& r : reps)
                    if (k3aut::same_unit_orbit(s, r) || k3aut::same_unit_orbit(s.negated(), r)) seen = true;
                if (!seen) reps.push_back(s);
            }
        }
    }
    return reps;
}

/// Whether a x^2 + b x y + c y^2 = k has a solution with |x|, |y| <= bound.
inline bool brute_represents(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t k, std::int64_t bound)
{
    for (std::int64_t y = -bound; y <= bound; ++y)
        for (std::int64_t x = -bound; x <= bound; ++x)
            if (a * x * x + b * x * y + c * y * y == k) return true;
    return false;
}

/// Class-orbit representatives of D^2 = 2k by scanning, for each Pell orbit of
/// z^2 - d y^2 = 4ak, one full period of the unit action mod 2a.
inline std::vector<k3aut::DivisorClass> period_scan_represent(const Rank2Lattice& l, const Integer& k)
{
    const Integer& a = l.a();
    const Integer& b = l.b();
    const auto orbits = k3aut::general_pell_orbits(l.d(), 4 * a * k);
    const long period = k3aut::unit_period_mod(orbits.unit, 2 * a);
    std::vector<PellSolution> found;
    for (const auto& rep : orbits.representatives) {
        PellSolution s = rep;
        for (long i = 0; i < period; ++i, s = k3aut::pell_multiply(s, orbits.unit)) {
            if (!k3aut::divides(2 * a, s.u - b * s.v)) continue;
            bool seen = false;
            for (const auto& f : found)
                if (k3aut::same_unit_orbit(s, f) || k3aut::same_unit_orbit(s.negated(), f)) seen = true;
            if (!seen) found.push_back(s);
        }
    }
    std::vector<k3aut::DivisorClass> out;
    for (const auto& s : found) out.push_back({(s.u - b * s.v) / (2 * a), s.v, 2 * k});
    return out;
}

/// Number of beta values `brute_hyperbolic` scans on each side of zero.
inline Integer brute_hyperbolic_span(const Rank2Lattice& l, const Integer& trace_bound)
{
    if (trace_bound < 2) return 0;
    return k3aut::isqrt((trace_bound * trace_bound - 4) * l.c() * l.c() / l.d()) + 1;
}

/// All det +1 integral matrices satisfying the hyperbolic relations with
/// |trace| <= bound, by scanning beta directly.
inline std::set<Mat2> brute_hyperbolic(const Rank2Lattice& l, const Integer& trace_bound)
{
    const Integer& a = l.a();
    const Integer& b = l.b();
    const Integer& c = l.c();
    const Integer d = l.d();
    std::set<Mat2> out;
    if (trace_bound < 2) return out;
    const Integer beta_max = brute_hyperbolic_span(l, trace_bound);
    for (Integer beta = -beta_max; beta <= beta_max; ++beta) {
        const Integer w2 = 4 * c * c + d * beta * beta;
        if (!k3aut::is_square(w2)) continue;
        const Integer w0 = k3aut::isqrt(w2);
        for (const Integer& w : {w0, Integer(-w0)}) {
            if (!k3aut::divides(2 * c, w + b * beta) || !k3aut::divides(c, a * beta) || !k3aut::divides(c, b * beta))
                continue;
            const Integer alpha = (w + b * beta) / (2 * c);
            Mat2 m{alpha, beta, -(a * beta) / c, alpha - (b * beta) / c};
            if (abs(m.trace()) <= trace_bound) out.insert(m);
        }
    }
    return out;
}

/// Lattices (a, b, c) with |a|, |b|, |c| <= r, 0 < d <= dmax and d not a square.
inline std::vector<std::array<long, 3>> small_lattices(long r, long dmax)
{
    std::vector<std::array<long, 3>> out;
    for (long a = -r; a <= r; ++a)
        for (long b = -r; b <= r; ++b)
            for (long c = -r; c <= r; ++c) {
                const long d = b * b - 4 * a * c;
                if (d <= 0 || d > dmax) continue;
                const long s = isqrt64(d);
                if (s * s == d) continue;
                out.push_back({a, b, c});
            }
    return out;
}

} // namespace oracle

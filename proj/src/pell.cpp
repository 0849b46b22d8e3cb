#include "k3aut/pell.hpp"

#include "k3aut/error.hpp"
#include "quadratic_cf.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace k3aut {

namespace {

void require_nonsquare(const Integer& d)
{
    if (d <= 0) throw Error(ErrorCode::InvalidArgument, "d must be positive, got " + to_string(d));
    if (is_square(d)) throw Error(ErrorCode::SquareInput, "d = " + to_string(d) + " is a perfect square");
}

struct SolutionLess {
    bool operator()(const PellSolution& x, const PellSolution& y) const
    {
        const Integer ax = abs(x.v);
        const Integer ay = abs(y.v);
        return std::tie(ax, x.v, x.u) < std::tie(ay, y.v, y.u);
    }
};

// The norm-one unit as a PellSolution with m = 1, and its inverse (= conjugate).
PellSolution unit_inverse(const PellSolution& unit) { return unit.conjugate(); }

// Continued fraction convergents (A_{i-1}, B_{i-1}) of sqrt(d) at the end of
// the first period, together with the period length.
struct PeriodEnd {
    Integer a, b;
    std::size_t length;
};

PeriodEnd sqrt_period_end(const Integer& d)
{
    QuadraticCf cf(d, 0, 1);
    std::size_t i = 0;
    while (true) {
        cf.step();
        ++i;
        if (cf.q() == 1) return {cf.a_prev(), cf.b_prev(), i};
    }
}

// One run of the LMM algorithm: primitive solution of x^2 - d y^2 = m with
// x ≡ z y (mod |m|), if any.
std::optional<PellSolution> lmm_class(const Integer& d, const Integer& m, const Integer& z,
                                      const std::optional<PellSolution>& minus_unit)
{
    const Integer qm = abs(m);
    QuadraticCf cf(d, z, qm);
    std::set<std::pair<Integer, Integer>> seen;
    for (std::size_t i = 0;; ++i) {
        if (i >= 1 && (cf.q() == 1 || cf.q() == -1)) {
            const Integer x = qm * cf.a_prev() - z * cf.b_prev();
            const Integer y = cf.b_prev();
            const PellSolution s = PellSolution::make(x, y, d);
            if (s.m == m) return s;
            if (s.m == -m && minus_unit) return pell_multiply(s, *minus_unit);
            return std::nullopt;
        }
        if (!seen.emplace(cf.p(), cf.q()).second) return std::nullopt;
        cf.step();
    }
}

} // namespace

PellSolution PellSolution::make(Integer u, Integer v, Integer d)
{
    Integer m = u * u - d * v * v;
    return {std::move(u), std::move(v), std::move(d), std::move(m)};
}

SqrtExpansion cf_sqrt_period(const Integer& d)
{
    require_nonsquare(d);
    SqrtExpansion out;
    out.a0 = isqrt(d);
    QuadraticCf cf(d, 0, 1);
    cf.step();
    while (true) {
        out.period.push_back(cf.next_partial_quotient());
        if (cf.q() == 1) break;
        cf.step();
    }
    // the last partial quotient of the period of sqrt(d) is always 2*a0
    return out;
}

std::optional<PellSolution> pell_minus1_fundamental(const Integer& d)
{
    require_nonsquare(d);
    const PeriodEnd end = sqrt_period_end(d);
    if (end.length % 2 == 0) return std::nullopt;
    return PellSolution::make(end.a, end.b, d);
}

PellSolution pell1_fundamental(const Integer& d)
{
    if (d > 0 && is_square(d))
        throw Error(ErrorCode::OnlyTrivial, "d = " + to_string(d) + " is a square: only (±1, 0) solve u^2 - d v^2 = 1");
    require_nonsquare(d);
    const PeriodEnd end = sqrt_period_end(d);
    PellSolution s = PellSolution::make(end.a, end.b, d);
    if (end.length % 2 == 1) s = pell_multiply(s, s);
    return s;
}

PellSolution pell4_fundamental(const Integer& d)
{
    require_nonsquare(d);
    auto best = min_positive_solution(general_pell_orbits(d, 4));
    if (!best) throw Error(ErrorCode::Internal, "no positive solution of u^2 - d v^2 = 4 for d = " + to_string(d));
    return *best;
}

PellSolution pell_multiply(const PellSolution& s, const PellSolution& t)
{
    if (s.d != t.d)
        throw Error(ErrorCode::MismatchedD, "cannot multiply solutions for d = " + to_string(s.d) + " and d = " + to_string(t.d));
    return {s.u * t.u + s.d * s.v * t.v, s.u * t.v + s.v * t.u, s.d, s.m * t.m};
}

std::vector<PellSolution> min_height_elements(const PellSolution& s, const PellSolution& unit)
{
    const PellSolution inv = unit_inverse(unit);
    PellSolution cur = s;
    // |v| is unimodal along the orbit, so walk downhill in whichever direction descends.
    PellSolution up = pell_multiply(cur, unit);
    PellSolution down = pell_multiply(cur, inv);
    if (abs(up.v) < abs(cur.v)) {
        do {
            cur = up;
            up = pell_multiply(cur, unit);
        } while (abs(up.v) < abs(cur.v));
        down = pell_multiply(cur, inv);
    } else if (abs(down.v) < abs(cur.v)) {
        do {
            cur = down;
            down = pell_multiply(cur, inv);
        } while (abs(down.v) < abs(cur.v));
        up = pell_multiply(cur, unit);
    }
    std::vector<PellSolution> out{cur, cur.negated()};
    for (const PellSolution* n : {&up, &down}) {
        if (abs(n->v) == abs(cur.v)) {
            out.push_back(*n);
            out.push_back(n->negated());
        }
    }
    return out;
}

PellSolution canonical_in_orbit(const PellSolution& s, const PellSolution& unit)
{
    auto cands = min_height_elements(s, unit);
    auto key = [](const PellSolution& x) {
        return std::make_tuple(x.u > 0 ? 0 : 1, x.v >= 0 ? 0 : 1);
    };
    return *std::min_element(cands.begin(), cands.end(),
                             [&](const PellSolution& x, const PellSolution& y) { return key(x) < key(y); });
}

bool same_unit_orbit(const PellSolution& s, const PellSolution& t)
{
    if (s.d != t.d || s.m != t.m || s.m == 0) return false;
    // s * conj(t) = (s.u t.u - d s.v t.v) + (s.v t.u - s.u t.v) sqrt d
    const Integer re = s.u * t.u - s.d * s.v * t.v;
    const Integer im = s.v * t.u - s.u * t.v;
    return divides(s.m, re) && divides(s.m, im);
}

OrbitSet general_pell_orbits(const Integer& d, const Integer& m)
{
    require_nonsquare(d);
    if (m == 0) throw Error(ErrorCode::ZeroM, "the norm m must be nonzero");

    OrbitSet out{d, m, {}, pell1_fundamental(d)};
    const auto minus_unit = pell_minus1_fundamental(d);
    const Integer am = abs(m);

    std::set<PellSolution, SolutionLess> reps;
    for (Integer f = 1; f * f <= am; ++f) {
        if (!divides(f * f, m)) continue;
        const Integer mp = m / (f * f);
        const Integer amp = abs(mp);
        // z ranges over (-|m'|/2, |m'|/2]
        const Integer lo = -((amp - 1) / 2);
        const Integer hi = amp / 2;
        for (Integer z = lo; z <= hi; ++z) {
            if (!divides(amp, z * z - d)) continue;
            auto prim = lmm_class(d, mp, z, minus_unit);
            if (!prim) continue;
            PellSolution s{f * prim->u, f * prim->v, d, m};
            reps.insert(canonical_in_orbit(s, out.unit));
        }
    }
    out.representatives.assign(reps.begin(), reps.end());
    return out;
}

std::optional<PellSolution> min_positive_solution(const OrbitSet& orbits)
{
    std::optional<PellSolution> best;
    const PellSolution inv = unit_inverse(orbits.unit);
    for (const auto& r : orbits.representatives) {
        for (const PellSolution& base : {r, r.negated()}) {
            for (const PellSolution& c : {pell_multiply(base, inv), base, pell_multiply(base, orbits.unit)}) {
                if (c.u > 0 && c.v > 0 && (!best || c.v < best->v)) best = c;
            }
        }
    }
    return best;
}

long unit_period_mod(const PellSolution& unit, const Integer& n)
{
    const Integer an = abs(n);
    if (an <= 1) return 1;
    Integer u = mod_floor(unit.u, an), v = mod_floor(unit.v, an);
    long p = 1;
    while (!(mod_floor(u - 1, an) == 0 && v == 0)) {
        const Integer nu = mod_floor(u * unit.u + unit.d * v * unit.v, an);
        v = mod_floor(u * unit.v + v * unit.u, an);
        u = nu;
        ++p;
    }
    return p;
}

std::vector<PellSolution> solutions_below(const OrbitSet& orbits, const Integer& bound)
{
    std::set<PellSolution, SolutionLess> out;
    const PellSolution inv = unit_inverse(orbits.unit);
    for (const auto& r : orbits.representatives) {
        for (const PellSolution& base : {r, r.negated()}) {
            for (const PellSolution* step : {&orbits.unit, &inv}) {
                PellSolution cur = base;
                while (abs(cur.v) <= bound) {
                    out.insert(cur);
                    cur = pell_multiply(cur, *step);
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

} // namespace k3aut

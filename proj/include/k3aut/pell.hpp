#pragma once

#include "k3aut/integer.hpp"

#include <optional>
#include <vector>

namespace k3aut {

/// A solution of u^2 - d v^2 = m, i.e. the element u + v*sqrt(d) of Z[sqrt(d)]
/// with norm m.
struct PellSolution {
    Integer u;
    Integer v;
    Integer d;
    Integer m;

    /// Builds a solution and computes its norm from (u, v, d).
    static PellSolution make(Integer u, Integer v, Integer d);

    bool holds() const { return u * u - d * v * v == m; }
    PellSolution conjugate() const { return {u, -v, d, m}; }
    PellSolution negated() const { return {-u, -v, d, m}; }

    friend bool operator==(const PellSolution& x, const PellSolution& y)
    {
        return x.u == y.u && x.v == y.v && x.d == y.d && x.m == y.m;
    }
};

/// Orbit representatives of {(u, v) : u^2 - d v^2 = m} under multiplication by
/// the norm-one units {±unit^n}. Representatives are in canonical form:
/// minimal |v|, ties broken by u > 0, then v >= 0.
struct OrbitSet {
    Integer d;
    Integer m;
    std::vector<PellSolution> representatives;
    PellSolution unit;
};

/// sqrt(d) = [a0; period...] with the minimal period.
struct SqrtExpansion {
    Integer a0;
    std::vector<Integer> period;
};

SqrtExpansion cf_sqrt_period(const Integer& d);

/// Minimal positive solution of u^2 - d v^2 = 1. Throws OnlyTrivial for square d.
PellSolution pell1_fundamental(const Integer& d);

/// Minimal positive solution of u^2 - d v^2 = -1, if the negative equation is soluble.
std::optional<PellSolution> pell_minus1_fundamental(const Integer& d);

/// Minimal positive solution of u^2 - d v^2 = 4.
PellSolution pell4_fundamental(const Integer& d);

/// Product in Z[sqrt(d)]: (s.u + s.v sqrt d)(t.u + t.v sqrt d). The norm is s.m * t.m.
PellSolution pell_multiply(const PellSolution& s, const PellSolution& t);

OrbitSet general_pell_orbits(const Integer& d, const Integer& m);

/// The elements of the orbit {±s * unit^n} with minimal |v| (at most four:
/// two consecutive powers and their negatives). `unit` must have norm 1.
std::vector<PellSolution> min_height_elements(const PellSolution& s, const PellSolution& unit);

/// Canonical representative of the orbit of s under {±unit^n}.
PellSolution canonical_in_orbit(const PellSolution& s, const PellSolution& unit);

/// True iff s and t (same d and m) differ by a norm-one unit of Z[sqrt(d)].
/// Decided by integrality of s * conj(t) / m, without using any fundamental unit.
bool same_unit_orbit(const PellSolution& s, const PellSolution& t);

/// Smallest solution with u > 0 and v > 0, if the orbit set is non-empty and has one.
std::optional<PellSolution> min_positive_solution(const OrbitSet& orbits);

/// Smallest P >= 1 with unit^P ≡ 1 (mod n), i.e. the period of the Pell
/// multiplication by `unit` acting on pairs (u, v) mod n.
long unit_period_mod(const PellSolution& unit, const Integer& n);

/// Every solution with |v| <= bound, sorted by (|v|, v, u).
std::vector<PellSolution> solutions_below(const OrbitSet& orbits, const Integer& bound);

} // namespace k3aut

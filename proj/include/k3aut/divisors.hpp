#pragma once

#include "k3aut/lattice.hpp"
#include "k3aut/pell.hpp"

#include <optional>
#include <vector>

namespace k3aut {

/// Integer class D = (x, y) of a rank-2 lattice, with its square D^2.
struct DivisorClass {
    Integer x;
    Integer y;
    Integer square;

    friend bool operator==(const DivisorClass& p, const DivisorClass& q)
    {
        return p.x == q.x && p.y == q.y && p.square == q.square;
    }
};

/// Orbit representatives of {D : D^2 = 2k}.
///
/// A class (x, y) corresponds to the solution (z, y) = (2a x + b y, y) of
/// z^2 - d y^2 = 4ak with z ≡ b y (mod 2a). Orbits are taken under ±eta^n,
/// eta the fundamental unit, which acts on the lattice as an isometry.
/// Each representative has minimal |y|, ties broken by x > 0, then y >= 0.
/// Throws ZeroK for k = 0 and SquareDiscriminant for square d.
std::vector<DivisorClass> represent(const Rank2Lattice& lattice, const Integer& k);

/// Walks a class orbit forward: D, eta D, eta^2 D, ...
class ClassOrbitIterator {
public:
    ClassOrbitIterator(const Rank2Lattice& lattice, const DivisorClass& start);

    const DivisorClass& operator*() const { return current_; }
    const DivisorClass* operator->() const { return &current_; }
    ClassOrbitIterator& operator++();

    /// The isometry of the lattice that advances the orbit by one step.
    const Mat2& step_isometry() const { return step_; }

private:
    Mat2 step_;
    DivisorClass current_;
};

/// Primitive isotropic class, present iff d is a perfect square.
std::optional<DivisorClass> has_zero_class(const Rank2Lattice& lattice);

/// A class of square -2, if any. Throws SquareDiscriminant for square d.
std::optional<DivisorClass> minus_two_class(const Rank2Lattice& lattice);
bool has_minus_two_class(const Rank2Lattice& lattice);

struct OrbitPoint {
    long n;
    Integer x;
    Integer y;
    Integer square;
    std::optional<Rational> ratio; // x / y when y != 0
};

/// (x_n, y_n) = M^n D0 for n = 0..steps. Throws ZeroClass for D0 = 0,
/// NotIsometry, and NotHyperbolic when M has finite order.
std::vector<OrbitPoint> orbit_ratio_sequence(const Rank2Lattice& lattice, const Integer& x0, const Integer& y0,
                                             const Mat2& m, long steps);

/// The root r = (-b + sign*sqrt(d)) / 2a of a t^2 + b t + c that the ratios
/// x_n / y_n approach under forward iteration of a hyperbolic det-1 isometry M.
/// Returns sign (+1 or -1).
int attracting_root_sign(const Rank2Lattice& lattice, const Mat2& m);

/// Sign of p + q sqrt(d) for d > 0 non-square, computed exactly.
int sign_quadratic(const Integer& p, const Integer& q, const Integer& d);

} // namespace k3aut

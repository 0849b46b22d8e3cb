#include "k3aut/divisors.hpp"

#include "k3aut/error.hpp"

#include <algorithm>
#include <tuple>

namespace k3aut {

namespace {

void require_nonsquare(const Rank2Lattice& lattice)
{
    if (lattice.square_discriminant())
        throw Error(ErrorCode::SquareDiscriminant,
                    "discriminant " + to_string(lattice.d()) + " is a square; use has_zero_class");
}

auto class_key(const DivisorClass& c)
{
    return std::make_tuple(abs(c.y), c.x > 0 ? 0 : 1, c.y >= 0 ? 0 : 1);
}

// Multiplication of z + y sqrt(d) by u + v sqrt(d), written on (x, y) with
// z = 2a x + b y. Integral for every unit, hence a lattice isometry.
Mat2 unit_isometry(const Rank2Lattice& l, const PellSolution& unit)
{
    return {unit.u - l.b() * unit.v, -2 * l.c() * unit.v, 2 * l.a() * unit.v, unit.u + l.b() * unit.v};
}

} // namespace

int sign_quadratic(const Integer& p, const Integer& q, const Integer& d)
{
    const int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    return p * p > q * q * d ? sp : sq;
}

std::vector<DivisorClass> represent(const Rank2Lattice& lattice, const Integer& k)
{
    if (k == 0) throw Error(ErrorCode::ZeroK, "k = 0: isotropic classes are decided by has_zero_class");
    require_nonsquare(lattice);
    const Integer& a = lattice.a();
    const Integer& b = lattice.b();
    const OrbitSet orbits = general_pell_orbits(lattice.d(), 4 * a * k);

    // The unit acts on classes by an integral isometry, so the condition
    // 2a | z - b y holds for every element of a Pell orbit or for none.
    std::vector<DivisorClass> out;
    for (const auto& rep : orbits.representatives) {
        if (!divides(2 * a, rep.u - b * rep.v)) continue;
        std::vector<DivisorClass> cands;
        for (const auto& s : min_height_elements(rep, orbits.unit))
            cands.push_back({(s.u - b * s.v) / (2 * a), s.v, 2 * k});
        out.push_back(*std::min_element(cands.begin(), cands.end(), [](const auto& p, const auto& q) {
            return class_key(p) < class_key(q);
        }));
    }
    std::sort(out.begin(), out.end(), [](const DivisorClass& p, const DivisorClass& q) {
        const Integer ap = abs(p.y), aq = abs(q.y);
        return std::tie(ap, p.y, p.x) < std::tie(aq, q.y, q.x);
    });
    return out;
}

ClassOrbitIterator::ClassOrbitIterator(const Rank2Lattice& lattice, const DivisorClass& start)
    : step_(unit_isometry(lattice, pell1_fundamental(lattice.d()))), current_(start)
{
}

ClassOrbitIterator& ClassOrbitIterator::operator++()
{
    const Integer x = step_.alpha * current_.x + step_.beta * current_.y;
    current_.y = step_.gamma * current_.x + step_.delta * current_.y;
    current_.x = x;
    return *this;
}

std::optional<DivisorClass> has_zero_class(const Rank2Lattice& lattice)
{
    if (!lattice.square_discriminant()) return std::nullopt;
    // a t^2 + b t + c = 0 at t = x / y = (-b + sqrt d) / 2a
    Integer x = -lattice.b() + isqrt(lattice.d());
    Integer y = 2 * lattice.a();
    const Integer g = gcd(x, y);
    x /= g;
    y /= g;
    return DivisorClass{x, y, 0};
}

std::optional<DivisorClass> minus_two_class(const Rank2Lattice& lattice)
{
    auto reps = represent(lattice, -1);
    if (reps.empty()) return std::nullopt;
    return reps.front();
}

bool has_minus_two_class(const Rank2Lattice& lattice) { return minus_two_class(lattice).has_value(); }

std::vector<OrbitPoint> orbit_ratio_sequence(const Rank2Lattice& lattice, const Integer& x0, const Integer& y0,
                                             const Mat2& m, long steps)
{
    if (x0 == 0 && y0 == 0) throw Error(ErrorCode::ZeroClass, "the seed class must be nonzero");
    if (!is_isometry(lattice, m)) throw Error(ErrorCode::NotIsometry, to_string(m) + " is not an isometry");
    const Integer t = m.trace();
    const bool infinite = m.det() == 1 ? abs(t) > 2 : t != 0;
    if (!infinite) throw Error(ErrorCode::NotHyperbolic, to_string(m) + " has finite order");
    if (steps < 0) throw Error(ErrorCode::InvalidArgument, "number of steps must be non-negative");

    std::vector<OrbitPoint> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    Integer x = x0, y = y0;
    for (long n = 0; n <= steps; ++n) {
        OrbitPoint p{n, x, y, lattice.square(x, y), std::nullopt};
        if (y != 0) p.ratio = Rational(x, y);
        if (p.ratio) p.ratio->canonicalize();
        out.push_back(std::move(p));
        const Integer nx = m.alpha * x + m.beta * y;
        y = m.gamma * x + m.delta * y;
        x = nx;
    }
    return out;
}

int attracting_root_sign(const Rank2Lattice& lattice, const Mat2& m)
{
    if (!is_isometry(lattice, m) || m.det() != 1 || abs(m.trace()) <= 2)
        throw Error(ErrorCode::NotHyperbolic, to_string(m) + " is not a hyperbolic det-1 isometry");
    const Integer two_a = 2 * lattice.a();
    const Integer x = two_a * m.delta - lattice.b() * m.gamma;
    for (int sign : {1, -1}) {
        // |gamma r + delta| > 1  <=>  |x + sign*gamma*sqrt(d)| > 2a
        const Integer q = sign * m.gamma;
        if (sign_quadratic(x - two_a, q, lattice.d()) > 0 || sign_quadratic(x + two_a, q, lattice.d()) < 0)
            return sign;
    }
    throw Error(ErrorCode::Internal, "no attracting fixed point for " + to_string(m));
}

} // namespace k3aut

#include "k3aut/aut.hpp"

#include "k3aut/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace k3aut {

namespace {

void require_nonsquare(const Rank2Lattice& lattice)
{
    if (lattice.square_discriminant())
        throw Error(ErrorCode::SquareDiscriminant,
                    "discriminant " + to_string(lattice.d()) + " is a square: the automorphism group is finite");
}

Integer conic_norm(const Rank2Lattice& l) { return 4 * l.c() * l.c(); }

// ((alpha, beta), (-(a/c) beta, alpha - (b/c) beta)) with alpha = (w + b beta) / 2c.
std::optional<Mat2> hyperbolic_from_conic(const Rank2Lattice& l, const Integer& w, const Integer& beta)
{
    const Integer& a = l.a();
    const Integer& b = l.b();
    const Integer& c = l.c();
    if (!divides(2 * c, w + b * beta) || !divides(c, a * beta) || !divides(c, b * beta)) return std::nullopt;
    const Integer alpha = (w + b * beta) / (2 * c);
    return Mat2{alpha, beta, -(a * beta) / c, alpha - (b * beta) / c};
}

// ((alpha, beta), ((-b alpha + a beta) / c, -alpha)) with alpha = (w + b beta) / 2c.
std::optional<Mat2> involution_from_conic(const Rank2Lattice& l, const Integer& w, const Integer& beta)
{
    const Integer& c = l.c();
    if (!divides(2 * c, w + l.b() * beta)) return std::nullopt;
    const Integer alpha = (w + l.b() * beta) / (2 * c);
    const Integer num = -l.b() * alpha + l.a() * beta;
    if (!divides(c, num)) return std::nullopt;
    return Mat2{alpha, beta, num / c, -alpha};
}

Integer l1_norm(const Mat2& m) { return abs(m.alpha) + abs(m.beta) + abs(m.gamma) + abs(m.delta); }

struct PairCost {
    Integer max_norm, sum_norm;
    Mat2 sigma, tau;

    friend bool operator<(const PairCost& x, const PairCost& y)
    {
        return std::tie(x.max_norm, x.sum_norm, x.sigma, x.tau) < std::tie(y.max_norm, y.sum_norm, y.sigma, y.tau);
    }
};

PairCost pair_cost(const Mat2& sigma, const Mat2& g)
{
    Mat2 tau = sigma * g;
    const Integer ns = l1_norm(sigma), nt = l1_norm(tau);
    return {std::max(ns, nt), ns + nt, sigma, std::move(tau)};
}

// Adjacent pair (sigma0 g^m, sigma0 g^(m+1)) of smallest cost. Entries grow
// exponentially in |m - m*|, so descend and then look a few steps around.
InvolutionPair canonical_pair(const Mat2& sigma0, const Mat2& g)
{
    auto at = [&](long m) { return pair_cost(sigma0 * power(g, m), g); };
    long m = 0;
    PairCost cur = at(0);
    for (int dir : {-1, 1}) {
        for (;;) {
            PairCost next = at(m + dir);
            if (!(next < cur)) break;
            cur = std::move(next);
            m += dir;
        }
    }
    PairCost best = cur;
    for (long j = m - 3; j <= m + 3; ++j) {
        PairCost c = at(j);
        if (c < best) best = std::move(c);
    }
    return {best.sigma, best.tau};
}

} // namespace

bool satisfies_hyperbolic_relations(const Rank2Lattice& l, const Mat2& m)
{
    const Integer& a = l.a();
    const Integer& b = l.b();
    const Integer& c = l.c();
    return c * m.gamma == -a * m.beta && c * m.delta == c * m.alpha - b * m.beta &&
           c * m.alpha * m.alpha - b * m.alpha * m.beta + a * m.beta * m.beta == c;
}

bool satisfies_involution_relations(const Rank2Lattice& l, const Mat2& m)
{
    const Integer& a = l.a();
    const Integer& b = l.b();
    const Integer& c = l.c();
    return m.delta == -m.alpha && c * m.gamma == -b * m.alpha + a * m.beta &&
           c * m.alpha * m.alpha - b * m.alpha * m.beta + a * m.beta * m.beta == c;
}

Mat2 build_h(const Rank2Lattice& lattice)
{
    require_nonsquare(lattice);
    const Integer& d = lattice.d();
    const Integer& c = lattice.c();
    const PellSolution eta = pell1_fundamental(d);
    const PellSolution eta_inv = eta.conjugate();
    const OrbitSet orbits = general_pell_orbits(d, conic_norm(lattice));

    std::optional<Mat2> best;
    Integer best_w;
    for (const auto& rep : orbits.representatives) {
        // Move xi = W + B sqrt(d) into (2|c|, 2|c| eta]; there B > 0 and W > 0.
        PellSolution s = sign_quadratic(rep.u, rep.v, d) < 0 ? rep.negated() : rep;
        while (s.v <= 0) s = pell_multiply(s, eta);
        for (;;) {
            PellSolution t = pell_multiply(s, eta_inv);
            if (t.v <= 0) break;
            s = std::move(t);
        }
        auto m = hyperbolic_from_conic(lattice, sgn(c) * s.u, s.v);
        if (m && (!best || s.u < best_w)) {
            best = std::move(m);
            best_w = s.u;
        }
    }
    if (!best)
        throw Error(ErrorCode::NoHyperbolicIsometry, "no integral hyperbolic isometry found for d = " + to_string(d));
    return *best;
}

std::vector<Mat2> hyperbolic_isometries_below(const Rank2Lattice& lattice, const Integer& trace_bound)
{
    require_nonsquare(lattice);
    if (trace_bound < 2) return {};
    const Integer& c = lattice.c();
    const Integer bound = isqrt((trace_bound * trace_bound - 4) * c * c / lattice.d());
    std::set<Mat2> out;
    for (const auto& s : solutions_below(general_pell_orbits(lattice.d(), conic_norm(lattice)), bound)) {
        auto m = hyperbolic_from_conic(lattice, s.u, s.v);
        if (m && abs(m->trace()) <= trace_bound) out.insert(*m);
    }
    return {out.begin(), out.end()};
}

GeneratorReport generator_infinite(const Rank2Lattice& lattice)
{
    const Mat2 h = build_h(lattice);
    GeneratorReport r;
    r.h = h;
    r.pell4 = PellSolution::make(h.trace() * abs(lattice.c()), h.beta, lattice.d());
    r.action_order = disc_action_order(lattice, h);
    Mat2 p = h;
    for (long j = 1; j <= r.action_order; ++j, p = p * h) {
        const DiscAction act = disc_action(lattice, p);
        if (act == DiscAction::Other) continue;
        r.k = j;
        r.epsilon = act == DiscAction::Plus ? 1 : -1;
        r.generator = p;
        return r;
    }
    throw Error(ErrorCode::Internal, "h^" + std::to_string(r.action_order) + " does not act as identity on A(L)");
}

std::optional<Mat2> find_reflection(const Rank2Lattice& lattice)
{
    require_nonsquare(lattice);
    const Integer& d = lattice.d();
    const Integer& c = lattice.c();
    const PellSolution eta = pell1_fundamental(d);
    // integrality of alpha and gamma depends only on (w, beta) mod 2c^2
    const long period = unit_period_mod(eta, 2 * c * c);
    for (const auto& rep : general_pell_orbits(d, conic_norm(lattice)).representatives) {
        PellSolution s = rep;
        for (long n = 0; n < period; ++n, s = pell_multiply(s, eta)) {
            auto m = involution_from_conic(lattice, s.u, s.v);
            if (!m) continue;
            return preserves_positive_cone(lattice, *m) ? *m : m->negated();
        }
    }
    return std::nullopt;
}

std::vector<Mat2> involutions(const Rank2Lattice& lattice, const GeneratorReport& report)
{
    const auto iota = find_reflection(lattice);
    if (!iota) return {};
    // Every cone-preserving det -1 isometry is iota h^j; conjugation by g = h^k
    // shifts j by 2k, so j in [0, 2k) covers every conjugacy class.
    std::optional<Mat2> first;
    Mat2 p = *iota;
    for (long j = 0; j < 2 * report.k; ++j, p = p * report.h) {
        if (disc_action(lattice, p) == DiscAction::Minus) {
            first = p;
            break;
        }
    }
    if (!first) return {};
    if (report.epsilon != 1)
        throw Error(ErrorCode::Internal, "anti-symplectic involution alongside an anti-symplectic generator");
    const InvolutionPair pair = canonical_pair(*first, report.generator);
    return {pair.sigma, pair.tau};
}

const char* to_string(Variant v) noexcept
{
    switch (v) {
    case Variant::Finite: return "finite";
    case Variant::InfiniteCyclic: return "cyclic";
    case Variant::InfiniteDihedral: return "dihedral";
    }
    return "?";
}

AutClassification classify(const Rank2Lattice& lattice)
{
    AutClassification out;
    if (auto zero = has_zero_class(lattice)) {
        out.witness = FiniteWitness{FiniteWitness::Kind::SquareDiscriminant, *zero};
        return out;
    }
    if (auto root = minus_two_class(lattice)) {
        out.witness = FiniteWitness{FiniteWitness::Kind::MinusTwoClass, *root};
        return out;
    }
    out.report = generator_infinite(lattice);
    const auto invs = involutions(lattice, *out.report);
    if (invs.empty()) {
        out.variant = Variant::InfiniteCyclic;
        return out;
    }
    const Mat2& g = out.report->generator;
    const Mat2 prod = invs[0] * invs[1];
    if (!(prod == g || prod == g.inverse()))
        throw Error(ErrorCode::Internal, "sigma tau = " + to_string(prod) + " is not the generator");
    out.variant = Variant::InfiniteDihedral;
    out.pair = InvolutionPair{invs[0], invs[1]};
    return out;
}

Real spectral_radius(const Mat2& m, mpfr_prec_t bits)
{
    const Integer det = m.det();
    const Integer t = abs(m.trace());
    if (det == 1) {
        if (t <= 2) return Real(Integer(1), bits);
        return (Real(t, bits) + sqrt(Real(Integer(t * t - 4), bits))) / Real(Integer(2), bits);
    }
    if (det == -1) return (Real(t, bits) + sqrt(Real(Integer(t * t + 4), bits))) / Real(Integer(2), bits);
    throw Error(ErrorCode::InvalidArgument, to_string(m) + " is not unimodular");
}

Real entropy(const Mat2& m, mpfr_prec_t bits)
{
    if (m.det() == 1 && abs(m.trace()) <= 2) return Real(Integer(0), bits);
    return log(spectral_radius(m, bits));
}

QuarticLattice lattice_from_quartic(const Integer& degree, const Integer& genus)
{
    if (degree < 1) throw Error(ErrorCode::InvalidArgument, "deg must be at least 1, got " + to_string(degree));
    if (genus < 0) throw Error(ErrorCode::InvalidArgument, "genus must be non-negative, got " + to_string(genus));
    const Integer sq = degree * degree;
    if (8 * (genus - 1) == sq) return {true, std::nullopt};
    if (8 * genus < sq && !(degree == 5 && genus == 3))
        return {false, Rank2Lattice::make(2, degree, genus - 1)};
    throw Error(ErrorCode::NotRealizable, "no smooth quartic contains a curve of degree " + to_string(degree) +
                                              " and genus " + to_string(genus));
}

} // namespace k3aut

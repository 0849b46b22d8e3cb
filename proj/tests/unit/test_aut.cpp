#include "doctest.h"

#include "k3aut/aut.hpp"
#include "k3aut/error.hpp"
#include "oracles.hpp"

#include <set>

using namespace k3aut;

namespace {

void check_error(ErrorCode code, auto&& f)
{
    try {
        f();
        FAIL("expected error " << error_code_name(code));
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

const Mat2 I = Mat2::identity();

} // namespace

TEST_SUITE("aut")
{
    TEST_CASE("build_h examples")
    {
        CHECK(build_h(make_lattice(1, 4, 1)) == Mat2{4, 1, -1, 0});
        CHECK(build_h(make_lattice(2, 6, 2)) == Mat2{3, 1, -1, 0});
        CHECK(build_h(make_lattice(1, 0, -3)) == Mat2{2, 3, 1, 2});
        check_error(ErrorCode::SquareDiscriminant, [] { build_h(make_lattice(1, 3, 2)); });
    }

    TEST_CASE("h is the smallest hyperbolic isometry")
    {
        for (const auto& [a, b, c] : oracle::small_lattices(5, 500)) {
            const auto l = make_lattice(a, b, c);
            const Mat2 h = build_h(l);
            CHECK(is_isometry(l, h));
            CHECK(satisfies_hyperbolic_relations(l, h));
            CHECK(h.det() == 1);
            CHECK(h.trace() > 2);
            CHECK(h.beta > 0);
            CHECK(preserves_positive_cone(l, h));
            if (oracle::brute_hyperbolic_span(l, h.trace()) > 100000) continue;
            // nothing with smaller trace but > 2
            const auto small = oracle::brute_hyperbolic(l, h.trace());
            for (const Mat2& m : small) CHECK((abs(m.trace()) == 2 || abs(m.trace()) == h.trace()));
            CHECK(small.count(h) == 1);
            CHECK(small.count(h.inverse()) == 1);
        }
    }

    TEST_CASE("c = ±1 links the trace of h to the norm-4 Pell unit")
    {
        for (const auto& [a, b, c] : oracle::small_lattices(6, 500)) {
            if (c != 1 && c != -1) continue;
            const auto l = make_lattice(a, b, c);
            if (l.c() != 1 && l.c() != -1) continue;
            const auto rep = generator_infinite(l);
            const PellSolution p4 = pell4_fundamental(l.d());
            CHECK(rep.pell4 == p4);
            CHECK(rep.h.trace() == p4.u);
        }
    }

    TEST_CASE("power closure against direct enumeration")
    {
        int brute_checked = 0;
        for (const auto& [a, b, c] : oracle::small_lattices(4, 300)) {
            const auto l = make_lattice(a, b, c);
            const Mat2 h = build_h(l);
            const Integer bound = power(h, 5).trace();
            std::set<Mat2> expected;
            for (long j = -5; j <= 5; ++j) {
                expected.insert(power(h, j));
                expected.insert(power(h, j).negated());
            }
            const auto found = hyperbolic_isometries_below(l, bound);
            CHECK(std::set<Mat2>(found.begin(), found.end()) == expected);
            CHECK(std::is_sorted(found.begin(), found.end()));
            if (oracle::brute_hyperbolic_span(l, bound) <= 200000) {
                CHECK(oracle::brute_hyperbolic(l, bound) == expected);
                ++brute_checked;
            }
        }
        CHECK(brute_checked > 20);
    }

    TEST_CASE("-h reverses the cone")
    {
        for (const auto& [a, b, c] : oracle::small_lattices(4, 300)) {
            const auto l = make_lattice(a, b, c);
            const Mat2 h = build_h(l);
            CHECK(preserves_positive_cone(l, h));
            CHECK_FALSE(preserves_positive_cone(l, h.negated()));
        }
    }

    TEST_CASE("generator on the (2, 2n, 2) family")
    {
        for (long n = 3; n <= 20; ++n) {
            const auto l = make_lattice(2, 2 * n, 2);
            const auto rep = generator_infinite(l);
            const long want_k = n == 3 ? 3 : (n % 2 == 0 ? 4 : 6);
            CHECK_MESSAGE(rep.k == want_k, "n=" << n);
            CHECK(rep.epsilon == (n == 3 ? -1 : 1));
            CHECK(rep.generator == power(rep.h, rep.k));
            CHECK(rep.h == Mat2{n, 1, -1, 0});
            const auto cl = classify(l);
            CHECK(cl.variant == Variant::InfiniteCyclic);
            CHECK(involutions(l, rep).empty());
            CHECK_FALSE(cl.pair);
        }
        const auto rep = generator_infinite(make_lattice(2, 6, 2));
        CHECK(rep.generator == Mat2{21, 8, -8, -3});
        CHECK(disc_action(make_lattice(2, 6, 2), rep.generator) == DiscAction::Minus);
    }

    TEST_CASE("involutions on the (1, n, 1) family")
    {
        for (long n = 4; n <= 30; ++n) {
            const auto l = make_lattice(1, n, 1);
            const auto cl = classify(l);
            REQUIRE(cl.variant == Variant::InfiniteDihedral);
            REQUIRE(cl.pair);
            CHECK(cl.pair->sigma == Mat2{1, n, 0, -1});
            CHECK(cl.pair->tau == Mat2{-1, 0, n, 1});
            const Mat2 h2 = power(cl.report->h, 2);
            CHECK(cl.pair->sigma * cl.pair->tau == h2);
            CHECK(disc_action(l, h2) == DiscAction::Plus);
            CHECK(cl.report->generator == h2);
        }
    }

    TEST_CASE("involution algebra on all small lattices")
    {
        for (const auto& [a, b, c] : oracle::small_lattices(5, 500)) {
            const auto l = make_lattice(a, b, c);
            const auto cl = classify(l);
            if (cl.variant == Variant::Finite) {
                REQUIRE(cl.witness);
                CHECK(cl.witness->kind == FiniteWitness::Kind::MinusTwoClass);
                CHECK(l.square(cl.witness->divisor.x, cl.witness->divisor.y) == -2);
                continue;
            }
            CHECK_FALSE(has_minus_two_class(l));
            REQUIRE(cl.report);
            const auto& rep = *cl.report;
            const Mat2& h = rep.h;
            CHECK(rep.generator == power(h, rep.k));
            CHECK(disc_action(l, rep.generator) == (rep.epsilon == 1 ? DiscAction::Plus : DiscAction::Minus));
            for (long j = 1; j < rep.k; ++j) CHECK(disc_action(l, power(h, j)) == DiscAction::Other);
            CHECK(rep.pell4.holds());
            CHECK(rep.pell4.m == 4 * l.c() * l.c());
            const auto inv = involutions(l, rep);
            if (cl.variant == Variant::InfiniteCyclic) {
                CHECK(inv.empty());
                // no anti-symplectic reflection in any coset
                if (auto r = find_reflection(l))
                    for (long j = 0; j < 2 * rep.k; ++j) CHECK(disc_action(l, *r * power(h, j)) != DiscAction::Minus);
                continue;
            }
            REQUIRE(inv.size() == 2);
            REQUIRE(cl.pair);
            CHECK(cl.pair->sigma == inv[0]);
            CHECK(cl.pair->tau == inv[1]);
            CHECK(rep.epsilon == 1);
            for (const Mat2& s : inv) {
                CHECK(s * s == I);
                CHECK(s.det() == -1);
                CHECK(s.trace() == 0);
                CHECK(is_isometry(l, s));
                CHECK(satisfies_involution_relations(l, s));
                CHECK(preserves_positive_cone(l, s));
                CHECK(disc_action(l, s) == DiscAction::Minus);
                CHECK(s * h * s == h.inverse());
                CHECK(entropy(s).to_double() == 0.0);
            }
            const Mat2 st = inv[0] * inv[1];
            CHECK((st == rep.generator || st == rep.generator.inverse()));
        }
    }

    TEST_CASE("finite witnesses")
    {
        const auto sq = classify(make_lattice(1, 3, 2));
        CHECK(sq.variant == Variant::Finite);
        REQUIRE(sq.witness);
        CHECK(sq.witness->kind == FiniteWitness::Kind::SquareDiscriminant);
        CHECK(sq.witness->divisor.square == 0);
        const auto m2 = classify(make_lattice(1, 3, 1));
        CHECK(m2.variant == Variant::Finite);
        REQUIRE(m2.witness);
        CHECK(m2.witness->kind == FiniteWitness::Kind::MinusTwoClass);
        CHECK(m2.witness->divisor == DivisorClass{1, -1, -2});
        CHECK(std::string(to_string(Variant::Finite)) == "finite");
        CHECK(std::string(to_string(Variant::InfiniteCyclic)) == "cyclic");
        CHECK(std::string(to_string(Variant::InfiniteDihedral)) == "dihedral");
    }

    TEST_CASE("entropy values")
    {
        const Real e = entropy({4, 1, -1, 0});
        CHECK(std::abs(e.to_double() - 1.3169578969248167) < 1e-12);
        CHECK(e.to_string(10) == "1.316957897");
        CHECK(entropy(I).to_double() == 0.0);
        CHECK(entropy(I.negated()).to_double() == 0.0);
        CHECK(entropy({0, 1, -1, 0}).to_double() == 0.0);
        CHECK(entropy({1, 4, 0, -1}).to_double() == 0.0);
        CHECK(entropy({-1, 0, 4, 1}).to_double() == 0.0);
        CHECK(std::abs(spectral_radius({4, 1, -1, 0}).to_double() - 3.7320508075688772) < 1e-12);
        // det -1 with nonzero trace: golden ratio
        CHECK(std::abs(entropy({1, 1, 1, 0}).to_double() - 0.48121182505960347) < 1e-12);
        check_error(ErrorCode::InvalidArgument, [] { entropy({2, 0, 0, 1}); });
        // entropy of h^n is n entropy(h)
        const Mat2 h{4, 1, -1, 0};
        for (long n = 1; n <= 10; ++n)
            CHECK(std::abs(entropy(power(h, n)).to_double() - n * 1.3169578969248167) < 1e-9);
    }

    TEST_CASE("quartic builder gates")
    {
        check_error(ErrorCode::NotRealizable, [] { lattice_from_quartic(5, 3); });
        const auto deg = lattice_from_quartic(4, 3);
        CHECK(deg.degenerate);
        CHECK_FALSE(deg.lattice);
        const auto q = lattice_from_quartic(6, 3);
        CHECK_FALSE(q.degenerate);
        REQUIRE(q.lattice);
        CHECK(q.lattice->input_a() == 2);
        CHECK(q.lattice->input_b() == 6);
        CHECK(q.lattice->input_c() == 2);
        const auto cl = classify(*q.lattice);
        CHECK(cl.variant == Variant::InfiniteCyclic);
        CHECK(cl.report->k == 3);
        CHECK(cl.report->epsilon == -1);
        check_error(ErrorCode::NotRealizable, [] { lattice_from_quartic(2, 3); });
        check_error(ErrorCode::InvalidArgument, [] { lattice_from_quartic(0, 3); });
        check_error(ErrorCode::InvalidArgument, [] { lattice_from_quartic(4, -1); });
    }
}

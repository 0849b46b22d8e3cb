#include "k3aut/lattice.hpp"

#include "k3aut/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>
#include <utility>

namespace k3aut {

namespace {

void require_isometry(const Rank2Lattice& lattice, const Mat2& m)
{
    if (!is_isometry(lattice, m))
        throw Error(ErrorCode::NotIsometry, to_string(m) + " is not an isometry of the lattice");
}

void swap_rows(Mat2& m)
{
    std::swap(m.alpha, m.gamma);
    std::swap(m.beta, m.delta);
}

void swap_cols(Mat2& m)
{
    std::swap(m.alpha, m.beta);
    std::swap(m.gamma, m.delta);
}

// First primitive (x, y) with a x^2 + b x y + c y^2 > 0, scanning shells of
// growing max(|x|, |y|). Terminates because the form is indefinite.
std::pair<Integer, Integer> positive_vector(const Integer& a, const Integer& b, const Integer& c)
{
    for (long r = 1;; ++r) {
        for (long y = 0; y <= r; ++y) {
            for (long x = -r; x <= r; ++x) {
                if (std::max(std::abs(x), y) != r) continue;
                if (y == 0 && x <= 0) continue;
                if (std::gcd(x, y) != 1) continue;
                const Integer X = x, Y = y;
                if (a * X * X + b * X * Y + c * Y * Y > 0) return {X, Y};
            }
        }
    }
}

} // namespace

Mat2 Mat2::inverse() const
{
    const Integer dt = det();
    if (dt == 1) return adjugate();
    if (dt == -1) return adjugate().negated();
    throw Error(ErrorCode::InvalidArgument, "matrix " + to_string(*this) + " is not unimodular");
}

bool operator<(const Mat2& x, const Mat2& y)
{
    return std::tie(x.alpha, x.beta, x.gamma, x.delta) < std::tie(y.alpha, y.beta, y.gamma, y.delta);
}

Mat2 power(const Mat2& x, long n)
{
    Mat2 base = n < 0 ? x.inverse() : x;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Mat2 out;
    while (e) {
        if (e & 1u) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

std::string to_string(const Mat2& m)
{
    return "((" + to_string(m.alpha) + "," + to_string(m.beta) + "),(" + to_string(m.gamma) + "," +
           to_string(m.delta) + "))";
}

Rank2Lattice Rank2Lattice::make(const Integer& a, const Integer& b, const Integer& c)
{
    const Integer d = b * b - 4 * a * c;
    if (d <= 0) throw Error(ErrorCode::Degenerate, "degenerate: discriminant " + to_string(d));

    Rank2Lattice l;
    l.in_a_ = a;
    l.in_b_ = b;
    l.in_c_ = c;
    l.d_ = d;
    l.square_ = is_square(d);
    if (a > 0) {
        l.a_ = a;
        l.b_ = b;
        l.c_ = c;
    } else if (c > 0) {
        l.basis_ = {0, 1, 1, 0};
        l.a_ = c;
        l.b_ = b;
        l.c_ = a;
    } else {
        auto [x, y] = positive_vector(a, b, c);
        // complete (x, y) to a basis: x t - y s = 1
        const ExtGcd e = ext_gcd(x, y);
        const Integer s = -e.t;
        const Integer t = e.s;
        l.basis_ = {x, s, y, t};
        l.a_ = a * x * x + b * x * y + c * y * y;
        l.b_ = 2 * a * x * s + b * (x * t + y * s) + 2 * c * y * t;
        l.c_ = a * s * s + b * s * t + c * t * t;
    }
    return l;
}

Mat2 Rank2Lattice::to_input_basis(const Mat2& m) const
{
    return basis_ * m * basis_.inverse();
}

bool is_isometry(const Rank2Lattice& lattice, const Mat2& m)
{
    const Mat2 q = lattice.gram();
    return m.transposed() * q * m == q;
}

const char* to_string(DiscAction e) noexcept
{
    switch (e) {
    case DiscAction::Plus: return "+1";
    case DiscAction::Minus: return "-1";
    case DiscAction::Other: return "other";
    }
    return "?";
}

DiscAction disc_action(const Rank2Lattice& lattice, const Mat2& m)
{
    require_isometry(lattice, m);
    // Q^-1 = adj(Q) / det(Q) and det(Q) = -d
    const Mat2 adj = lattice.gram().adjugate();
    const Integer& d = lattice.d();
    auto integral = [&](const Mat2& x) {
        const Mat2 p = x * adj;
        return divides(d, p.alpha) && divides(d, p.beta) && divides(d, p.gamma) && divides(d, p.delta);
    };
    if (integral({m.alpha - 1, m.beta, m.gamma, m.delta - 1})) return DiscAction::Plus;
    if (integral({m.alpha + 1, m.beta, m.gamma, m.delta + 1})) return DiscAction::Minus;
    return DiscAction::Other;
}

SmithForm smith_normal_form(const Mat2& input)
{
    Mat2 a = input, u, v;
    auto reduce_first = [&]() {
        // Move a smallest nonzero entry to (0,0).
        Integer best = 0;
        int bi = 0, bj = 0;
        const Integer* e[2][2] = {{&a.alpha, &a.beta}, {&a.gamma, &a.delta}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (*e[i][j] != 0 && (best == 0 || abs(*e[i][j]) < best)) {
                    best = abs(*e[i][j]);
                    bi = i;
                    bj = j;
                }
        if (bi == 1) {
            swap_rows(a);
            swap_rows(u);
        }
        if (bj == 1) {
            swap_cols(a);
            swap_cols(v);
        }
    };
    while (!(a.alpha == 0 && a.beta == 0 && a.gamma == 0 && a.delta == 0)) {
        reduce_first();
        // row1 -= q row0 ; col1 -= q col0
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a.gamma.get_mpz_t(), a.alpha.get_mpz_t());
        a.gamma -= q * a.alpha;
        a.delta -= q * a.beta;
        u.gamma -= q * u.alpha;
        u.delta -= q * u.beta;
        mpz_tdiv_q(q.get_mpz_t(), a.beta.get_mpz_t(), a.alpha.get_mpz_t());
        a.beta -= q * a.alpha;
        a.delta -= q * a.gamma;
        v.beta -= q * v.alpha;
        v.delta -= q * v.gamma;
        if (a.gamma != 0 || a.beta != 0) continue;
        if (divides(a.alpha, a.delta)) break;
        // row0 += row1 brings delta into the pivot row
        a.alpha += a.gamma;
        a.beta += a.delta;
        u.alpha += u.gamma;
        u.beta += u.delta;
    }
    if (a.alpha < 0) {
        a.alpha = -a.alpha;
        u.alpha = -u.alpha;
        u.beta = -u.beta;
    }
    if (a.delta < 0) {
        a.delta = -a.delta;
        u.gamma = -u.gamma;
        u.delta = -u.delta;
    }
    return {u, a.alpha, a.delta, v};
}

DiscGroup disc_group_snf(const Rank2Lattice& lattice)
{
    const SmithForm s = smith_normal_form(lattice.gram());
    return {s.d1, s.d2};
}

bool DiscGroupMap::is_scalar(int epsilon) const
{
    return divides(d1, action.alpha - epsilon) && divides(d1, action.beta) && divides(d2, action.gamma) &&
           divides(d2, action.delta - epsilon);
}

DiscGroupMap disc_action_oracle(const Rank2Lattice& lattice, const Mat2& m)
{
    require_isometry(lattice, m);
    const SmithForm s = smith_normal_form(lattice.gram());
    Mat2 act = s.u * m.inverse().transposed() * s.u.inverse();
    act.alpha = mod_floor(act.alpha, s.d1);
    act.beta = mod_floor(act.beta, s.d1);
    act.gamma = mod_floor(act.gamma, s.d2);
    act.delta = mod_floor(act.delta, s.d2);
    return {s.d1, s.d2, act};
}

long disc_action_order(const Rank2Lattice& lattice, const Mat2& m)
{
    const DiscGroupMap g = disc_action_oracle(lattice, m);
    DiscGroupMap cur = g;
    long n = 1;
    while (!cur.is_identity()) {
        Mat2 p = cur.action * g.action;
        cur.action = {mod_floor(p.alpha, g.d1), mod_floor(p.beta, g.d1), mod_floor(p.gamma, g.d2),
                      mod_floor(p.delta, g.d2)};
        ++n;
    }
    return n;
}

bool preserves_positive_cone(const Rank2Lattice& lattice, const Mat2& m)
{
    require_isometry(lattice, m);
    // B(M e1, e1) = 2a alpha + b gamma; positive vectors in one cone pair positively
    return 2 * lattice.a() * m.alpha + lattice.b() * m.gamma > 0;
}

} // namespace k3aut

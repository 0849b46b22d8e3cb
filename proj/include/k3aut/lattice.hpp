#pragma once

#include "k3aut/integer.hpp"

#include <string>

namespace k3aut {

/// Integer 2x2 matrix ((alpha, beta), (gamma, delta)), acting on column vectors.
struct Mat2 {
    Integer alpha = 1, beta = 0, gamma = 0, delta = 1;

    static Mat2 identity() { return {}; }

    Integer det() const { return alpha * delta - beta * gamma; }
    Integer trace() const { return alpha + delta; }
    Mat2 transposed() const { return {alpha, gamma, beta, delta}; }
    Mat2 negated() const { return {-alpha, -beta, -gamma, -delta}; }
    Mat2 adjugate() const { return {delta, -beta, -gamma, alpha}; }
    /// Exact inverse; only valid for det = ±1.
    Mat2 inverse() const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y)
    {
        return {x.alpha * y.alpha + x.beta * y.gamma, x.alpha * y.beta + x.beta * y.delta,
                x.gamma * y.alpha + x.delta * y.gamma, x.gamma * y.beta + x.delta * y.delta};
    }
    friend bool operator==(const Mat2& x, const Mat2& y)
    {
        return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma && x.delta == y.delta;
    }
    friend bool operator<(const Mat2& x, const Mat2& y);
};

/// x^n for any integer n (negative powers need det = ±1).
Mat2 power(const Mat2& x, long n);

std::string to_string(const Mat2& m);

/// An isometry of a rank-2 lattice, stored as its matrix in the lattice basis.
using Isometry2 = Mat2;

/// Even lattice with Gram matrix ((2a, b), (b, 2c)) and d = b^2 - 4ac > 0.
///
/// The stored coefficients are normalized so that a > 0: when the input has
/// a <= 0 the basis is changed and the change of basis P is kept, so that the
/// normalized Gram matrix is P^T Q_input P and a matrix M in the normalized
/// basis reads P M P^-1 in the input basis.
class Rank2Lattice {
public:
    /// Throws Error(Degenerate) when b^2 - 4ac <= 0.
    static Rank2Lattice make(const Integer& a, const Integer& b, const Integer& c);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }
    bool square_discriminant() const { return square_; }

    const Integer& input_a() const { return in_a_; }
    const Integer& input_b() const { return in_b_; }
    const Integer& input_c() const { return in_c_; }
    const Mat2& basis() const { return basis_; }
    bool normalized_from_input() const { return !(basis_ == Mat2::identity()); }

    Mat2 gram() const { return {2 * a_, b_, b_, 2 * c_}; }

    /// The bilinear form B(u, v) = u^T Q v.
    Integer pairing(const Integer& x1, const Integer& y1, const Integer& x2, const Integer& y2) const
    {
        return 2 * a_ * x1 * x2 + b_ * (x1 * y2 + y1 * x2) + 2 * c_ * y1 * y2;
    }
    /// D^2 = 2(a x^2 + b x y + c y^2).
    Integer square(const Integer& x, const Integer& y) const { return pairing(x, y, x, y); }

    Mat2 to_input_basis(const Mat2& m) const;

private:
    Integer a_, b_, c_, d_;
    Integer in_a_, in_b_, in_c_;
    Mat2 basis_;
    bool square_ = false;
};

inline Rank2Lattice make_lattice(const Integer& a, const Integer& b, const Integer& c)
{
    return Rank2Lattice::make(a, b, c);
}

bool is_isometry(const Rank2Lattice& lattice, const Mat2& m);

enum class DiscAction { Plus, Minus, Other };

const char* to_string(DiscAction e) noexcept;

/// How an isometry acts on the discriminant group A(L) = L*/L: +1 when
/// (M - I) Q^-1 is integral, -1 when (M + I) Q^-1 is integral, otherwise Other.
/// +1 wins when both hold (A(L) of exponent <= 2).
DiscAction disc_action(const Rank2Lattice& lattice, const Mat2& m);

/// U * A * V = diag(d1, d2) with U, V unimodular, 0 <= d1 | d2.
struct SmithForm {
    Mat2 u;
    Integer d1, d2;
    Mat2 v;
};

SmithForm smith_normal_form(const Mat2& a);

/// Invariant factors of A(L) = Z/d1 x Z/d2 (d1 | d2, d1 * d2 = d).
struct DiscGroup {
    Integer d1, d2;
};

DiscGroup disc_group_snf(const Rank2Lattice& lattice);

/// The automorphism of A(L) = Z/d1 x Z/d2 induced by an isometry, in Smith
/// coordinates. Row i of `action` is reduced modulo d_i.
struct DiscGroupMap {
    Integer d1, d2;
    Mat2 action;

    bool is_scalar(int epsilon) const;
    bool is_identity() const { return is_scalar(1); }
};

/// Independent route to disc_action: transports M to Z^2 / Q Z^2 (where it acts
/// as M^-T) and then to Smith coordinates.
DiscGroupMap disc_action_oracle(const Rank2Lattice& lattice, const Mat2& m);

/// Order of the induced automorphism of A(L).
long disc_action_order(const Rank2Lattice& lattice, const Mat2& m);

/// Whether M maps the positive cone containing (1, 0) to itself, decided by
/// the sign of B(M e1, e1).
bool preserves_positive_cone(const Rank2Lattice& lattice, const Mat2& m);

} // namespace k3aut

#pragma once

#include "k3aut/divisors.hpp"
#include "k3aut/lattice.hpp"
#include "k3aut/pell.hpp"
#include "k3aut/real.hpp"

#include <optional>
#include <vector>

namespace k3aut {

/// alpha, beta, gamma, delta satisfy gamma = -(a/c) beta, delta = alpha - (b/c) beta
/// and alpha^2 - (b/c) alpha beta + (a/c) beta^2 = 1 (checked multiplied through by c).
bool satisfies_hyperbolic_relations(const Rank2Lattice& lattice, const Mat2& m);

/// delta = -alpha, gamma = -(b/c) alpha + (a/c) beta, alpha^2 - (b/c) alpha beta + (a/c) beta^2 = 1.
bool satisfies_involution_relations(const Rank2Lattice& lattice, const Mat2& m);

/// The smallest hyperbolic isometry h of the lattice: det 1, positive trace,
/// minimal spectral radius > 1. Of the pair {h, h^-1} the one with beta > 0 is
/// returned.
///
/// Integral solutions of the relations are the solutions (w, beta) of
/// w^2 - d beta^2 = 4c^2 (w = 2c alpha - b beta) with 2c | w + b beta,
/// c | a beta and c | b beta; their eigenvalues (w + beta sqrt d) / 2c form a
/// group containing the Pell unit, so one element per Pell orbit in
/// (1, eta] is enough to find the smallest.
Mat2 build_h(const Rank2Lattice& lattice);

struct GeneratorReport {
    Mat2 h;
    long k = 0;            ///< minimal power with h^k acting as ±id on A(L)
    int epsilon = 0;       ///< +1 symplectic, -1 anti-symplectic
    Mat2 generator;        ///< h^k
    PellSolution pell4;    ///< (trace(h) |c|, beta(h)) solving w^2 - d beta^2 = 4c^2
    long action_order = 0; ///< order of h on A(L); bounds the search for k
};

GeneratorReport generator_infinite(const Rank2Lattice& lattice);

/// Anti-symplectic cone-preserving involutions up to conjugation by the
/// generator g. In the dihedral case there are exactly two classes and the
/// result is {sigma, tau} with tau = sigma * g. Of the adjacent pairs
/// (sigma g^m, sigma g^(m+1)) the one with the smallest entries is chosen:
/// smallest max(|sigma|_1, |tau|_1), then smallest |sigma|_1 + |tau|_1, then
/// lexicographically smallest. Empty when there is no such involution.
std::vector<Mat2> involutions(const Rank2Lattice& lattice, const GeneratorReport& report);

/// A cone-preserving determinant -1 isometry of the lattice, if there is one.
/// Every such isometry is an involution (trace 0).
std::optional<Mat2> find_reflection(const Rank2Lattice& lattice);

/// Every integral matrix satisfying the hyperbolic relations with
/// |trace| <= trace_bound, sorted. Found by walking the Pell orbits of
/// w^2 - d beta^2 = 4c^2.
std::vector<Mat2> hyperbolic_isometries_below(const Rank2Lattice& lattice, const Integer& trace_bound);

struct InvolutionPair {
    Mat2 sigma;
    Mat2 tau;
};

enum class Variant { Finite, InfiniteCyclic, InfiniteDihedral };

const char* to_string(Variant v) noexcept;

struct FiniteWitness {
    enum class Kind { SquareDiscriminant, MinusTwoClass };
    Kind kind;
    DivisorClass divisor; ///< isotropic class or class of square -2
};

struct AutClassification {
    Variant variant = Variant::Finite;
    std::optional<FiniteWitness> witness;
    std::optional<GeneratorReport> report;
    std::optional<InvolutionPair> pair;
};

AutClassification classify(const Rank2Lattice& lattice);

/// log of the spectral radius of M, at `bits` of precision. For det 1 this is
/// log((|t| + sqrt(t^2 - 4)) / 2) when |t| > 2 and 0 otherwise; for det -1 it is
/// log((|t| + sqrt(t^2 + 4)) / 2), which is 0 for involutions.
Real entropy(const Mat2& m, mpfr_prec_t bits = Real::default_bits);

/// Spectral radius of M (same conventions as `entropy`).
Real spectral_radius(const Mat2& m, mpfr_prec_t bits = Real::default_bits);

/// Lattice generated by a hyperplane class H and a smooth curve C of the given
/// degree and genus on a quartic surface: ((4, deg), (deg, 2 genus - 2)).
struct QuarticLattice {
    bool degenerate = false; ///< genus = deg^2/8 + 1: discriminant zero, finite group
    std::optional<Rank2Lattice> lattice;
};

/// Throws NotRealizable when no smooth quartic contains such a curve.
QuarticLattice lattice_from_quartic(const Integer& degree, const Integer& genus);

} // namespace k3aut

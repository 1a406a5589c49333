#pragma once

#include "wigstat/statistics.hpp"
#include "wigstat/wigner.hpp"

namespace wig {

// Centered complex Gaussian orbital psi(x) = (d/pi)^{1/4}
// exp(-d x^2 / 2 - i b d x^2 / 2); d is the inverse squared width, b the
// chirp.
struct GaussianOrbital {
    double d = 1.0;
    double b = 0.0;
};

GaussianOrbital make_orbital(double d, double b);

// Derived parameters of the interference term between two orbitals. The real
// part of the exponent matrix [[A, B], [B, 1/d_jk]] is positive definite for
// all admissible orbitals.
struct InterferenceParams {
    cplx d_jk, b_jk, A_jk, B_jk;

    static InterferenceParams from(const GaussianOrbital& j, const GaussianOrbital& k);
};

// Closed-form evaluator of the interference phase-space term
//   W_jk(x,p) = d_j^{1/4} d_k^{1/4} / (pi sqrt(d_jk))
//               * exp(-A_jk x^2 - 2 B_jk x p - p^2 / d_jk),
// with the principal branch of sqrt(d_jk) (Re d_jk > 0 always). Satisfies
// W_kj = conj(W_jk) pointwise; j = k gives the real Gaussian pure state.
class InterferenceWigner {
  public:
    InterferenceWigner(const GaussianOrbital& j, const GaussianOrbital& k);

    cplx operator()(double x, double p) const;
    const InterferenceParams& params() const { return p_; }

  private:
    InterferenceParams p_;
    cplx prefactor_;
};

InterferenceWigner interference_wigner(const GaussianOrbital& j, const GaussianOrbital& k);

cplx orbital_wavefunction(const GaussianOrbital& o, double x);

// Per-body sampling grid for 2-body phase-space states. The default
// momentum spacing pi/(2 n dx) is the one the statistics checks require
// (transformed slices then share the populated momentum grid); dp can be
// overridden for pure-quadrature work where a wider momentum box matters
// more than swap-compatibility.
struct PairGrid {
    int n_points = 64;
    double dx = 0.0;
    double dp = 0.0;  // 0 = pi / (2 n dx)

    Axis position_axis() const;
    Axis momentum_axis() const;
};

// Balanced grid for a set of frequency scales: dx = sqrt(pi / (2 n f)) with
// f the geometric mean, which equalizes the position- and momentum-side
// boundary decay.
PairGrid balanced_pair_grid(std::span<const double> frequencies, int n_points = 64);
PairGrid pair_grid_for(const GaussianOrbital& a, const GaussianOrbital& b, int n_points = 64);

// Exchange-(anti)symmetrized pair quasidensity from two orbitals:
//   W proportional to W11 W22 + W22 W11 + sign (W12 W21 + W21 W12)
// over the two bodies, normalized to unit integral. sign must be +1 or -1;
// sign = -1 with identical orbitals is the vanishing state and throws.
WignerFunction pair_quasidensity(const GaussianOrbital& o1, const GaussianOrbital& o2, int sign,
                                 const PairGrid& grid, Exec exec = default_exec());

// Residual of the interference cross identity on the central extracule
// slice (R = P = 0): transforming lambda_jjkk over the relative coordinate
// against the swapped transform of lambda_jkkj, where
// lambda_ijkl(R,r;P,p) = W_ij(x1,p1) W_kl(x2,p2). Requires distinct
// orbitals for the nontrivial case; identical orbitals give 0 trivially.
struct Grid2 {
    int n_points = 256;
    double dr = 0.0625;
};
double lambda_identity_residual(const GaussianOrbital& j, const GaussianOrbital& k,
                                const Grid2& grid, Exec exec = default_exec());

}  // namespace wig

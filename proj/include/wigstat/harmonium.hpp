#pragma once

#include "wigstat/gaussian.hpp"
#include "wigstat/statistics.hpp"

namespace wig {

// Two particles in a harmonic trap of stiffness k with a harmonic
// inter-particle coupling delta; in mean/relative coordinates the problem
// splits into independent oscillators with frequencies nu = sqrt(k) and
// mu = sqrt(k - delta). delta < 0 (attraction) is allowed, only k - delta > 0
// is required.
struct HarmoniumParams {
    double k = 1.0;
    double delta = 0.0;

    double nu() const;
    double mu() const;
};

HarmoniumParams make_harmonium(double k, double delta);

struct EigenIndex {
    int n = 0;  // extracule quantum number
    int m = 0;  // intracule quantum number; parity of m fixes the statistics
};

// Laguerre polynomial L_m(x) by the upward three-term recurrence
// (m+1) L_{m+1} = (2m+1-x) L_m - m L_{m-1}; stable for x >= 0 at the orders
// used here.
double laguerre(int m, double x);

// Closed-form eigenstate quasidensity in extracule/intracule coordinates:
//   W_n(R,P) W_m(r,p),  W_n(R,P) = ((-1)^n / pi) L_n(4 H_R / nu) e^{-2 H_R / nu}
// with H_R = (P^2 + nu^2 R^2)/2, and the analogous factor in (mu, H_r).
class HarmoniumWigner {
  public:
    HarmoniumWigner(const HarmoniumParams& params, const EigenIndex& idx);

    double operator()(double R, double r, double P, double p) const;
    double extracule_factor(double R, double P) const;
    double intracule_factor(double r, double p) const;

  private:
    HarmoniumParams params_;
    EigenIndex idx_;
};

// Samples the eigenstate on per-body grids (x1, x2, p1, p2) compatible with
// the statistics checks.
WignerFunction sample_eigen_wigner(const HarmoniumParams& params, const EigenIndex& idx,
                                   const PairGrid& grid, Exec exec = default_exec());

PairGrid harmonium_grid(const HarmoniumParams& params, int n_points = 64);

// Signed partial transform of the intracule factor,
//   Gamma_m(v,p) = (-1)^m integral W_m(r,p) e^{2ivr} dr,
// sampled on the (v, p) grid dual-matched to `grid`.
SampledField gamma(int m, double mu, const Grid2& grid, Exec exec = default_exec());

// sup |Gamma_m(v,p) -/+ Gamma_m(p,v)| / sup |Gamma_m| with the sign fixed by
// the parity of m (minus for even m, plus for odd m in the difference).
double gamma_parity_residual(int m, double mu, const Grid2& grid, Exec exec = default_exec());

// Compares the truncated series sum_{m<=M} Gamma_m(v,p) x^m against the
// closed form (pi mu (1-x^2))^{-1/2}
//   exp(-((1+x)/(1-x)) p^2/mu - ((1-x)/(1+x)) v^2/mu).
// Requires 0 <= x < 1; the x = 0 boundary degenerates to the Gamma_0 check.
double generating_function_residual(double mu, double x, int M, const Grid2& grid,
                                    Exec exec = default_exec());

StatisticsVerdict statistics_of_eigenstate(const HarmoniumParams& params, const EigenIndex& idx,
                                           int n_points = 64, double tol = 1e-6,
                                           Exec exec = default_exec());

}  // namespace wig

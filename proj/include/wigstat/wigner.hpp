#pragma once

#include <utility>
#include <vector>

#include "wigstat/transforms.hpp"

namespace wig {

// Position-representation density matrix for 1 or 2 bodies. Axes are ordered
// (x..., x'...); both arguments of each body share one axis. Hermiticity
// rho(x;x') = rho(x';x)* is enforced at construction.
class DensityMatrix {
  public:
    static DensityMatrix from_wavefunction(const SampledField& psi, bool normalize = true);
    // rho = sum_i w_i |psi_i><psi_i| with convex weights.
    static DensityMatrix from_mixture(const std::vector<std::pair<SampledField, double>>& parts);
    // Validates Hermiticity and finiteness of a raw kernel.
    static DensityMatrix from_field(int body_count, SampledField data, bool trace_normalized);

    int body_count() const { return body_count_; }
    const SampledField& data() const { return data_; }
    bool trace_normalized() const { return trace_normalized_; }

    cplx trace() const;
    double hermiticity_residual() const;

    // Same kernel with the two bodies relabeled (2-body only).
    DensityMatrix bodies_swapped() const;

  private:
    DensityMatrix(int bodies, SampledField data, bool norm)
        : body_count_(bodies), data_(std::move(data)), trace_normalized_(norm) {}

    int body_count_ = 1;
    SampledField data_;
    bool trace_normalized_ = false;
};

// Phase-space quasidensity for 1 or 2 bodies, axes ordered (x..., p...).
// Real-valued for Hermitian sources; storage stays complex so the transform
// algebra (linearity over complex combinations) is exact.
class WignerFunction {
  public:
    WignerFunction(int body_count, SampledField data);

    int body_count() const { return body_count_; }
    const SampledField& data() const { return data_; }
    SampledField& data() { return data_; }

    // max |Im| / max |Re| over the grid.
    double realness_residual() const;
    cplx normalization(Exec exec = default_exec()) const;

  private:
    int body_count_ = 1;
    SampledField data_;
};

// W(x,p) = (1/pi^B) integral rho(x-z; x+z) e^{2ip.z} dz, evaluated per body
// by exact on-grid resampling to mean/difference indices. The mean axis is
// refined to 2n points of spacing dx/2 (every anti-diagonal of the kernel
// becomes one x-line, half of them offset by dx/2), and p is the dual axis
// pi/(n dx). This makes the transform a bijection: density_from_wigner
// recovers the kernel exactly up to roundoff.
WignerFunction wigner_from_density(const DensityMatrix& rho, Exec exec = default_exec());
DensityMatrix density_from_wigner(const WignerFunction& w, Exec exec = default_exec());

// integral W dp; equals the kernel diagonal rho(x;x) on the even x-lines.
SampledField marginal_position(const WignerFunction& w, Exec exec = default_exec());

// (2 pi)^B integral W^2 dx dp: 1 for pure states, < 1 for proper mixtures.
//
// Derivation of the constant: with the e^{2ipz} kernel and hbar = 1,
// tr(rho sigma) = (2 pi)^B integral W_rho W_sigma dx dp, so purity
// tr(rho^2) = (2 pi)^B integral W^2.
double purity(const WignerFunction& w, Exec exec = default_exec());

// Momentum representation rho^(p;p') of a position-space kernel, sampled on
// the full-angle dual axes (spacing 2 pi/(n dx)).
DensityMatrix momentum_representation(const DensityMatrix& rho, Exec exec = default_exec());

// W computed from the momentum-representation kernel,
// W(x,p) = (1/pi^B) integral rho^(p-z; p+z) e^{-2ix.z} dz. The output grid is
// the (p-fine, x-coarse) mirror of wigner_from_density's; the two routes
// agree on the common central window.
WignerFunction wigner_from_momentum_density(const DensityMatrix& rho_hat,
                                            Exec exec = default_exec());

// One body-pair step of the transform on a raw field: replaces axis ia (ket
// argument) by the refined mean axis and axis ib (bra argument) by the dual
// momentum axis. Exposed for oracle tests and for transforming non-Hermitian
// kernels such as psi_j psi_k*.
SampledField wigner_pair_step(const SampledField& f, int ia, int ib, int sign,
                              Exec exec = default_exec());
SampledField wigner_pair_step_inverse(const SampledField& f, int ia, int ib, int sign,
                                      Exec exec = default_exec());

}  // namespace wig

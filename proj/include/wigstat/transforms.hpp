#pragma once

#include "wigstat/grid.hpp"

namespace wig {

// Radix-2 complex FFT for power-of-two sizes. Unnormalized in both
// directions:
//   forward:  X_k = sum_j x_j e^{-2 pi i jk/n}
//   backward: X_k = sum_j x_j e^{+2 pi i jk/n}
// Twiddles are precomputed once per plan; execution is reentrant so one plan
// can serve many threads.
class FftPlan {
  public:
    explicit FftPlan(int n);

    int size() const { return n_; }
    void execute(cplx* data, int sign) const;

  private:
    int n_ = 0;
    std::vector<cplx> twiddle_;      // e^{-2 pi i j/n}, j < n/2
    std::vector<int> bit_reversal_;
};

// Line transform with the factor-2 kernel used throughout this library:
//
//   g(v_k) = spacing * sum_j f(z_j) e^{sign * 2 i v_k z_j}
//
// on centered grids z_j = (j - n/2 + h/2) * spacing (h = 0 for on-center
// grids, h = 1 for grids offset by half a step) and v_k = (k - n/2) * dv with
// dv = pi / (n * spacing). With this kernel the dual spacing is pi/(n dz),
// not 2 pi/(n dz), and transforming with sign then -sign multiplies by pi.
void half_angle_line(cplx* data, const FftPlan& plan, double spacing, int sign, bool half_offset);

// Exact inverse of half_angle_line with the same (spacing, sign, offset).
void half_angle_line_inverse(cplx* data, const FftPlan& plan, double spacing, int sign,
                             bool half_offset);

// Transform of a 1-axis field: g(v) = integral f(z) e^{sign 2ivz} dz sampled
// on dual_axis(f.axes[0]).
SampledField half_angle_transform(const SampledField& f, int sign);

// Batched version: transforms every line along `axis` of a multi-axis field,
// replacing that axis by its dual. Lines are independent; the parallel policy
// splits them across threads with results identical to the serial order.
SampledField half_angle_transform_axis(const SampledField& f, int axis, int sign,
                                       Exec exec = default_exec());

// Full-angle Fourier transform along one axis,
//   g(u_k) = spacing * sum_j f(z_j) e^{sign * i u_k z_j},
// realized as the factor-2 transform read on the axis with doubled spacing
// (u = 2v). Used to move density matrices between the position and momentum
// representations.
SampledField fourier_transform_axis(const SampledField& f, int axis, int sign,
                                    Exec exec = default_exec());

}  // namespace wig

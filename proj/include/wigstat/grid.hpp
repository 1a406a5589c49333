#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "wigstat/parallel.hpp"

namespace wig {

using cplx = std::complex<double>;

// Uniform sampling grid for one continuous variable. Coordinates are
// (j - origin_index) * spacing; axes built by make_axis() put the origin at
// n/2, so the grid is symmetric about 0 with one extra negative sample.
struct Axis {
    int n_points = 0;
    double spacing = 0.0;
    int origin_index = 0;

    double coordinate(int j) const { return (j - origin_index) * spacing; }
    double half_width() const { return 0.5 * n_points * spacing; }
};

bool is_power_of_two(int n);

// n_points must be a power of two >= 2, spacing > 0.
Axis make_axis(int n_points, double spacing);

// Conjugate axis of the e^{±2ivz} kernel: same point count, spacing
// pi / (n_points * spacing). Applying it twice restores the spacing.
Axis dual_axis(const Axis& a);

bool same_axis(const Axis& a, const Axis& b, double rtol = 1e-12);

// Complex samples on a tensor-product grid of 1..4 axes. Values are
// row-major with the last axis fastest.
class SampledField {
  public:
    SampledField() = default;
    explicit SampledField(std::vector<Axis> axes);
    SampledField(std::vector<Axis> axes, std::vector<cplx> values);

    int rank() const { return static_cast<int>(axes_.size()); }
    const Axis& axis(int i) const { return axes_.at(static_cast<std::size_t>(i)); }
    const std::vector<Axis>& axes() const { return axes_; }
    std::size_t size() const { return values_.size(); }

    std::span<cplx> values() { return values_; }
    std::span<const cplx> values() const { return values_; }

    std::size_t stride(int axis) const;

    cplx& operator[](std::size_t flat) { return values_[flat]; }
    const cplx& operator[](std::size_t flat) const { return values_[flat]; }

    template <typename... I>
    cplx& at(I... idx) {
        return values_[flat_index({static_cast<int>(idx)...})];
    }
    template <typename... I>
    const cplx& at(I... idx) const {
        return values_[flat_index({static_cast<int>(idx)...})];
    }

    std::size_t flat_index(std::initializer_list<int> idx) const;

    // Throws if any entry is NaN or infinite.
    void require_finite(const char* what) const;

    SampledField& operator+=(const SampledField& o);
    SampledField& operator-=(const SampledField& o);
    SampledField& operator*=(cplx s);

  private:
    std::vector<Axis> axes_;
    std::vector<cplx> values_;
};

SampledField operator+(SampledField a, const SampledField& b);
SampledField operator-(SampledField a, const SampledField& b);
SampledField operator*(cplx s, SampledField f);

// Riemann sum times the product of spacings.
cplx integrate(const SampledField& f, Exec exec = default_exec());

double max_abs(const SampledField& f, Exec exec = default_exec());
double max_abs_diff(const SampledField& a, const SampledField& b, Exec exec = default_exec());

// Largest |f| over samples where any index is 0 or n-1, relative to the
// global maximum. Used as the box-adequacy guard: closed-form comparisons
// are only trustworthy when this is tiny.
double boundary_ratio(const SampledField& f);
bool box_adequate(const SampledField& f, double threshold = 1e-12);

// Riemann sum over the listed axes only; the result keeps the remaining axes.
SampledField integrate_out(const SampledField& f, std::span<const int> axes_to_sum,
                           Exec exec = default_exec());

// Axis permutation: axis a of the output is axis perm[a] of the input, so
// out.at(i_0, ..., i_{r-1}) reads f at index i_a along axis perm[a].
SampledField transpose(const SampledField& f, std::span<const int> perm);

}  // namespace wig

#include "wigstat/transforms.hpp"

#include <cmath>
#include <numbers>

namespace wig {

FftPlan::FftPlan(int n) : n_(n) {
    if (!is_power_of_two(n) || n < 1) throw std::invalid_argument("FftPlan: size must be a power of two");
    twiddle_.resize(static_cast<std::size_t>(n / 2));
    for (int j = 0; j < n / 2; ++j)
        twiddle_[static_cast<std::size_t>(j)] =
            std::polar(1.0, -2.0 * std::numbers::pi * j / n);
    bit_reversal_.resize(static_cast<std::size_t>(n));
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < bits; ++b)
            if (i & (1 << b)) r |= 1 << (bits - 1 - b);
        bit_reversal_[static_cast<std::size_t>(i)] = r;
    }
}

void FftPlan::execute(cplx* data, int sign) const {
    const int n = n_;
    for (int i = 0; i < n; ++i) {
        const int r = bit_reversal_[static_cast<std::size_t>(i)];
        if (i < r) std::swap(data[i], data[r]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2;
        const int step = n / len;
        for (int base = 0; base < n; base += len) {
            for (int j = 0; j < half; ++j) {
                cplx w = twiddle_[static_cast<std::size_t>(j * step)];
                if (sign > 0) w = std::conj(w);
                const cplx u = data[base + j];
                const cplx t = w * data[base + j + half];
                data[base + j] = u + t;
                data[base + j + half] = u - t;
            }
        }
    }
}

void half_angle_line(cplx* data, const FftPlan& plan, double spacing, int sign, bool half_offset) {
    const int n = plan.size();
    for (int j = 1; j < n; j += 2) data[j] = -data[j];
    plan.execute(data, sign);
    const double front = (n / 2) % 2 == 0 ? spacing : -spacing;
    for (int k = 0; k < n; ++k) {
        double s = (k % 2 == 0) ? front : -front;
        data[k] *= s;
    }
    if (half_offset) {
        for (int k = 0; k < n; ++k)
            data[k] *= std::polar(1.0, sign * std::numbers::pi * (k - n / 2) / n);
    }
}

void half_angle_line_inverse(cplx* data, const FftPlan& plan, double spacing, int sign,
                             bool half_offset) {
    const int n = plan.size();
    if (half_offset) {
        for (int k = 0; k < n; ++k)
            data[k] *= std::polar(1.0, -sign * std::numbers::pi * (k - n / 2) / n);
    }
    const double front = ((n / 2) % 2 == 0 ? 1.0 : -1.0) / (spacing * n);
    for (int k = 0; k < n; ++k) {
        double s = (k % 2 == 0) ? front : -front;
        data[k] *= s;
    }
    plan.execute(data, -sign);
    for (int j = 1; j < n; j += 2) data[j] = -data[j];
}

SampledField half_angle_transform(const SampledField& f, int sign) {
    if (f.rank() != 1)
        throw std::invalid_argument("half_angle_transform: expected a 1-axis field");
    return half_angle_transform_axis(f, 0, sign, Exec::Serial);
}

namespace {

// Applies `line_op(buffer)` to every line along `axis`, in place.
template <typename LineOp>
void for_each_line(SampledField& f, int axis, Exec exec, LineOp&& op) {
    const int n = f.axis(axis).n_points;
    const std::size_t stride = f.stride(axis);
    const std::size_t total = f.size();
    const std::size_t line_block = stride * static_cast<std::size_t>(n);
    const std::size_t n_lines = total / static_cast<std::size_t>(n);
    auto vals = f.values();
    parallel_for(n_lines, exec, [&](std::size_t line) {
        const std::size_t outer = line / stride;
        const std::size_t inner = line % stride;
        const std::size_t base = outer * line_block + inner;
        std::vector<cplx> buf(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(j)] = vals[base + static_cast<std::size_t>(j) * stride];
        op(buf.data());
        for (int j = 0; j < n; ++j) vals[base + static_cast<std::size_t>(j) * stride] = buf[static_cast<std::size_t>(j)];
    });
}

}  // namespace

SampledField half_angle_transform_axis(const SampledField& f, int axis, int sign, Exec exec) {
    if (axis < 0 || axis >= f.rank())
        throw std::invalid_argument("half_angle_transform_axis: axis out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("half_angle_transform_axis: sign must be +1 or -1");
    const Axis src = f.axis(axis);
    std::vector<Axis> axes = f.axes();
    axes[static_cast<std::size_t>(axis)] = dual_axis(src);
    SampledField out(std::move(axes), std::vector<cplx>(f.values().begin(), f.values().end()));
    FftPlan plan(src.n_points);
    for_each_line(out, axis, exec,
                  [&](cplx* line) { half_angle_line(line, plan, src.spacing, sign, false); });
    return out;
}

SampledField fourier_transform_axis(const SampledField& f, int axis, int sign, Exec exec) {
    SampledField g = half_angle_transform_axis(f, axis, sign, exec);
    std::vector<Axis> axes = g.axes();
    Axis& a = axes[static_cast<std::size_t>(axis)];
    a = make_axis(a.n_points, 2.0 * a.spacing);
    return SampledField(std::move(axes), std::vector<cplx>(g.values().begin(), g.values().end()));
}

}  // namespace wig

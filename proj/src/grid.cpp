#include "wigstat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wig {

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

Axis make_axis(int n_points, double spacing) {
    if (n_points < 2 || !is_power_of_two(n_points))
        throw std::invalid_argument("make_axis: n_points must be a power of two >= 2, got " +
                                    std::to_string(n_points));
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument("make_axis: spacing must be positive and finite");
    return Axis{n_points, spacing, n_points / 2};
}

Axis dual_axis(const Axis& a) {
    return make_axis(a.n_points, std::numbers::pi / (a.n_points * a.spacing));
}

bool same_axis(const Axis& a, const Axis& b, double rtol) {
    return a.n_points == b.n_points && a.origin_index == b.origin_index &&
           std::abs(a.spacing - b.spacing) <= rtol * std::max(a.spacing, b.spacing);
}

SampledField::SampledField(std::vector<Axis> axes) : axes_(std::move(axes)) {
    if (axes_.empty() || axes_.size() > 4)
        throw std::invalid_argument("SampledField: rank must be 1..4");
    std::size_t n = 1;
    for (const Axis& a : axes_) n *= static_cast<std::size_t>(a.n_points);
    values_.assign(n, cplx{});
}

SampledField::SampledField(std::vector<Axis> axes, std::vector<cplx> values)
    : axes_(std::move(axes)), values_(std::move(values)) {
    if (axes_.empty() || axes_.size() > 4)
        throw std::invalid_argument("SampledField: rank must be 1..4");
    std::size_t n = 1;
    for (const Axis& a : axes_) n *= static_cast<std::size_t>(a.n_points);
    if (n != values_.size())
        throw std::invalid_argument("SampledField: value count does not match axes");
}

std::size_t SampledField::stride(int axis) const {
    std::size_t s = 1;
    for (int a = rank() - 1; a > axis; --a)
        s *= static_cast<std::size_t>(axes_[static_cast<std::size_t>(a)].n_points);
    return s;
}

std::size_t SampledField::flat_index(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank())
        throw std::invalid_argument("SampledField: index arity mismatch");
    std::size_t flat = 0;
    int a = 0;
    for (int i : idx) {
        const int n = axes_[static_cast<std::size_t>(a)].n_points;
        if (i < 0 || i >= n) throw std::out_of_range("SampledField: index out of range");
        flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
        ++a;
    }
    return flat;
}

void SampledField::require_finite(const char* what) const {
    for (const cplx& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::domain_error(std::string(what) + ": field contains non-finite values");
}

SampledField& SampledField::operator+=(const SampledField& o) {
    if (o.size() != size()) throw std::invalid_argument("field +=: size mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

SampledField& SampledField::operator-=(const SampledField& o) {
    if (o.size() != size()) throw std::invalid_argument("field -=: size mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

SampledField& SampledField::operator*=(cplx s) {
    for (cplx& v : values_) v *= s;
    return *this;
}

SampledField operator+(SampledField a, const SampledField& b) { return a += b; }
SampledField operator-(SampledField a, const SampledField& b) { return a -= b; }
SampledField operator*(cplx s, SampledField f) { return f *= s; }

cplx integrate(const SampledField& f, Exec exec) {
    double w = 1.0;
    for (const Axis& a : f.axes()) w *= a.spacing;
    return w * chunked_sum(f.values(), exec);
}

double max_abs(const SampledField& f, Exec exec) { return max_abs(f.values(), exec); }

double max_abs_diff(const SampledField& a, const SampledField& b, Exec exec) {
    if (a.size() != b.size()) throw std::invalid_argument("max_abs_diff: size mismatch");
    auto va = a.values(), vb = b.values();
    const std::size_t n = va.size();
    constexpr std::size_t kChunk = 4096;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_for(nchunks, exec, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        double m = 0.0;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, std::abs(va[i] - vb[i]));
        partial[c] = m;
    });
    double m = 0.0;
    for (double p : partial) m = std::max(m, p);
    return m;
}

double boundary_ratio(const SampledField& f) {
    const int rank = f.rank();
    double global = 0.0, edge = 0.0;
    const auto vals = f.values();
    for (std::size_t flat = 0; flat < vals.size(); ++flat) {
        const double m = std::abs(vals[flat]);
        global = std::max(global, m);
        std::size_t rem = flat;
        bool on_edge = false;
        for (int a = rank - 1; a >= 0; --a) {
            const auto n = static_cast<std::size_t>(f.axis(a).n_points);
            const auto i = rem % n;
            rem /= n;
            if (i == 0 || i + 1 == n) on_edge = true;
        }
        if (on_edge) edge = std::max(edge, m);
    }
    return global > 0.0 ? edge / global : 0.0;
}

bool box_adequate(const SampledField& f, double threshold) {
    return boundary_ratio(f) < threshold;
}

SampledField integrate_out(const SampledField& f, std::span<const int> axes_to_sum, Exec exec) {
    const int rank = f.rank();
    std::vector<bool> summed(static_cast<std::size_t>(rank), false);
    double weight = 1.0;
    for (int a : axes_to_sum) {
        if (a < 0 || a >= rank) throw std::invalid_argument("integrate_out: axis out of range");
        if (summed[static_cast<std::size_t>(a)])
            throw std::invalid_argument("integrate_out: duplicate axis");
        summed[static_cast<std::size_t>(a)] = true;
        weight *= f.axis(a).spacing;
    }
    std::vector<Axis> kept;
    std::vector<int> kept_ids;
    for (int a = 0; a < rank; ++a)
        if (!summed[static_cast<std::size_t>(a)]) {
            kept.push_back(f.axis(a));
            kept_ids.push_back(a);
        }
    if (kept.empty()) throw std::invalid_argument("integrate_out: use integrate() for full sums");

    SampledField out(kept);
    auto ov = out.values();
    const auto iv = f.values();
    std::vector<std::size_t> in_stride(static_cast<std::size_t>(rank));
    for (int a = 0; a < rank; ++a) in_stride[static_cast<std::size_t>(a)] = f.stride(a);

    parallel_for(out.size(), exec, [&](std::size_t oflat) {
        // decompose output index onto kept axes
        std::size_t base = 0, rem = oflat;
        for (int a = static_cast<int>(kept.size()) - 1; a >= 0; --a) {
            const auto n = static_cast<std::size_t>(kept[static_cast<std::size_t>(a)].n_points);
            base += (rem % n) * in_stride[static_cast<std::size_t>(kept_ids[static_cast<std::size_t>(a)])];
            rem /= n;
        }
        // iterate the summed subspace
        std::vector<int> sum_ids;
        for (int a = 0; a < rank; ++a)
            if (summed[static_cast<std::size_t>(a)]) sum_ids.push_back(a);
        std::size_t count = 1;
        for (int a : sum_ids) count *= static_cast<std::size_t>(f.axis(a).n_points);
        cplx acc{};
        for (std::size_t s = 0; s < count; ++s) {
            std::size_t off = 0, r2 = s;
            for (int a = static_cast<int>(sum_ids.size()) - 1; a >= 0; --a) {
                const int id = sum_ids[static_cast<std::size_t>(a)];
                const auto n = static_cast<std::size_t>(f.axis(id).n_points);
                off += (r2 % n) * in_stride[static_cast<std::size_t>(id)];
                r2 /= n;
            }
            acc += iv[base + off];
        }
        ov[oflat] = acc * weight;
    });
    return out;
}

SampledField transpose(const SampledField& f, std::span<const int> perm) {
    const int rank = f.rank();
    if (static_cast<int>(perm.size()) != rank)
        throw std::invalid_argument("transpose: permutation arity mismatch");
    std::vector<Axis> axes;
    for (int a : perm) axes.push_back(f.axis(a));
    SampledField out(axes);
    const auto iv = f.values();
    auto ov = out.values();
    std::vector<std::size_t> src_stride(static_cast<std::size_t>(rank));
    for (int a = 0; a < rank; ++a)
        src_stride[static_cast<std::size_t>(a)] = f.stride(perm[static_cast<std::size_t>(a)]);
    for (std::size_t oflat = 0; oflat < ov.size(); ++oflat) {
        std::size_t rem = oflat, src = 0;
        for (int a = rank - 1; a >= 0; --a) {
            const auto n = static_cast<std::size_t>(axes[static_cast<std::size_t>(a)].n_points);
            src += (rem % n) * src_stride[static_cast<std::size_t>(a)];
            rem /= n;
        }
        ov[oflat] = iv[src];
    }
    return out;
}

}  // namespace wig

#include "wigstat/wigner.hpp"

#include <cmath>
#include <numbers>

namespace wig {

namespace {

constexpr double kHermTol = 1e-12;

void check_body_count(int b) {
    if (b != 1 && b != 2) throw std::invalid_argument("body_count must be 1 or 2");
}

SampledField outer_product_kernel(const SampledField& psi) {
    const int b = psi.rank();
    std::vector<Axis> axes;
    for (int a = 0; a < b; ++a) axes.push_back(psi.axis(a));
    for (int a = 0; a < b; ++a) axes.push_back(psi.axis(a));
    SampledField rho(axes);
    const auto pv = psi.values();
    auto rv = rho.values();
    const std::size_t n = pv.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rv[i * n + j] = pv[i] * std::conj(pv[j]);
    return rho;
}

double norm_squared(const SampledField& psi) {
    double w = 1.0;
    for (const Axis& a : psi.axes()) w *= a.spacing;
    double s = 0.0;
    for (const cplx& v : psi.values()) s += std::norm(v);
    return s * w;
}

}  // namespace

DensityMatrix DensityMatrix::from_wavefunction(const SampledField& psi, bool normalize) {
    check_body_count(psi.rank());
    psi.require_finite("from_wavefunction");
    SampledField p = psi;
    if (normalize) {
        const double n2 = norm_squared(p);
        if (n2 <= 0.0) throw std::domain_error("from_wavefunction: zero-norm wavefunction");
        p *= 1.0 / std::sqrt(n2);
    }
    return DensityMatrix(psi.rank(), outer_product_kernel(p), normalize);
}

DensityMatrix DensityMatrix::from_mixture(
    const std::vector<std::pair<SampledField, double>>& parts) {
    if (parts.empty()) throw std::invalid_argument("from_mixture: empty mixture");
    double total = 0.0;
    for (const auto& [psi, w] : parts) {
        if (w < 0.0) throw std::invalid_argument("from_mixture: negative weight");
        total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("from_mixture: zero total weight");
    SampledField acc;
    int bodies = parts.front().first.rank();
    bool first = true;
    for (const auto& [psi, w] : parts) {
        if (psi.rank() != bodies) throw std::invalid_argument("from_mixture: mixed body counts");
        SampledField p = psi;
        const double n2 = norm_squared(p);
        if (n2 <= 0.0) throw std::domain_error("from_mixture: zero-norm component");
        p *= std::sqrt(w / total / n2);
        SampledField term = outer_product_kernel(p);
        if (first) {
            acc = std::move(term);
            first = false;
        } else {
            acc += term;
        }
    }
    return DensityMatrix(bodies, std::move(acc), true);
}

DensityMatrix DensityMatrix::from_field(int body_count, SampledField data, bool trace_normalized) {
    check_body_count(body_count);
    if (data.rank() != 2 * body_count)
        throw std::invalid_argument("DensityMatrix: rank must be 2 * body_count");
    for (int b = 0; b < body_count; ++b)
        if (!same_axis(data.axis(b), data.axis(body_count + b)))
            throw std::invalid_argument("DensityMatrix: ket/bra axes differ");
    data.require_finite("DensityMatrix");
    DensityMatrix rho(body_count, std::move(data), trace_normalized);
    if (rho.hermiticity_residual() > kHermTol)
        throw std::domain_error("DensityMatrix: kernel is not Hermitian");
    return rho;
}

cplx DensityMatrix::trace() const {
    const int b = body_count_;
    double w = 1.0;
    for (int a = 0; a < b; ++a) w *= data_.axis(a).spacing;
    cplx acc{};
    if (b == 1) {
        const int n = data_.axis(0).n_points;
        for (int i = 0; i < n; ++i) acc += data_.at(i, i);
    } else {
        const int n1 = data_.axis(0).n_points, n2 = data_.axis(1).n_points;
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) acc += data_.at(i, j, i, j);
    }
    return acc * w;
}

double DensityMatrix::hermiticity_residual() const {
    const int b = body_count_;
    std::vector<int> perm;
    for (int a = 0; a < b; ++a) perm.push_back(b + a);
    for (int a = 0; a < b; ++a) perm.push_back(a);
    SampledField swapped = transpose(data_, perm);
    double num = 0.0, den = 0.0;
    const auto v1 = data_.values();
    const auto v2 = swapped.values();
    for (std::size_t i = 0; i < v1.size(); ++i) {
        num = std::max(num, std::abs(v1[i] - std::conj(v2[i])));
        den = std::max(den, std::abs(v1[i]));
    }
    return den > 0.0 ? num / den : 0.0;
}

DensityMatrix DensityMatrix::bodies_swapped() const {
    if (body_count_ != 2) throw std::invalid_argument("bodies_swapped: 2-body only");
    const int perm[] = {1, 0, 3, 2};
    return DensityMatrix(2, transpose(data_, perm), trace_normalized_);
}

WignerFunction::WignerFunction(int body_count, SampledField data)
    : body_count_(body_count), data_(std::move(data)) {
    check_body_count(body_count);
    if (data_.rank() != 2 * body_count)
        throw std::invalid_argument("WignerFunction: rank must be 2 * body_count");
    data_.require_finite("WignerFunction");
}

double WignerFunction::realness_residual() const {
    double num = 0.0, den = 0.0;
    for (const cplx& v : data_.values()) {
        num = std::max(num, std::abs(v.imag()));
        den = std::max(den, std::abs(v.real()));
    }
    return den > 0.0 ? num / den : 0.0;
}

cplx WignerFunction::normalization(Exec exec) const { return integrate(data_, exec); }

// ---------------------------------------------------------------------------
// pair step
// ---------------------------------------------------------------------------

SampledField wigner_pair_step(const SampledField& f, int ia, int ib, int sign, Exec exec) {
    const int rank = f.rank();
    if (ia < 0 || ib < 0 || ia >= rank || ib >= rank || ia == ib)
        throw std::invalid_argument("wigner_pair_step: bad axis pair");
    const Axis src = f.axis(ia);
    if (!same_axis(src, f.axis(ib)))
        throw std::invalid_argument("wigner_pair_step: paired axes must be identical");
    const int n = src.n_points;
    const double dx = src.spacing;

    std::vector<Axis> out_axes = f.axes();
    out_axes[static_cast<std::size_t>(ia)] = Axis{2 * n, dx / 2.0, n};
    out_axes[static_cast<std::size_t>(ib)] = dual_axis(src);
    SampledField out(out_axes);

    // spectator bookkeeping
    std::vector<int> spec;
    for (int a = 0; a < rank; ++a)
        if (a != ia && a != ib) spec.push_back(a);
    std::size_t n_spec = 1;
    for (int a : spec) n_spec *= static_cast<std::size_t>(f.axis(a).n_points);

    const std::size_t si_a = f.stride(ia), si_b = f.stride(ib);
    const std::size_t so_a = out.stride(ia), so_b = out.stride(ib);
    const auto iv = f.values();
    auto ov = out.values();
    FftPlan plan(n);

    parallel_for(n_spec * static_cast<std::size_t>(2 * n), exec, [&](std::size_t unit) {
        const std::size_t s = unit / static_cast<std::size_t>(2 * n);
        const int m = static_cast<int>(unit % static_cast<std::size_t>(2 * n));
        std::size_t base_in = 0, base_out = 0;
        std::size_t rem = s;
        for (int a = static_cast<int>(spec.size()) - 1; a >= 0; --a) {
            const int id = spec[static_cast<std::size_t>(a)];
            const auto na = static_cast<std::size_t>(f.axis(id).n_points);
            const std::size_t i = rem % na;
            rem /= na;
            base_in += i * f.stride(id);
            base_out += i * out.stride(id);
        }
        if (m == 2 * n - 1) return;  // no anti-diagonal there; line stays zero
        const int half = m % 2;
        std::vector<cplx> line(static_cast<std::size_t>(n), cplx{});
        for (int c = 0; c < n; ++c) {
            const int delta = 2 * (c - n / 2) + half;
            const int i = (m - delta) / 2;
            const int ip = (m + delta) / 2;
            if (i >= 0 && i < n && ip >= 0 && ip < n)
                line[static_cast<std::size_t>(c)] =
                    iv[base_in + static_cast<std::size_t>(i) * si_a + static_cast<std::size_t>(ip) * si_b];
        }
        half_angle_line(line.data(), plan, dx, sign, half != 0);
        const std::size_t row = base_out + static_cast<std::size_t>(m) * so_a;
        for (int k = 0; k < n; ++k)
            ov[row + static_cast<std::size_t>(k) * so_b] = line[static_cast<std::size_t>(k)];
    });
    return out;
}

SampledField wigner_pair_step_inverse(const SampledField& f, int ia, int ib, int sign, Exec exec) {
    const int rank = f.rank();
    if (ia < 0 || ib < 0 || ia >= rank || ib >= rank || ia == ib)
        throw std::invalid_argument("wigner_pair_step_inverse: bad axis pair");
    const Axis mean = f.axis(ia);
    const Axis dual = f.axis(ib);
    const int n = dual.n_points;
    if (mean.n_points != 2 * n || mean.origin_index != n)
        throw std::invalid_argument("wigner_pair_step_inverse: mean axis is not the refined lattice");
    const double dx = 2.0 * mean.spacing;
    const double expected_dp = std::numbers::pi / (n * dx);
    if (std::abs(dual.spacing - expected_dp) > 1e-12 * expected_dp)
        throw std::invalid_argument("wigner_pair_step_inverse: momentum axis is not the dual grid");

    std::vector<Axis> out_axes = f.axes();
    const Axis src = make_axis(n, dx);
    out_axes[static_cast<std::size_t>(ia)] = src;
    out_axes[static_cast<std::size_t>(ib)] = src;
    SampledField out(out_axes);

    std::vector<int> spec;
    for (int a = 0; a < rank; ++a)
        if (a != ia && a != ib) spec.push_back(a);
    std::size_t n_spec = 1;
    for (int a : spec) n_spec *= static_cast<std::size_t>(f.axis(a).n_points);

    const std::size_t si_a = f.stride(ia), si_b = f.stride(ib);
    const std::size_t so_a = out.stride(ia), so_b = out.stride(ib);
    const auto iv = f.values();
    auto ov = out.values();
    FftPlan plan(n);

    parallel_for(n_spec * static_cast<std::size_t>(2 * n), exec, [&](std::size_t unit) {
        const std::size_t s = unit / static_cast<std::size_t>(2 * n);
        const int m = static_cast<int>(unit % static_cast<std::size_t>(2 * n));
        if (m == 2 * n - 1) return;
        std::size_t base_in = 0, base_out = 0;
        std::size_t rem = s;
        for (int a = static_cast<int>(spec.size()) - 1; a >= 0; --a) {
            const int id = spec[static_cast<std::size_t>(a)];
            const auto na = static_cast<std::size_t>(f.axis(id).n_points);
            const std::size_t i = rem % na;
            rem /= na;
            base_in += i * f.stride(id);
            base_out += i * out.stride(id);
        }
        const int half = m % 2;
        std::vector<cplx> line(static_cast<std::size_t>(n));
        const std::size_t row = base_in + static_cast<std::size_t>(m) * si_a;
        for (int k = 0; k < n; ++k)
            line[static_cast<std::size_t>(k)] = iv[row + static_cast<std::size_t>(k) * si_b];
        half_angle_line_inverse(line.data(), plan, dx, sign, half != 0);
        for (int c = 0; c < n; ++c) {
            const int delta = 2 * (c - n / 2) + half;
            const int i = (m - delta) / 2;
            const int ip = (m + delta) / 2;
            if (i >= 0 && i < n && ip >= 0 && ip < n)
                ov[base_out + static_cast<std::size_t>(i) * so_a + static_cast<std::size_t>(ip) * so_b] =
                    line[static_cast<std::size_t>(c)];
        }
    });
    return out;
}

// ---------------------------------------------------------------------------
// transform entry points
// ---------------------------------------------------------------------------

WignerFunction wigner_from_density(const DensityMatrix& rho, Exec exec) {
    const int b = rho.body_count();
    SampledField f = rho.data();
    for (int body = 0; body < b; ++body) f = wigner_pair_step(f, body, b + body, +1, exec);
    f *= std::pow(1.0 / std::numbers::pi, b);
    return WignerFunction(b, std::move(f));
}

DensityMatrix density_from_wigner(const WignerFunction& w, Exec exec) {
    const int b = w.body_count();
    SampledField f = w.data();
    f *= std::pow(std::numbers::pi, b);
    for (int body = b - 1; body >= 0; --body) f = wigner_pair_step_inverse(f, body, b + body, +1, exec);
    return DensityMatrix::from_field(b, std::move(f), false);
}

SampledField marginal_position(const WignerFunction& w, Exec exec) {
    const int b = w.body_count();
    std::vector<int> paxes;
    for (int a = b; a < 2 * b; ++a) paxes.push_back(a);
    return integrate_out(w.data(), paxes, exec);
}

double purity(const WignerFunction& w, Exec exec) {
    double weight = 1.0;
    for (const Axis& a : w.data().axes()) weight *= a.spacing;
    const auto vals = w.data().values();
    const std::size_t n = vals.size();
    constexpr std::size_t kChunk = 4096;
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks, 0.0);
    parallel_for(nchunks, exec, [&](std::size_t c) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, n);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += std::norm(vals[i]);
        partial[c] = acc;
    });
    double s = 0.0;
    for (double p : partial) s += p;
    return std::pow(2.0 * std::numbers::pi, w.body_count()) * s * weight;
}

DensityMatrix momentum_representation(const DensityMatrix& rho, Exec exec) {
    const int b = rho.body_count();
    SampledField f = rho.data();
    for (int a = 0; a < b; ++a) f = fourier_transform_axis(f, a, -1, exec);
    for (int a = b; a < 2 * b; ++a) f = fourier_transform_axis(f, a, +1, exec);
    f *= std::pow(1.0 / (2.0 * std::numbers::pi), b);
    return DensityMatrix::from_field(b, std::move(f), rho.trace_normalized());
}

WignerFunction wigner_from_momentum_density(const DensityMatrix& rho_hat, Exec exec) {
    const int b = rho_hat.body_count();
    SampledField f = rho_hat.data();
    for (int body = 0; body < b; ++body) f = wigner_pair_step(f, body, b + body, -1, exec);
    f *= std::pow(1.0 / std::numbers::pi, b);
    // axes come out as (p..., x...); reorder to the (x..., p...) convention
    std::vector<int> perm;
    for (int a = b; a < 2 * b; ++a) perm.push_back(a);
    for (int a = 0; a < b; ++a) perm.push_back(a);
    return WignerFunction(b, transpose(f, perm));
}

}  // namespace wig

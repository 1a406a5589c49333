#include "wigstat/statistics.hpp"

#include <cmath>
#include <numbers>

namespace wig {

const char* to_string(Statistics s) {
    switch (s) {
        case Statistics::Bose: return "Bose";
        case Statistics::Fermi: return "Fermi";
        case Statistics::Neither: return "Neither";
        case Statistics::Degenerate: return "Degenerate";
    }
    return "?";
}

namespace {

constexpr double kSliceSkip = 1e-10;
// A slice can only support the swap comparison when its own content decays
// inside the populated diamond; slices whose rim carries more than this
// fraction of their peak are skipped (the diamond shrinks towards extreme
// extracule values, so such slices are box-inadequate by construction).
constexpr double kSliceEdge = 1e-7;

// fine arrays are 2n x 2n; n is the per-body point count
int fine_half(const TildeSlice& t) { return t.data.axis(0).n_points / 2; }

void require_matched_grids(const IntraculeWigner& iw) {
    const Axis& x = iw.source_x();
    const Axis& p = iw.source_p();
    if (x.n_points != p.n_points)
        throw std::invalid_argument(
            "statistics check: position and momentum axes need equal point counts");
    const double expected = std::numbers::pi / (2.0 * x.n_points * x.spacing);
    if (std::abs(p.spacing - expected) > 1e-9 * expected)
        throw std::invalid_argument(
            "statistics check: momentum spacing must be pi/(2 N dx) so the transformed "
            "v grid coincides with the p grid");
}

Statistics classify_residuals(double rs, double ra, double tol, bool any_mass) {
    if (!any_mass) return Statistics::Degenerate;
    const bool s_ok = rs <= tol, a_ok = ra <= tol;
    if (s_ok && a_ok) return Statistics::Degenerate;
    if (s_ok) return Statistics::Bose;
    if (a_ok) return Statistics::Fermi;
    return Statistics::Neither;
}

// One even-even slice sweep; `second_set` picks the reflected comparison.
StatisticsVerdict sweep(const IntraculeWigner& iw, double tol, bool second_set, Exec exec) {
    if (!(tol > 0.0)) throw std::invalid_argument("statistics check: tolerance must be positive");
    require_matched_grids(iw);
    const int n = iw.source_x().n_points;
    const double gmax = max_abs(iw.source_data(), exec);

    const std::size_t n_units = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<SwapResiduals> partial(n_units);
    std::vector<unsigned char> checked(n_units, 0);

    parallel_for(n_units, exec, [&](std::size_t unit) {
        const int a = static_cast<int>(unit / static_cast<std::size_t>(n));
        const int b = static_cast<int>(unit % static_cast<std::size_t>(n));
        const int iR = 2 * a;  // even extracule indices
        const int iP = 2 * b;
        IntraculeSlice s = slice(iw, iR, iP);
        if (gmax <= 0.0 || s.populated_max < kSliceSkip * gmax) return;
        if (s.edge_max > kSliceEdge * s.populated_max) return;  // box-inadequate slice
        TildeSlice t = tilde(s, Exec::Serial);
        partial[unit] = second_set ? second_set_residuals(t) : first_set_residuals(t);
        checked[unit] = 1;
    });

    StatisticsVerdict v;
    v.tolerance = tol;
    double num_s = 0.0, num_a = 0.0, den = 0.0;
    for (std::size_t u = 0; u < n_units; ++u) {
        if (!checked[u]) continue;
        ++v.slices_checked;
        num_s = std::max(num_s, partial[u].num_sym);
        num_a = std::max(num_a, partial[u].num_antisym);
        den = std::max(den, partial[u].den);
    }
    const bool any_mass = den > 0.0;
    v.residual_sym = any_mass ? num_s / den : 0.0;
    v.residual_antisym = any_mass ? num_a / den : 0.0;
    v.classification = classify_residuals(v.residual_sym, v.residual_antisym, tol, any_mass);
    return v;
}

}  // namespace

SwapResiduals first_set_residuals(const TildeSlice& t) {
    if (t.side != TransformSide::Position)
        throw std::invalid_argument("first_set_residuals: position-side transform required");
    const int n = fine_half(t);
    SwapResiduals r;
    // v runs over the central window of the (n-periodic) dual grid, p over
    // the populated even sublattice; dv = 2 dp_fine, so the swapped point
    // (p, v) sits at v index n + (m-n)/2 and p index 2 kap - n.
    for (int kap = n / 2; kap < 3 * n / 2; ++kap) {
        for (int m = 0; m < 2 * n; m += 2) {
            const cplx a = t.data.at(kap, m);
            const cplx b = t.data.at(n + (m - n) / 2, 2 * kap - n);
            r.num_sym = std::max(r.num_sym, std::abs(a - b));
            r.num_antisym = std::max(r.num_antisym, std::abs(a + b));
            r.den = std::max(r.den, std::abs(a));
        }
    }
    return r;
}

SwapResiduals second_set_residuals(const TildeSlice& t) {
    if (t.side != TransformSide::Position)
        throw std::invalid_argument("second_set_residuals: position-side transform required");
    const int n = fine_half(t);
    SwapResiduals r;
    // reflected comparison point (-p, -v); the window drops kap = n/2 whose
    // negation falls off the stored p range
    for (int kap = n / 2 + 1; kap < 3 * n / 2; ++kap) {
        for (int m = 0; m < 2 * n; m += 2) {
            const cplx a = t.data.at(kap, m);
            const cplx b = t.data.at(n - (m - n) / 2, 3 * n - 2 * kap);
            r.num_sym = std::max(r.num_sym, std::abs(a - b));
            r.num_antisym = std::max(r.num_antisym, std::abs(a + b));
            r.den = std::max(r.den, std::abs(a));
        }
    }
    return r;
}

StatisticsVerdict check_first_set(const IntraculeWigner& iw, double tol, Exec exec) {
    return sweep(iw, tol, false, exec);
}

StatisticsVerdict check_second_set(const IntraculeWigner& iw, double tol, Exec exec) {
    return sweep(iw, tol, true, exec);
}

double check_indistinguishability(const IntraculeWigner& iw, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("statistics check: tolerance must be positive");
    const SampledField& d = iw.source_data();
    const int n1 = d.axis(0).n_points, n2 = d.axis(1).n_points;
    const int n3 = d.axis(2).n_points, n4 = d.axis(3).n_points;
    double num = 0.0, den = 0.0;
    for (int j1 = 0; j1 < n1; ++j1)
        for (int j2 = 0; j2 < n2; ++j2)
            for (int k1 = 0; k1 < n3; ++k1)
                for (int k2 = 0; k2 < n4; ++k2) {
                    const cplx a = d.at(j1, j2, k1, k2);
                    const cplx b = d.at(j2, j1, k2, k1);
                    num = std::max(num, std::abs(a - b));
                    den = std::max(den, std::abs(a));
                }
    return den > 0.0 ? num / den : 0.0;
}

StatisticsVerdict classify(const WignerFunction& w, double tol, Exec exec) {
    if (w.body_count() != 2) throw std::invalid_argument("classify: 2-body Wigner function required");
    IntraculeWigner iw = to_intracule(w);
    const double indist = check_indistinguishability(iw, tol);
    StatisticsVerdict v = check_first_set(iw, tol, exec);
    v.residual_indist = indist;
    if (indist <= tol &&
        (v.classification == Statistics::Bose || v.classification == Statistics::Fermi)) {
        StatisticsVerdict second = check_second_set(iw, tol, exec);
        if (second.classification != v.classification) v.classification = Statistics::Neither;
    }
    return v;
}

}  // namespace wig

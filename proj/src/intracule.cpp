#include "wigstat/intracule.hpp"

#include <cmath>
#include <numbers>

namespace wig {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

IntraculeWigner IntraculeWigner::from_wigner(const WignerFunction& w) {
    if (w.body_count() != 2)
        throw std::invalid_argument("to_intracule: 2-body Wigner function required");
    const SampledField& d = w.data();
    if (!same_axis(d.axis(0), d.axis(1)))
        throw std::invalid_argument("to_intracule: per-body position axes differ");
    if (!same_axis(d.axis(2), d.axis(3)))
        throw std::invalid_argument("to_intracule: per-body momentum axes differ");
    IntraculeWigner iw;
    iw.src_x_ = d.axis(0);
    iw.src_p_ = d.axis(2);
    iw.ax_R_ = make_axis(2 * iw.src_x_.n_points, iw.src_x_.spacing / kSqrt2);
    iw.ax_r_ = iw.ax_R_;
    iw.ax_P_ = make_axis(2 * iw.src_p_.n_points, iw.src_p_.spacing / kSqrt2);
    iw.ax_p_ = iw.ax_P_;
    iw.data_ = d;
    return iw;
}

bool IntraculeWigner::valid(int iR, int ir, int iP, int ip) const {
    const int nx = src_x_.n_points, np = src_p_.n_points;
    if (iR < 0 || iR >= 2 * nx || ir < 0 || ir >= 2 * nx || iP < 0 || iP >= 2 * np || ip < 0 ||
        ip >= 2 * np)
        return false;
    const int u = iR - nx, wq = ir - nx;
    const int Uq = iP - np, sq = ip - np;
    if (((u + wq) & 1) != 0 || ((Uq + sq) & 1) != 0) return false;
    const int j1 = (u + wq) / 2 + nx / 2, j2 = (u - wq) / 2 + nx / 2;
    const int k1 = (Uq + sq) / 2 + np / 2, k2 = (Uq - sq) / 2 + np / 2;
    return j1 >= 0 && j1 < nx && j2 >= 0 && j2 < nx && k1 >= 0 && k1 < np && k2 >= 0 && k2 < np;
}

cplx IntraculeWigner::value(int iR, int ir, int iP, int ip) const {
    if (!valid(iR, ir, iP, ip)) return cplx{};
    const int nx = src_x_.n_points, np = src_p_.n_points;
    const int u = iR - nx, wq = ir - nx;
    const int Uq = iP - np, sq = ip - np;
    const int j1 = (u + wq) / 2 + nx / 2, j2 = (u - wq) / 2 + nx / 2;
    const int k1 = (Uq + sq) / 2 + np / 2, k2 = (Uq - sq) / 2 + np / 2;
    return data_.at(j1, j2, k1, k2);
}

cplx IntraculeWigner::integral() const { return integrate(data_); }

WignerFunction IntraculeWigner::to_wigner() const { return WignerFunction(2, data_); }

IntraculeWigner IntraculeWigner::reflected() const {
    IntraculeWigner out = *this;
    const int perm[] = {1, 0, 3, 2};
    out.data_ = transpose(data_, perm);
    return out;
}

SampledField IntraculeWigner::to_field() const {
    SampledField out({ax_R_, ax_r_, ax_P_, ax_p_});
    const int nx = src_x_.n_points, np = src_p_.n_points;
    for (int j1 = 0; j1 < nx; ++j1)
        for (int j2 = 0; j2 < nx; ++j2)
            for (int k1 = 0; k1 < np; ++k1)
                for (int k2 = 0; k2 < np; ++k2)
                    out.at(j1 + j2, j1 - j2 + nx, k1 + k2, k1 - k2 + np) =
                        data_.at(j1, j2, k1, k2);
    return out;
}

IntraculeWigner to_intracule(const WignerFunction& w) { return IntraculeWigner::from_wigner(w); }

WignerFunction from_intracule(const IntraculeWigner& iw) { return iw.to_wigner(); }

IntraculeSlice slice(const IntraculeWigner& iw, int R_index, int P_index) {
    const int nx = iw.source_x().n_points, np = iw.source_p().n_points;
    if (R_index < 0 || R_index >= 2 * nx || P_index < 0 || P_index >= 2 * np)
        throw std::out_of_range("slice: extracule index out of range");
    IntraculeSlice s;
    s.R_value = iw.axis_R().coordinate(R_index);
    s.P_value = iw.axis_P().coordinate(P_index);
    const int u = R_index - nx, Uq = P_index - np;
    s.parity_r = ((u % 2) + 2) % 2;
    s.parity_p = ((Uq % 2) + 2) % 2;
    s.data = SampledField({iw.axis_r(), iw.axis_p()});
    const auto& src = iw.source_data();
    for (int j1 = 0; j1 < nx; ++j1) {
        const int j2 = u + nx - j1;
        if (j2 < 0 || j2 >= nx) continue;
        const int ir = j1 - j2 + nx;
        const bool x_edge = j1 == 0 || j1 == nx - 1 || j2 == 0 || j2 == nx - 1;
        for (int k1 = 0; k1 < np; ++k1) {
            const int k2 = Uq + np - k1;
            if (k2 < 0 || k2 >= np) continue;
            const cplx v = src.at(j1, j2, k1, k2);
            s.data.at(ir, k1 - k2 + np) = v;
            const double m = std::abs(v);
            s.populated_max = std::max(s.populated_max, m);
            if (x_edge || k1 == 0 || k1 == np - 1 || k2 == 0 || k2 == np - 1)
                s.edge_max = std::max(s.edge_max, m);
        }
    }
    return s;
}

TildeSlice tilde(const IntraculeSlice& s, Exec exec) {
    TildeSlice t;
    t.R_value = s.R_value;
    t.P_value = s.P_value;
    t.parity_r = s.parity_r;
    t.parity_p = s.parity_p;
    t.side = TransformSide::Position;
    t.data = half_angle_transform_axis(s.data, 0, +1, exec);
    t.data *= 2.0;  // populated points carry twice the fine cell
    return t;
}

TildeSlice hat(const IntraculeSlice& s, Exec exec) {
    TildeSlice t;
    t.R_value = s.R_value;
    t.P_value = s.P_value;
    t.parity_r = s.parity_r;
    t.parity_p = s.parity_p;
    t.side = TransformSide::Momentum;
    t.data = half_angle_transform_axis(s.data, 1, -1, exec);
    t.data *= 2.0;
    return t;
}

IntraculeSlice tilde_inverse(const TildeSlice& t, Exec exec) {
    IntraculeSlice s;
    s.R_value = t.R_value;
    s.P_value = t.P_value;
    s.parity_r = t.parity_r;
    s.parity_p = t.parity_p;
    if (t.side == TransformSide::Position) {
        s.data = half_angle_transform_axis(t.data, 0, -1, exec);
    } else {
        s.data = half_angle_transform_axis(t.data, 1, +1, exec);
    }
    s.data *= 1.0 / (2.0 * std::numbers::pi);
    return s;
}

}  // namespace wig

#include "wigstat/spin.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace wig {

SampledField zero_like(const SampledField& f) { return SampledField(f.axes()); }

Mat4 u_matrix() {
    const cplx i(0.0, 1.0);
    Mat4 u{};
    u[0] = {0.5, 0.0, 0.0, 0.5};
    u[1] = {0.0, 0.5, 0.5, 0.0};
    u[2] = {0.0, 0.5 * i, -0.5 * i, 0.0};
    u[3] = {0.5, 0.0, 0.0, -0.5};
    return u;
}

Mat4 exchange_matrix() {
    Mat4 a{};
    a[0] = {1.0, 0.0, 0.0, 0.0};
    a[1] = {0.0, 0.0, 1.0, 0.0};
    a[2] = {0.0, 1.0, 0.0, 0.0};
    a[3] = {0.0, 0.0, 0.0, 1.0};
    return a;
}

namespace {

SpinProductState make_product(std::array<cplx, 16> spin, WignerFunction orbital,
                              Statistics expected, double tol, bool verify_orbital) {
    SpinProductState st;
    st.spin = spin;
    if (verify_orbital) {
        st.orbital_class = classify(orbital, tol).classification;
        st.orbital_verified = true;
        st.symmetry_warning = st.orbital_class != expected;
    }
    st.orbital = std::make_shared<WignerFunction>(std::move(orbital));
    return st;
}

}  // namespace

SpinProductState singlet_state(WignerFunction orbital, double tol, bool verify_orbital) {
    std::array<cplx, 16> spin{};
    spin[static_cast<std::size_t>(spin_index(kUp, kDown, kUp, kDown))] = 0.5;
    spin[static_cast<std::size_t>(spin_index(kUp, kDown, kDown, kUp))] = -0.5;
    spin[static_cast<std::size_t>(spin_index(kDown, kUp, kUp, kDown))] = -0.5;
    spin[static_cast<std::size_t>(spin_index(kDown, kUp, kDown, kUp))] = 0.5;
    return make_product(spin, std::move(orbital), Statistics::Bose, tol, verify_orbital);
}

SpinProductState triplet_state(cplx alpha, cplx beta, cplx gamma, WignerFunction orbital,
                               double tol, bool verify_orbital) {
    const double norm = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
    if (std::abs(norm - 1.0) > 1e-12)
        throw std::invalid_argument("triplet_state: |alpha|^2 + |beta|^2 + |gamma|^2 must be 1");
    // amplitudes over the (s1, s2) basis
    std::array<cplx, 4> s{};
    s[static_cast<std::size_t>(2 * kUp + kUp)] = alpha;
    s[static_cast<std::size_t>(2 * kUp + kDown)] = beta / std::numbers::sqrt2;
    s[static_cast<std::size_t>(2 * kDown + kUp)] = beta / std::numbers::sqrt2;
    s[static_cast<std::size_t>(2 * kDown + kDown)] = gamma;
    std::array<cplx, 16> spin{};
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s1p = 0; s1p < 2; ++s1p)
                for (int s2p = 0; s2p < 2; ++s2p)
                    spin[static_cast<std::size_t>(spin_index(s1, s2, s1p, s2p))] =
                        s[static_cast<std::size_t>(2 * s1 + s2)] *
                        std::conj(s[static_cast<std::size_t>(2 * s1p + s2p)]);
    return make_product(spin, std::move(orbital), Statistics::Fermi, tol, verify_orbital);
}

Multiplet<SampledField> tilde_multiplet(const SpinProductState& state, Exec exec) {
    if (!state.orbital) throw std::invalid_argument("tilde_multiplet: missing orbital");
    const IntraculeWigner iw = to_intracule(*state.orbital);
    const int nx = iw.source_x().n_points;
    const int np = iw.source_p().n_points;
    const TildeSlice central = tilde(slice(iw, nx, np), exec);  // R = P = 0

    const Multiplet<cplx> coeff = to_multiplet(state.spin_matrix());
    Multiplet<SampledField> out{};
    const auto src = coeff.slots();
    std::array<SampledField*, 16> dst = {
        &out.sc1,   &out.sc2,   &out.v1[0], &out.v1[1], &out.v1[2], &out.v2[0],
        &out.v2[1], &out.v2[2], &out.v3[0], &out.v3[1], &out.v3[2], &out.q[0],
        &out.q[1],  &out.q[2],  &out.q[3],  &out.q[4]};
    for (int i = 0; i < 16; ++i) *dst[static_cast<std::size_t>(i)] = (*src[static_cast<std::size_t>(i)]) * central.data;
    return out;
}

MultipletSwapReport check_fermi_multiplet(const Multiplet<SampledField>& tilde_mult, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("check_fermi_multiplet: tolerance must be positive");
    const auto slots = tilde_mult.slots();
    const Axis& av = slots[0]->axis(0);
    for (int i = 1; i < 16; ++i) {
        if (!same_axis(slots[static_cast<std::size_t>(i)]->axis(0), av) ||
            !same_axis(slots[static_cast<std::size_t>(i)]->axis(1), slots[0]->axis(1)))
            throw std::invalid_argument("check_fermi_multiplet: component grids differ");
    }
    const MultipletSigns signs = multiplet_exchange_signs();
    MultipletSwapReport rep;
    rep.tolerance = tol;
    double global = 0.0;
    std::array<double, 16> nums{};
    for (int i = 0; i < 16; ++i) {
        TildeSlice t;
        t.side = TransformSide::Position;
        t.data = *slots[static_cast<std::size_t>(i)];
        const SwapResiduals r = first_set_residuals(t);
        nums[static_cast<std::size_t>(i)] = signs.slot(i) > 0 ? r.num_sym : r.num_antisym;
        rep.components[static_cast<std::size_t>(i)].name = multiplet_slot_name(i);
        rep.components[static_cast<std::size_t>(i)].norm = r.den;
        global = std::max(global, r.den);
    }
    for (int i = 0; i < 16; ++i) {
        rep.components[static_cast<std::size_t>(i)].residual =
            global > 0.0 ? nums[static_cast<std::size_t>(i)] / global : 0.0;
        rep.worst = std::max(rep.worst, rep.components[static_cast<std::size_t>(i)].residual);
    }
    return rep;
}

OneBodyReduction reduce_one_body(const SpinProductState& state, Exec exec) {
    if (!state.orbital) throw std::invalid_argument("reduce_one_body: missing orbital");
    MatrixWigner1<cplx> m1 = reduce_one_body(state.spin_matrix(), [](const cplx& c) { return c; });
    OneBodyReduction out;
    const auto phys = to_physical_1body(m1);
    for (int i = 0; i < 4; ++i) out.physical[static_cast<std::size_t>(i)] = phys[static_cast<std::size_t>(i)];
    const int body2_axes[] = {1, 3};
    out.orbital = integrate_out(state.orbital->data(), body2_axes, exec);
    return out;
}

SpinAlgebraCheck spin_algebra_selftest(unsigned seed, int draws) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    auto random_matrix = [&]() {
        MatrixWigner2<cplx> m;
        for (auto& c : m.comp) c = cplx(uni(rng), uni(rng));
        return m;
    };
    const MultipletSigns ex = multiplet_exchange_signs();
    const MultipletSigns in = multiplet_indist_signs();

    SpinAlgebraCheck chk;
    for (int d = 0; d < draws; ++d) {
        MatrixWigner2<cplx> m = random_matrix();
        const Multiplet<cplx> base = to_multiplet(m);
        const Multiplet<cplx> left = to_multiplet(spin_swap_unprimed(m));
        const Multiplet<cplx> right = to_multiplet(spin_swap_primed(m));
        const Multiplet<cplx> both = to_multiplet(exchange_conjugate(m));
        const auto b = base.slots(), l = left.slots(), r = right.slots(), f = both.slots();
        for (int i = 0; i < 16; ++i) {
            const double eps = -ex.slot(i);              // unprimed-swap parity
            const double epsp = in.slot(i) * eps;        // primed-swap parity
            const std::size_t k = static_cast<std::size_t>(i);
            chk.sign_table_residual = std::max(chk.sign_table_residual, std::abs(*l[k] - eps * *b[k]));
            chk.sign_table_residual = std::max(chk.sign_table_residual, std::abs(*r[k] - epsp * *b[k]));
            chk.sign_table_residual = std::max(chk.sign_table_residual, std::abs(*f[k] - in.slot(i) * *b[k]));
        }
        const MatrixWigner2<cplx> back = from_multiplet(base);
        for (int i = 0; i < 16; ++i)
            chk.round_trip_residual = std::max(
                chk.round_trip_residual,
                std::abs(back.comp[static_cast<std::size_t>(i)] - m.comp[static_cast<std::size_t>(i)]));

        // Hermitian instance: v3 must be the conjugate of v2
        MatrixWigner2<cplx> h = m;
        for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int s1p = 0; s1p < 2; ++s1p)
                    for (int s2p = 0; s2p < 2; ++s2p)
                        h(s1, s2, s1p, s2p) =
                            m(s1, s2, s1p, s2p) + std::conj(m(s1p, s2p, s1, s2));
        const Multiplet<cplx> hm = to_multiplet(h);
        for (int i = 0; i < 3; ++i)
            chk.conjugate_pair_residual = std::max(
                chk.conjugate_pair_residual,
                std::abs(hm.v3[static_cast<std::size_t>(i)] - std::conj(hm.v2[static_cast<std::size_t>(i)])));
    }
    return chk;
}

}  // namespace wig

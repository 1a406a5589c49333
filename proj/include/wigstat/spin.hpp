#pragma once

#include <array>
#include <memory>
#include <string>

#include "wigstat/intracule.hpp"
#include "wigstat/statistics.hpp"

namespace wig {

// Spin components are stored behind a carrier type C so the algebra runs
// identically over plain complex placeholders, closed-form coefficients, or
// sampled phase-space fields. A carrier needs +, - and scalar multiplication
// by cplx, plus zero_like() below.

inline cplx zero_like(const cplx&) { return cplx{}; }
SampledField zero_like(const SampledField& f);

inline constexpr int kUp = 0;
inline constexpr int kDown = 1;

// flat index of the 2-body spin key (sigma1, sigma2, sigma1', sigma2')
constexpr int spin_index(int s1, int s2, int s1p, int s2p) {
    return ((s1 * 2 + s2) * 2 + s1p) * 2 + s2p;
}

using Mat4 = std::array<std::array<cplx, 4>, 4>;

// U = (1/2) (sigma^kappa_{sigma sigma'}) as displayed: rows kappa = 0,x,y,z,
// columns (sigma sigma') = (uu, ud, du, dd). Essentially unitary: U U+ = I/2.
Mat4 u_matrix();

// Permutation swapping the middle 2-body spin basis states (ud <-> du).
Mat4 exchange_matrix();

template <class C>
struct MatrixWigner1 {
    // index 2*sigma + sigma'
    std::array<C, 4> comp;
};

template <class C>
struct MatrixWigner2 {
    std::array<C, 16> comp;

    const C& operator()(int s1, int s2, int s1p, int s2p) const {
        return comp[static_cast<std::size_t>(spin_index(s1, s2, s1p, s2p))];
    }
    C& operator()(int s1, int s2, int s1p, int s2p) {
        return comp[static_cast<std::size_t>(spin_index(s1, s2, s1p, s2p))];
    }
};

// Rotation-group multiplet of a 2-body spin-1/2 Wigner function: two
// scalars, three vectors and one quadrupole (1+1+3+3+3+5 = 16 slots).
//
// Convention note: the antisymmetric combinations pair the vector
// W^{k0}_- = W^{k0} - W^{0k} with the axial vector (W^{zy}_-, W^{xz}_-,
// W^{yx}_-); v2 adds them with +i, v3 with -i, so v3 is the complex
// conjugate of v2 for Hermitian inputs and each of v2, v3 transforms with a
// single sign under the spin swaps. (Pairing the z slot the other way would
// break both properties.)
template <class C>
struct Multiplet {
    C sc1, sc2;
    std::array<C, 3> v1, v2, v3;
    std::array<C, 5> q;

    std::array<const C*, 16> slots() const {
        return {&sc1,   &sc2,   &v1[0], &v1[1], &v1[2], &v2[0], &v2[1], &v2[2],
                &v3[0], &v3[1], &v3[2], &q[0],  &q[1],  &q[2],  &q[3],  &q[4]};
    }
};

inline const char* multiplet_slot_name(int i) {
    static const char* names[16] = {"sc1", "sc2", "v1x", "v1y", "v1z", "v2x", "v2y", "v2z",
                                    "v3x", "v3y", "v3z", "q1",  "q2",  "q3",  "q4",  "q5"};
    return names[i];
}

// Signs of t^c(v,p) = s_c t^c(p,v) under particle exchange (spin swap of the
// unprimed labels combined with the transformed-slice swap).
struct MultipletSigns {
    double sc1, sc2, v1, v2, v3, q;

    double slot(int i) const {
        if (i == 0) return sc1;
        if (i == 1) return sc2;
        if (i < 5) return v1;
        if (i < 8) return v2;
        if (i < 11) return v3;
        return q;
    }
};

constexpr MultipletSigns multiplet_exchange_signs() { return {+1.0, -1.0, -1.0, -1.0, +1.0, -1.0}; }

// Signs pairing with the (r,p) -> (-r,-p) reflection; equals the product of
// the unprimed- and primed-swap sign tables.
constexpr MultipletSigns multiplet_indist_signs() { return {+1.0, +1.0, +1.0, -1.0, -1.0, +1.0}; }

// ---------------------------------------------------------------------------
// carrier-generic algebra
// ---------------------------------------------------------------------------

template <class C>
std::array<C, 4> to_physical_1body(const MatrixWigner1<C>& m) {
    const Mat4 U = u_matrix();
    const C z = zero_like(m.comp[0]);
    std::array<C, 4> out{z, z, z, z};
    for (int k = 0; k < 4; ++k)
        for (int a = 0; a < 4; ++a) {
            const cplx c = U[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
            if (c != cplx{}) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] + c * m.comp[static_cast<std::size_t>(a)];
        }
    return out;
}

// the 16 components W^{kappa lambda} from (U (x) U)
template <class C>
std::array<std::array<C, 4>, 4> kappa_components(const MatrixWigner2<C>& m) {
    const Mat4 U = u_matrix();
    const C z = zero_like(m.comp[0]);
    std::array<std::array<C, 4>, 4> K;
    for (auto& row : K) row.fill(z);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            for (int s1 = 0; s1 < 2; ++s1)
                for (int s1p = 0; s1p < 2; ++s1p) {
                    const cplx cu = U[static_cast<std::size_t>(k)][static_cast<std::size_t>(2 * s1 + s1p)];
                    if (cu == cplx{}) continue;
                    for (int s2 = 0; s2 < 2; ++s2)
                        for (int s2p = 0; s2p < 2; ++s2p) {
                            const cplx cv = U[static_cast<std::size_t>(l)][static_cast<std::size_t>(2 * s2 + s2p)];
                            if (cv == cplx{}) continue;
                            K[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                                K[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] +
                                (cu * cv) * m(s1, s2, s1p, s2p);
                        }
                }
    return K;
}

template <class C>
Multiplet<C> to_multiplet(const MatrixWigner2<C>& m) {
    enum { O = 0, X = 1, Y = 2, Z = 3 };
    auto K = kappa_components(m);
    auto minus = [&](int a, int b) { return K[a][b] - K[b][a]; };
    Multiplet<C> out{};
    out.sc1 = K[O][O] - K[X][X] - K[Y][Y] - K[Z][Z];
    out.sc2 = (1.0 / 3.0) * (3.0 * K[O][O] + K[X][X] + K[Y][Y] + K[Z][Z]);
    out.v1 = {K[X][O] + K[O][X], K[Y][O] + K[O][Y], K[Z][O] + K[O][Z]};
    out.v2 = {minus(X, O) + cplx(0, 1) * minus(Z, Y), minus(Y, O) + cplx(0, 1) * minus(X, Z),
              minus(Z, O) + cplx(0, 1) * minus(Y, X)};
    out.v3 = {minus(X, O) - cplx(0, 1) * minus(Z, Y), minus(Y, O) - cplx(0, 1) * minus(X, Z),
              minus(Z, O) - cplx(0, 1) * minus(Y, X)};
    out.q = {-1.0 * K[X][X] - K[Y][Y] + 2.0 * K[Z][Z], K[X][Y] + K[Y][X], K[Y][Z] + K[Z][Y],
             K[X][X] - K[Y][Y], K[X][Z] + K[Z][X]};
    return out;
}

template <class C>
MatrixWigner2<C> from_multiplet(const Multiplet<C>& t) {
    enum { O = 0, X = 1, Y = 2, Z = 3 };
    const cplx half(0.5, 0.0);
    const cplx halfi(0.0, -0.5);  // 1/(2i)
    std::array<std::array<C, 4>, 4> K;
    // scalars and diagonal
    C w00 = 0.25 * (t.sc1 + 3.0 * t.sc2);
    C trace = 0.75 * (t.sc2 - t.sc1);  // Wxx + Wyy + Wzz
    C wzz = (1.0 / 3.0) * (t.q[0] + trace);
    C wxx = half * (trace - wzz + t.q[3]);
    C wyy = trace - wzz - wxx;
    // antisymmetric pairs from v2/v3
    C wx0m = half * (t.v2[0] + t.v3[0]);
    C wzym = halfi * (t.v2[0] - t.v3[0]);
    C wy0m = half * (t.v2[1] + t.v3[1]);
    C wxzm = halfi * (t.v2[1] - t.v3[1]);
    C wz0m = half * (t.v2[2] + t.v3[2]);
    C wyxm = halfi * (t.v2[2] - t.v3[2]);
    K[O][O] = w00;
    K[X][X] = wxx;
    K[Y][Y] = wyy;
    K[Z][Z] = wzz;
    K[X][O] = half * (t.v1[0] + wx0m);
    K[O][X] = half * (t.v1[0] - wx0m);
    K[Y][O] = half * (t.v1[1] + wy0m);
    K[O][Y] = half * (t.v1[1] - wy0m);
    K[Z][O] = half * (t.v1[2] + wz0m);
    K[O][Z] = half * (t.v1[2] - wz0m);
    K[Y][X] = half * (t.q[1] + wyxm);
    K[X][Y] = half * (t.q[1] - wyxm);
    K[Z][Y] = half * (t.q[2] + wzym);
    K[Y][Z] = half * (t.q[2] - wzym);
    K[X][Z] = half * (t.q[4] + wxzm);
    K[Z][X] = half * (t.q[4] - wxzm);
    // invert U (x) U via U^{-1} = 2 U+
    const Mat4 U = u_matrix();
    const C z = zero_like(t.sc1);
    MatrixWigner2<C> m;
    m.comp.fill(z);
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s1p = 0; s1p < 2; ++s1p)
                for (int s2p = 0; s2p < 2; ++s2p) {
                    C acc = z;
                    for (int k = 0; k < 4; ++k) {
                        const cplx cu = std::conj(U[static_cast<std::size_t>(k)][static_cast<std::size_t>(2 * s1 + s1p)]);
                        if (cu == cplx{}) continue;
                        for (int l = 0; l < 4; ++l) {
                            const cplx cv = std::conj(U[static_cast<std::size_t>(l)][static_cast<std::size_t>(2 * s2 + s2p)]);
                            if (cv == cplx{}) continue;
                            acc = acc + (4.0 * cu * cv) * K[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
                        }
                    }
                    m(s1, s2, s1p, s2p) = acc;
                }
    return m;
}

// one-sided spin swaps (sigma1 <-> sigma2 on unprimed / primed labels)
template <class C>
MatrixWigner2<C> spin_swap_unprimed(const MatrixWigner2<C>& m) {
    MatrixWigner2<C> out = m;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s1p = 0; s1p < 2; ++s1p)
                for (int s2p = 0; s2p < 2; ++s2p) out(s1, s2, s1p, s2p) = m(s2, s1, s1p, s2p);
    return out;
}

template <class C>
MatrixWigner2<C> spin_swap_primed(const MatrixWigner2<C>& m) {
    MatrixWigner2<C> out = m;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s1p = 0; s1p < 2; ++s1p)
                for (int s2p = 0; s2p < 2; ++s2p) out(s1, s2, s1p, s2p) = m(s1, s2, s2p, s1p);
    return out;
}

// Full particle exchange: both-sided spin conjugation by the permutation
// matrix together with the orbital argument swap (passed as a functor; use
// the identity for scalar placeholders).
template <class C, class OrbitalSwap>
MatrixWigner2<C> exchange_conjugate(const MatrixWigner2<C>& m, OrbitalSwap&& swap_orbital) {
    MatrixWigner2<C> out = m;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s2 = 0; s2 < 2; ++s2)
            for (int s1p = 0; s1p < 2; ++s1p)
                for (int s2p = 0; s2p < 2; ++s2p)
                    out(s1, s2, s1p, s2p) = swap_orbital(m(s2, s1, s2p, s1p));
    return out;
}

template <class C>
MatrixWigner2<C> exchange_conjugate(const MatrixWigner2<C>& m) {
    return exchange_conjugate(m, [](const C& c) { return c; });
}

// Integrates out body 2: contracts the sigma2 = sigma2' diagonal and applies
// the caller's phase-space reduction to each carrier.
template <class C, class F>
MatrixWigner1<C> reduce_one_body(const MatrixWigner2<C>& m, F&& integrate_body2) {
    MatrixWigner1<C> out;
    for (int s1 = 0; s1 < 2; ++s1)
        for (int s1p = 0; s1p < 2; ++s1p) {
            C acc = m(s1, 0, s1p, 0) + m(s1, 1, s1p, 1);
            out.comp[static_cast<std::size_t>(2 * s1 + s1p)] = integrate_body2(acc);
        }
    return out;
}

// ---------------------------------------------------------------------------
// spin (x) orbital product states
// ---------------------------------------------------------------------------

// State of the form (spin density) (x) (orbital quasidensity); the 16 spin
// coefficients multiply one shared orbital Wigner function.
struct SpinProductState {
    std::array<cplx, 16> spin{};
    std::shared_ptr<const WignerFunction> orbital;
    bool orbital_verified = false;
    Statistics orbital_class = Statistics::Degenerate;
    bool symmetry_warning = false;

    MatrixWigner2<cplx> spin_matrix() const {
        MatrixWigner2<cplx> m;
        m.comp = spin;
        return m;
    }
};

// Singlet spin state over a symmetric orbital pair. With verify_orbital the
// orbital is classified and a warning flag is set unless it is Bose.
SpinProductState singlet_state(WignerFunction orbital, double tol = 1e-6,
                               bool verify_orbital = true);

// Triplet spin state alpha |uu> + beta (|ud>+|du>)/sqrt2 + gamma |dd> over an
// antisymmetric orbital pair; coefficients must be normalized to 1 within
// 1e-12.
SpinProductState triplet_state(cplx alpha, cplx beta, cplx gamma, WignerFunction orbital,
                               double tol = 1e-6, bool verify_orbital = true);

// Transformed central slice (R = P = 0) of each multiplet component: the
// orbital slice is transformed once and scaled by the spin multiplet
// coefficients.
Multiplet<SampledField> tilde_multiplet(const SpinProductState& state, Exec exec = default_exec());

struct ComponentResidual {
    std::string name;
    double residual = 0.0;  // sup |t(v,p) - s t(p,v)| / global sup
    double norm = 0.0;      // sup |t| of this component
};

struct MultipletSwapReport {
    std::array<ComponentResidual, 16> components{};
    double worst = 0.0;
    double tolerance = 0.0;

    bool pass() const { return worst <= tolerance; }
};

// Component-wise exchange-symmetry check t^c(v,p) = s_c t^c(p,v) with the
// exchange sign table; components are transformed slices on matched grids.
MultipletSwapReport check_fermi_multiplet(const Multiplet<SampledField>& tilde_mult, double tol);

struct OneBodyReduction {
    std::array<cplx, 4> physical;  // coefficients of (W0, Wx, Wy, Wz)
    SampledField orbital;          // reduced one-body quasidensity (x, p)
};

// One-body reduction of a product state: spin slot 2 contracted, body 2
// integrated out; `physical` holds the U-transformed spin coefficients.
OneBodyReduction reduce_one_body(const SpinProductState& state, Exec exec = default_exec());

struct SpinAlgebraCheck {
    // worst deviation of the one-sided swaps, the exchange conjugation and
    // the reflection table from their diagonal sign action in the multiplet
    // basis, over random instances
    double sign_table_residual = 0.0;
    // worst from_multiplet(to_multiplet(m)) deviation
    double round_trip_residual = 0.0;
    // worst |v3 - conj(v2)| on random Hermitian instances
    double conjugate_pair_residual = 0.0;
};

// Finite-linear-algebra verification of the multiplet sign tables on random
// scalar instances; deterministic for a fixed seed.
SpinAlgebraCheck spin_algebra_selftest(unsigned seed, int draws);

}  // namespace wig

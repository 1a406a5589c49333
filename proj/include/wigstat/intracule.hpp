#pragma once

#include "wigstat/wigner.hpp"

namespace wig {

// Two-body Wigner function re-indexed by extracule/intracule coordinates
//   R = (x1+x2)/sqrt(2), r = (x1-x2)/sqrt(2)  (and P, p likewise).
//
// The 45-degree rotation maps the square (x1,x2) lattice onto the
// checkerboard sublattice {u+w even} of a square lattice with spacing
// dx/sqrt(2); the (R,r) axes below are that lattice padded to 2n points per
// side. Points off the checkerboard (or outside the image of the source
// lattice) are invalid: accessors return 0 there and quadrature weights the
// valid points with the doubled cell area, so the change of variables is
// exact with no interpolation anywhere. Storage stays in the compact source
// layout; the padded field can be materialized on demand.
//
// Only the two-body case is implemented. Larger systems would reduce to the
// change of variables for one adjacent pair plus the reflection condition on
// every pair; that extension point is deliberately left open.
class IntraculeWigner {
  public:
    static IntraculeWigner from_wigner(const WignerFunction& w);

    const Axis& axis_R() const { return ax_R_; }
    const Axis& axis_r() const { return ax_r_; }
    const Axis& axis_P() const { return ax_P_; }
    const Axis& axis_p() const { return ax_p_; }
    const Axis& source_x() const { return src_x_; }
    const Axis& source_p() const { return src_p_; }

    // indices into the padded axes (0 .. 2n-1 each)
    bool valid(int iR, int ir, int iP, int ip) const;
    cplx value(int iR, int ir, int iP, int ip) const;

    cplx integral() const;
    WignerFunction to_wigner() const;

    // Particle exchange (r,p) -> (-r,-p), performed as an exact index
    // permutation of the source lattice.
    IntraculeWigner reflected() const;

    // Materializes the padded 4-axis field (R, r, P, p) with zeros on
    // invalid points. Intended for small grids and file dumps.
    SampledField to_field() const;

    const SampledField& source_data() const { return data_; }

  private:
    IntraculeWigner() = default;

    Axis ax_R_, ax_r_, ax_P_, ax_p_;
    Axis src_x_, src_p_;
    SampledField data_;  // compact, (x1, x2, p1, p2) layout
};

// The (r,p) plane at fixed extracule indices, on the parent's padded fine
// axes; only the parity-matching checkerboard points carry samples.
struct IntraculeSlice {
    double R_value = 0.0;
    double P_value = 0.0;
    int parity_r = 0;  // populated r-points have (index - n) of this parity
    int parity_p = 0;
    SampledField data;  // axes (r, p), each 2n fine points
    // filled during extraction: the largest |value| overall and over the
    // points that touch the source-lattice edge (the rim of the populated
    // diamond). Their ratio is the per-slice box-adequacy measure.
    double populated_max = 0.0;
    double edge_max = 0.0;
};

enum class TransformSide { Position, Momentum };

// Partial transform of a slice over one intracule variable. side Position
// holds (v, p) with v the dual of the fine r axis; side Momentum holds
// (r, s) with s the dual of the fine p axis.
struct TildeSlice {
    double R_value = 0.0;
    double P_value = 0.0;
    int parity_r = 0;
    int parity_p = 0;
    TransformSide side = TransformSide::Position;
    SampledField data;
};

IntraculeWigner to_intracule(const WignerFunction& w);
WignerFunction from_intracule(const IntraculeWigner& iw);

IntraculeSlice slice(const IntraculeWigner& iw, int R_index, int P_index);

// tilde: (v,p) from integral omega(r,p) e^{+2ivr} dr over the populated
// r-points (cell weight sqrt(2) dx, i.e. twice the fine spacing).
TildeSlice tilde(const IntraculeSlice& s, Exec exec = default_exec());
// hat: (r,s) from integral omega(r,p) e^{-2isp} dp, same weighting in p.
TildeSlice hat(const IntraculeSlice& s, Exec exec = default_exec());

// Exact inverses on the fine lattice (reproduce the masked slice).
IntraculeSlice tilde_inverse(const TildeSlice& t, Exec exec = default_exec());

}  // namespace wig

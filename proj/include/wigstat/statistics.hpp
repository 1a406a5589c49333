#pragma once

#include <string>

#include "wigstat/intracule.hpp"

namespace wig {

enum class Statistics { Bose, Fermi, Neither, Degenerate };

const char* to_string(Statistics s);

struct StatisticsVerdict {
    Statistics classification = Statistics::Degenerate;
    double residual_sym = 0.0;      // sup |t(v,p) - t(p,v)| / sup |t|
    double residual_antisym = 0.0;  // sup |t(v,p) + t(p,v)| / sup |t|
    double residual_indist = 0.0;   // sup |W(R,r;P,p) - W(R,-r;P,-p)| / sup |W|
    double tolerance = 0.0;
    int slices_checked = 0;
};

// Raw swap residuals of one transformed slice. The compared points are the
// (v, p) pairs where both orderings land on stored grid nodes: v restricted
// to the central window of the fine dual axis, p to the populated sublattice.
struct SwapResiduals {
    double num_sym = 0.0;
    double num_antisym = 0.0;
    double den = 0.0;
};

// first set: t(v,p) vs t(p,v); second set: t(v,p) vs t(-p,-v).
SwapResiduals first_set_residuals(const TildeSlice& t);
SwapResiduals second_set_residuals(const TildeSlice& t);

// Sweeps the lattice-aligned (R,P) slices (both extracule indices on the
// even sublattice, where the intracule subgrids are centered), transforms
// each, and classifies by the swap residuals. Slices carrying less than
// 1e-10 of the global maximum are skipped, as are slices whose populated
// diamond does not contain their content (rim above 1e-7 of the slice peak);
// slices_checked counts the rest, and a sweep with nothing left to check
// reports Degenerate. Requires the source momentum spacing dp = pi/(2 n dx)
// so that the dual v grid coincides with the populated p grid; anything
// else throws.
StatisticsVerdict check_first_set(const IntraculeWigner& iw, double tol = 1e-6,
                                  Exec exec = default_exec());
StatisticsVerdict check_second_set(const IntraculeWigner& iw, double tol = 1e-6,
                                   Exec exec = default_exec());

// Residual of W(R,r;P,p) = W(R,-r;P,-p) over the whole valid lattice. This
// is an exact index permutation, so symmetrized states return roundoff-level
// values on any grid. The tolerance argument only validates as positive.
double check_indistinguishability(const IntraculeWigner& iw, double tol = 1e-6);

// Full pipeline: intracule change of variables, indistinguishability
// residual, first-set check, and (when indistinguishability passes) a
// second-set cross-validation. A cross-check disagreement demotes the
// verdict to Neither.
StatisticsVerdict classify(const WignerFunction& w, double tol = 1e-6,
                           Exec exec = default_exec());

}  // namespace wig

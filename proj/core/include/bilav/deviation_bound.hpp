#ifndef BILAV_DEVIATION_BOUND_HPP
#define BILAV_DEVIATION_BOUND_HPP

#include <vector>

#include "bilav/curve.hpp"
#include "bilav/spectral.hpp"

namespace bilav {

/// Lower bound on sup ||A(f1,f2) - E[f1]E[f2]||_2 over unit f1, f2 obtained
/// by alternating maximization.  Every reported value is certified by
/// re-evaluating the deviation at the final feasible pair, so it is a true
/// lower bound regardless of iteration accuracy.
struct DeviationEstimate {
    u64 p = 0;
    double lower_bound = 0.0;
    u64 restarts = 0;
    u64 iterations = 0; ///< total power-iteration steps across all restarts
    double residual = 0.0;
    std::vector<double> value_by_restart;
    std::vector<double> best_by_restart; ///< running max, non-decreasing
    std::vector<double> residual_by_restart;
    GridFunction best_f1; ///< unit in the normalized norm
    GridFunction best_f2;
};

/// Alternates exact half-steps: with f2 fixed the deviation is linear in f1,
/// so the optimal f1 is the top right singular vector of that matrix, and
/// symmetrically for f2.  Deterministic given seed.
DeviationEstimate deviation_norm_lower_bound(const Curve& curve, u64 restarts = 8,
                                             u64 iters = 200, u64 seed = 1);

} // namespace bilav

#endif

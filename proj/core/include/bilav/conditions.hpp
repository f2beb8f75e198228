#ifndef BILAV_CONDITIONS_HPP
#define BILAV_CONDITIONS_HPP

#include <limits>
#include <vector>

#include "bilav/curve.hpp"
#include "bilav/gram.hpp"
#include "bilav/kernel.hpp"

namespace bilav {

/// Exponent value standing in for "decays faster than any measured power"
/// (the underlying maximum was below 1e-12).
inline constexpr double kExponentInf = std::numeric_limits<double>::infinity();

struct ConditionThresholds {
    double beta_target = 1.5; ///< decay target for off-diagonal Gram entries
    double c_thr = 2.0;       ///< diagonal flag: |I| > c_thr * p^{-beta_target}
    u64 diag_cap = 4;         ///< row/col count budget for "O(1) partners"
    u64 h_full_limit = 256;   ///< scan every h != 0 up to this p
    u64 h_sample = 32;        ///< h draws above h_full_limit
    u64 pair_full_limit = 1024; ///< full (y,y') Gram up to this p
    u64 pair_sample = 100000;   ///< sampled pairs above pair_full_limit
    u64 seed = 1;
    u64 workers = 1;
};

/// Fitted decay exponents for one curve at one prime.  Maxima are measured
/// over s != 0 (trace sums), (x, y != 0) (kernel), and sampled shifts h
/// (off-diagonal Gram); exponents are -log_p of those maxima.
struct ConditionReport {
    u64 p = 0;
    double theta_hat = 0.0;
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double gamma = 0.0;
    double const_theta = 0.0; ///< max * p^{1/2}
    double const_alpha = 0.0; ///< max * p^{1/2}
    double const_beta = 0.0;  ///< max * p^{beta_target}
    double max_trace = 0.0;   ///< max_{s!=0} |E_y e_p(s phi1(y))|
    double max_kernel = 0.0;  ///< max_{x, y!=0} |K(x,y)|
    double max_offdiag = 0.0; ///< max over h, (y,y') off-diagonal |I|
    std::vector<u64> h_used;
    std::vector<double> offdiag_max_by_h; ///< parallel to h_used
    std::vector<DiagonalSet> diag_stats;  ///< parallel to h_used
    u64 diag_max_row = 0;
    u64 diag_max_col = 0;
    bool h_exhaustive = false;
    bool pairs_exhaustive = false;
};

/// gamma = min{theta, alpha - 1/4, beta/4 - 1/4} with infinities dropping out.
double gamma_from_exponents(double theta_hat, double alpha_hat, double beta_hat);

/// Measures the three decay conditions for the curve.  An empty h_sample
/// selects the default policy: every h != 0 when p <= h_full_limit, otherwise
/// thresholds.h_sample seeded draws.
ConditionReport verify_conditions(const Curve& curve, std::vector<u64> h_sample = {},
                                  const ConditionThresholds& thresholds = {});

} // namespace bilav

#endif

#ifndef BILAV_DEGENERACY_HPP
#define BILAV_DEGENERACY_HPP

#include <array>
#include <optional>
#include <vector>

#include "bilav/curve.hpp"
#include "bilav/gram.hpp"

namespace bilav {

/// Rank-degeneracy analysis of the leading forms of the fourfold system.
/// With s = (+, -, -, +), w = (y, y+h, y', y'+h), a = lead(phi1),
/// b = lead(phi2):
///   G_lead  = a * sum_i s_i z_i^{d1}
///   F_lead  = b * sum_i s_i w_i z_i^{d2}                   (d1 < d2)
///   F_lead  = sum_i s_i u_i z_i^{d2},  u = (b y, b(y+h)-a h, b y', b(y'+h)-a h)
///                                                          (d1 = d2)
/// A pair (y, y') is predicted bad when the two gradient rows become
/// proportional at a nonzero F_p point of {G_lead = 0}: all z_i nonzero forces
/// w_i z_i^{d2-d1} constant (resp. u_i constant), and each pattern of one or
/// two vanishing coordinates (possible only when d1 >= 2) gives the analogous
/// equation with the matching terms deleted.  Root choices are enumerated via
/// mth_roots, so a flagged pair always carries a concrete singular witness.

/// Singular witness of the leading system for (y, y'), if the degeneracy
/// equations produce one.  Guard lines are not handled here.
std::optional<std::array<u64, 4>> predicted_bad_witness(const Curve& curve, u64 h, u64 y,
                                                        u64 yp);

/// Guard lines y, y' in {0, -h} are always included.
bool is_predicted_bad(const Curve& curve, u64 h, u64 y, u64 yp);

/// Full (y, y') scan.  Row/column maxima are computed outside the guard
/// lines (see DiagonalSet::guard_excluded).  Throws MissingMeta for table
/// curves and ZeroShift for h = 0; requires 4*d2 < p and, when d1 = d2,
/// distinct leading coefficients.
DiagonalSet predicted_bad_pairs(const Curve& curve, u64 h);

struct SingularScanReport {
    bool smooth_hypersurface = true; // {G_lead = 0} has no singular F_p point
    bool smooth_codim2 = true;       // {G_lead = F_lead = 0} has none either
    bool f_lead_degenerate = false;  // all coefficients of F_lead vanish
    std::vector<std::array<u64, 4>> hypersurface_witnesses;
    std::vector<std::array<u64, 4>> codim2_witnesses;
    u64 points_scanned = 0;
};

/// Walks all projective representatives (first nonzero coordinate = 1) of
/// F_p^4 \ {0}, evaluating the leading forms and the six 2x2 Jacobian minors.
/// Throws ScanTooLarge for p > 127.
SingularScanReport leading_form_singular_scan(const Curve& curve, u64 y, u64 yp, u64 h);

} // namespace bilav

#endif

#ifndef BILAV_EXPSUM_HPP
#define BILAV_EXPSUM_HPP

#include "bilav/curve.hpp"

namespace bilav {

/// Parameters (y, y', h) of the constrained fourfold sum
///   S = sum_{G(z)=0} e_p(F(z)),  z = (z1, z2, z3, z4),
/// with constraint and phase
///   G = phi1(z1) - phi1(z2) - phi1(z3) + phi1(z4)
///   F = y*phi2(z1) + h*phi1(z2) - (y+h)*phi2(z2)
///       - y'*phi2(z3) - h*phi1(z4) + (y'+h)*phi2(z4).
struct ConstrainedSumSpec {
    u64 y = 0;
    u64 yp = 0;
    u64 h = 0;
};

u64 g_value(const Curve& curve, u64 z1, u64 z2, u64 z3, u64 z4);
u64 f_value(const Curve& curve, const ConstrainedSumSpec& spec, u64 z1, u64 z2, u64 z3,
            u64 z4);

/// Iterates (z1, z2, z3) and resolves z4 through the phi1 preimage table;
/// phases are tallied into integer counters so the final complex sum has only
/// p rounding-relevant terms.
cplx constrained_exp_sum(const Curve& curve, const ConstrainedSumSpec& spec);

} // namespace bilav

#endif

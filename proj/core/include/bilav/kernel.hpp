#ifndef BILAV_KERNEL_HPP
#define BILAV_KERNEL_HPP

#include <vector>

#include "bilav/curve.hpp"
#include "bilav/fp.hpp"

namespace bilav {

enum class KernelBuild { naive, fast };

/// K(x, y) = (1/p) sum_{z in domain} e_p(x*phi1(z) + y*phi2(z)) for y != 0,
/// K(x, 0) = 0.  Row-major p x p table, entry (x, y) at x*p + y.  Carries a
/// copy of the field so downstream operator code needs no extra context.
struct KernelTable {
    PrimeField field;
    KernelBuild mode;
    std::vector<cplx> entries;

    u64 p() const { return field.p(); }
    cplx at(u64 x, u64 y) const { return entries[x * field.p() + y]; }
    cplx& at(u64 x, u64 y) { return entries[x * field.p() + y]; }
};

/// naive: literal double sum per entry.  fast: for each x, bucket
/// e_p(x*phi1(z)) by the value of phi2(z), then evaluate all y at once with a
/// positive-sign chirp transform; O(p^2 log p) total.
KernelTable build_kernel_table(const Curve& curve, KernelBuild mode = KernelBuild::fast,
                               unsigned workers = 1);

/// Gauss-sum closed form for the curve (y, y^2):
/// K(x, y) = (1/p) * g_p * legendre(y) * e_p(-x^2 / (4y)), where g_p = sqrt(p)
/// for p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.  Throws ZeroY at y = 0.
cplx quad_kernel_closed_form(const PrimeField& f, u64 x, u64 y);

} // namespace bilav

#endif

#ifndef BILAV_BILINEAR_HPP
#define BILAV_BILINEAR_HPP

#include <utility>

#include "bilav/curve.hpp"
#include "bilav/kernel.hpp"
#include "bilav/spectral.hpp"

namespace bilav {

/// A(f1,f2)(x) = (1/p) sum_y f1(x + phi1(y)) f2(x + phi2(y)).
GridFunction bilinear_average(const Curve& curve, const GridFunction& f1,
                              const GridFunction& f2);

/// A(f1,f2) - E[f1] E[f2] and its normalized l2 norm.
std::pair<GridFunction, double> deviation(const Curve& curve, const GridFunction& f1,
                                          const GridFunction& f2);

/// A = j1 + j2 + j3 pointwise: j1 the mean term, j2 the phi1-trace term
/// (frequencies with n = 0), j3 everything passing through the kernel.
struct JDecomposition {
    cplx j1{0.0, 0.0};
    GridFunction j2;
    GridFunction j3;
};

/// kernel may be null, in which case a fast table is built internally.
JDecomposition j_decompose(const Curve& curve, const GridFunction& f1,
                           const GridFunction& f2, const KernelTable* kernel = nullptr);

/// sum_s |sum_{n != 0} f1hat(s-n) f2hat(n) K(s-n, n)|^2.
double s_slice_l2(const GridFunction& f1, const GridFunction& f2, const KernelTable& kernel);

/// T(g)(x) = sum_y g(y) K(x,y) conj(K(x-h, y+h)).
GridFunction apply_T(const KernelTable& kernel, u64 h, const GridFunction& g);

/// sum_{u,v} F(u) G(v) K(u,v) conj(K(u-h, v+h)).
cplx tt_form(const KernelTable& kernel, u64 h, const GridFunction& F,
             const GridFunction& G);

} // namespace bilav

#endif

#ifndef BILAV_OPNORM_HPP
#define BILAV_OPNORM_HPP

#include <functional>
#include <memory>

#include "bilav/kernel.hpp"
#include "bilav/spectral.hpp"

namespace bilav {

/// Matrix-free rectangular operator on grid functions.
struct LinearMap {
    u64 rows = 0;
    u64 cols = 0;
    std::function<void(const GridFunction&, GridFunction&)> apply;
    std::function<void(const GridFunction&, GridFunction&)> apply_adjoint;
};

/// Wraps an explicit row-major matrix (shared, so the map stays cheap to copy).
LinearMap make_dense_map(u64 rows, u64 cols, std::shared_ptr<const std::vector<cplx>> a);

/// M_h(u,v) = K(u,v) conj(K(u-h, v+h)); materialized when p <= 1024, matrix
/// free above that.
LinearMap make_kernel_pair_map(const KernelTable& kernel, u64 h);

struct OperatorNormResult {
    double value = 0.0;    ///< largest singular value estimate (max over restarts)
    bool converged = false;
    u64 iterations = 0;    ///< total power iterations across restarts
    double residual = 0.0; ///< final relative change of the best restart
};

/// Power iteration on map^H map with seeded complex Gaussian starts.
OperatorNormResult operator_norm(const LinearMap& map, u64 restarts = 8, u64 iters = 200,
                                 double tol = 1e-9, u64 seed = 1);

} // namespace bilav

#endif

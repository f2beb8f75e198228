#include "bilav/opnorm.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "bilav/rng.hpp"

namespace bilav {

namespace {

using MatC = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VecC = Eigen::VectorXcd;

double l2(const GridFunction& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

} // namespace

LinearMap make_dense_map(u64 rows, u64 cols, std::shared_ptr<const std::vector<cplx>> a) {
    if (!a || a->size() != rows * cols) {
        throw std::invalid_argument("make_dense_map: matrix size mismatch");
    }
    LinearMap map;
    map.rows = rows;
    map.cols = cols;
    map.apply = [rows, cols, a](const GridFunction& in, GridFunction& out) {
        Eigen::Map<const MatC> m(a->data(), static_cast<Eigen::Index>(rows),
                                 static_cast<Eigen::Index>(cols));
        Eigen::Map<const VecC> x(in.data(), static_cast<Eigen::Index>(cols));
        out.resize(rows);
        Eigen::Map<VecC> y(out.data(), static_cast<Eigen::Index>(rows));
        y.noalias() = m * x;
    };
    map.apply_adjoint = [rows, cols, a](const GridFunction& in, GridFunction& out) {
        Eigen::Map<const MatC> m(a->data(), static_cast<Eigen::Index>(rows),
                                 static_cast<Eigen::Index>(cols));
        Eigen::Map<const VecC> x(in.data(), static_cast<Eigen::Index>(rows));
        out.resize(cols);
        Eigen::Map<VecC> y(out.data(), static_cast<Eigen::Index>(cols));
        y.noalias() = m.adjoint() * x;
    };
    return map;
}

LinearMap make_kernel_pair_map(const KernelTable& kernel, u64 h) {
    const u64 p = kernel.p();
    h %= p;
    if (h == 0) throw ZeroShift("make_kernel_pair_map: h must be nonzero");

    if (p <= 1024) {
        auto m = std::make_shared<std::vector<cplx>>(p * p);
        for (u64 u = 0; u < p; ++u) {
            const u64 umh = u >= h ? u - h : u + p - h;
            for (u64 v = 0; v < p; ++v) {
                u64 vph = v + h;
                if (vph >= p) vph -= p;
                (*m)[u * p + v] = kernel.at(u, v) * std::conj(kernel.at(umh, vph));
            }
        }
        return make_dense_map(p, p, std::move(m));
    }

    LinearMap map;
    map.rows = p;
    map.cols = p;
    const KernelTable* k = &kernel;
    map.apply = [p, h, k](const GridFunction& in, GridFunction& out) {
        out.assign(p, cplx{0.0, 0.0});
        for (u64 u = 0; u < p; ++u) {
            const u64 umh = u >= h ? u - h : u + p - h;
            cplx acc{0.0, 0.0};
            for (u64 v = 0; v < p; ++v) {
                u64 vph = v + h;
                if (vph >= p) vph -= p;
                acc += in[v] * k->at(u, v) * std::conj(k->at(umh, vph));
            }
            out[u] = acc;
        }
    };
    map.apply_adjoint = [p, h, k](const GridFunction& in, GridFunction& out) {
        out.assign(p, cplx{0.0, 0.0});
        for (u64 v = 0; v < p; ++v) {
            u64 vph = v + h;
            if (vph >= p) vph -= p;
            cplx acc{0.0, 0.0};
            for (u64 u = 0; u < p; ++u) {
                const u64 umh = u >= h ? u - h : u + p - h;
                acc += in[u] * std::conj(k->at(u, v)) * k->at(umh, vph);
            }
            out[v] = acc;
        }
    };
    return map;
}

OperatorNormResult operator_norm(const LinearMap& map, u64 restarts, u64 iters,
                                 double tol, u64 seed) {
    if (!map.apply || !map.apply_adjoint || map.rows == 0 || map.cols == 0) {
        throw std::invalid_argument("operator_norm: incomplete map");
    }
    if (restarts == 0) restarts = 1;

    OperatorNormResult best;
    GridFunction v(map.cols), w, u;
    for (u64 r = 0; r < restarts; ++r) {
        Rng rng(mix64(seed, 0xA11Bu + r));
        for (auto& x : v) x = rng.next_cgauss();
        double nv = l2(v);
        if (nv == 0.0) {
            v[0] = 1.0;
            nv = 1.0;
        }
        for (auto& x : v) x /= nv;

        double sigma = 0.0, res = 1.0;
        bool conv = false;
        u64 it = 0;
        for (; it < iters; ++it) {
            map.apply(v, w);
            const double s = l2(w);
            map.apply_adjoint(w, u);
            const double nu = l2(u);
            res = std::abs(s - sigma) / std::max(s, 1e-300);
            sigma = s;
            if (res < tol) {
                conv = true;
                ++it;
                break;
            }
            if (nu < 1e-300) break; // map annihilates v: sigma estimate is 0
            for (u64 i = 0; i < map.cols; ++i) v[i] = u[i] / nu;
        }
        best.iterations += it;
        if (sigma > best.value || r == 0) {
            best.value = std::max(best.value, sigma);
            best.converged = conv;
            best.residual = res;
        }
    }
    return best;
}

} // namespace bilav

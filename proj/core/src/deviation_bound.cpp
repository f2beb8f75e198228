#include "bilav/deviation_bound.hpp"

#include <cmath>

#include "bilav/bilinear.hpp"
#include "bilav/opnorm.hpp"
#include "bilav/rng.hpp"

namespace bilav {

namespace {

constexpr u64 kDenseLimit = 1024;
constexpr u64 kMaxRounds = 40;
constexpr double kRoundTol = 1e-7;

double l2(const GridFunction& v) {
    double s = 0.0;
    for (const cplx& x : v) s += std::norm(x);
    return std::sqrt(s);
}

void normalize(GridFunction& v) {
    const double n = l2(v);
    if (n == 0.0) {
        v[0] = 1.0;
        return;
    }
    for (auto& x : v) x /= n;
}

/// Matrix of f1 -> A(f1, other) - E[f1] E[other]; swap_roles selects the
/// f2 half-step (other = fixed f1).
LinearMap half_step_map(const Curve& curve, const GridFunction& other, bool swap_roles) {
    const u64 p = curve.p();
    const auto& efree = swap_roles ? curve.eval2() : curve.eval1();
    const auto& efix = swap_roles ? curve.eval1() : curve.eval2();
    const cplx mean = expectation(other);
    const double inv_p = 1.0 / static_cast<double>(p);

    if (p <= kDenseLimit) {
        auto m = std::make_shared<std::vector<cplx>>(p * p, -mean * inv_p);
        auto& a = *m;
        for (u64 x = 0; x < p; ++x) {
            for (u64 y : curve.domain()) {
                u64 t = x + efree[y];
                if (t >= p) t -= p;
                u64 b = x + efix[y];
                if (b >= p) b -= p;
                a[x * p + t] += other[b] * inv_p;
            }
        }
        return make_dense_map(p, p, std::move(m));
    }

    LinearMap map;
    map.rows = p;
    map.cols = p;
    const Curve* c = &curve;
    GridFunction fixed = other;
    map.apply = [p, inv_p, mean, c, fixed, swap_roles](const GridFunction& in,
                                                       GridFunction& out) {
        const auto& e1 = swap_roles ? c->eval2() : c->eval1();
        const auto& e2 = swap_roles ? c->eval1() : c->eval2();
        cplx total{0.0, 0.0};
        for (const cplx& v : in) total += v;
        out.assign(p, -mean * total * inv_p);
        for (u64 x = 0; x < p; ++x) {
            cplx acc{0.0, 0.0};
            for (u64 y : c->domain()) {
                u64 t = x + e1[y];
                if (t >= p) t -= p;
                u64 b = x + e2[y];
                if (b >= p) b -= p;
                acc += in[t] * fixed[b];
            }
            out[x] += acc * inv_p;
        }
    };
    map.apply_adjoint = [p, inv_p, mean, c, fixed, swap_roles](const GridFunction& in,
                                                               GridFunction& out) {
        const auto& e1 = swap_roles ? c->eval2() : c->eval1();
        const auto& e2 = swap_roles ? c->eval1() : c->eval2();
        cplx total{0.0, 0.0};
        for (const cplx& v : in) total += v;
        out.assign(p, -std::conj(mean) * total * inv_p);
        for (u64 x = 0; x < p; ++x) {
            for (u64 y : c->domain()) {
                u64 t = x + e1[y];
                if (t >= p) t -= p;
                u64 b = x + e2[y];
                if (b >= p) b -= p;
                out[t] += std::conj(fixed[b]) * in[x] * inv_p;
            }
        }
    };
    return map;
}

/// Warm-started power iteration on map^H map; v holds the start direction and
/// returns the final one.  Returns the singular value estimate.
double power_iterate(const LinearMap& map, GridFunction& v, u64 iters, u64* steps) {
    GridFunction w, u;
    double sigma = 0.0;
    for (u64 it = 0; it < iters; ++it) {
        ++*steps;
        map.apply(v, w);
        const double s = l2(w);
        map.apply_adjoint(w, u);
        const double nu = l2(u);
        const double res = std::abs(s - sigma) / std::max(s, 1e-300);
        sigma = s;
        if (res < 1e-11) break;
        if (nu < 1e-300) break;
        for (u64 i = 0; i < map.cols; ++i) v[i] = u[i] / nu;
    }
    return sigma;
}

} // namespace

DeviationEstimate deviation_norm_lower_bound(const Curve& curve, u64 restarts, u64 iters,
                                             u64 seed) {
    const u64 p = curve.p();
    const double sqp = std::sqrt(static_cast<double>(p));
    if (restarts == 0) restarts = 1;
    if (iters == 0) iters = 1;

    DeviationEstimate est;
    est.p = p;
    est.restarts = restarts;

    for (u64 r = 0; r < restarts; ++r) {
        Rng rng(mix64(seed, 0xDE5Bu + r));
        GridFunction u1(p), u2(p);
        for (auto& x : u1) x = rng.next_cgauss();
        for (auto& x : u2) x = rng.next_cgauss();
        normalize(u1);
        normalize(u2);
        GridFunction f2(p);
        for (u64 i = 0; i < p; ++i) f2[i] = u2[i] * sqp;

        double prev = 0.0, res = 1.0;
        for (u64 round = 0; round < kMaxRounds; ++round) {
            const LinearMap m1 = half_step_map(curve, f2, false);
            power_iterate(m1, u1, iters, &est.iterations);
            GridFunction f1(p);
            for (u64 i = 0; i < p; ++i) f1[i] = u1[i] * sqp;

            const LinearMap m2 = half_step_map(curve, f1, true);
            const double sigma = power_iterate(m2, u2, iters, &est.iterations);
            for (u64 i = 0; i < p; ++i) f2[i] = u2[i] * sqp;

            res = std::abs(sigma - prev) / std::max(sigma, 1e-300);
            prev = sigma;
            if (res < kRoundTol) break;
        }

        GridFunction f1(p);
        for (u64 i = 0; i < p; ++i) f1[i] = u1[i] * sqp;
        const double certified = deviation(curve, f1, f2).second;
        est.value_by_restart.push_back(certified);
        est.residual_by_restart.push_back(res);
        if (certified > est.lower_bound) {
            est.lower_bound = certified;
            est.residual = res;
            est.best_f1 = f1;
            est.best_f2 = f2;
        }
        est.best_by_restart.push_back(est.lower_bound);
    }
    return est;
}

} // namespace bilav

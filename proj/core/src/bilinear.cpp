#include "bilav/bilinear.hpp"

#include <cmath>
#include <stdexcept>

namespace bilav {

namespace {

void check_len(const GridFunction& f, u64 p, const char* who) {
    if (f.size() != p) throw std::invalid_argument(std::string(who) + ": length must equal p");
}

/// (1/p) sum_y e_p(s phi1(y)) for every s, via the phi1 value histogram.
GridFunction trace_sums(const Curve& curve, const DftPlan& plan) {
    const u64 p = curve.p();
    GridFunction hist(p, cplx{0.0, 0.0});
    for (u64 y : curve.domain()) hist[curve.eval1()[y]] += 1.0;
    GridFunction out(p);
    plan.apply(hist, out, +1);
    const double inv_p = 1.0 / static_cast<double>(p);
    for (auto& v : out) v *= inv_p;
    return out;
}

} // namespace

GridFunction bilinear_average(const Curve& curve, const GridFunction& f1,
                              const GridFunction& f2) {
    const u64 p = curve.p();
    check_len(f1, p, "bilinear_average");
    check_len(f2, p, "bilinear_average");
    const auto& e1 = curve.eval1();
    const auto& e2 = curve.eval2();
    const auto& dom = curve.domain();
    const double inv_p = 1.0 / static_cast<double>(p);
    GridFunction out(p);
    for (u64 x = 0; x < p; ++x) {
        cplx acc{0.0, 0.0};
        for (u64 y : dom) {
            u64 a = x + e1[y];
            if (a >= p) a -= p;
            u64 b = x + e2[y];
            if (b >= p) b -= p;
            acc += f1[a] * f2[b];
        }
        out[x] = acc * inv_p;
    }
    return out;
}

std::pair<GridFunction, double> deviation(const Curve& curve, const GridFunction& f1,
                                          const GridFunction& f2) {
    GridFunction dev = bilinear_average(curve, f1, f2);
    const cplx mean = expectation(f1) * expectation(f2);
    for (auto& v : dev) v -= mean;
    const double n2 = norm(dev, 2.0);
    return {std::move(dev), n2};
}

JDecomposition j_decompose(const Curve& curve, const GridFunction& f1,
                           const GridFunction& f2, const KernelTable* kernel) {
    const u64 p = curve.p();
    check_len(f1, p, "j_decompose");
    check_len(f2, p, "j_decompose");
    KernelTable local{curve.field(), KernelBuild::fast, {}};
    if (!kernel) {
        local = build_kernel_table(curve, KernelBuild::fast);
        kernel = &local;
    }
    DftPlan plan(curve.field());
    const GridFunction fh1 = fourier_hat(plan, f1);
    const GridFunction fh2 = fourier_hat(plan, f2);
    const GridFunction tr = trace_sums(curve, plan);

    JDecomposition out;
    out.j1 = fh1[0] * fh2[0];

    GridFunction j2hat(p, cplx{0.0, 0.0});
    for (u64 s = 1; s < p; ++s) j2hat[s] = fh2[0] * fh1[s] * tr[s];
    out.j2 = fourier_invert(plan, j2hat);

    GridFunction j3hat(p, cplx{0.0, 0.0});
    for (u64 s = 0; s < p; ++s) {
        cplx acc{0.0, 0.0};
        for (u64 n = 1; n < p; ++n) {
            const u64 m = s >= n ? s - n : s + p - n;
            acc += fh1[m] * fh2[n] * kernel->at(m, n);
        }
        j3hat[s] = acc;
    }
    out.j3 = fourier_invert(plan, j3hat);
    return out;
}

double s_slice_l2(const GridFunction& f1, const GridFunction& f2,
                  const KernelTable& kernel) {
    const u64 p = kernel.p();
    check_len(f1, p, "s_slice_l2");
    check_len(f2, p, "s_slice_l2");
    DftPlan plan(kernel.field);
    const GridFunction fh1 = fourier_hat(plan, f1);
    const GridFunction fh2 = fourier_hat(plan, f2);
    double total = 0.0;
    for (u64 s = 0; s < p; ++s) {
        cplx acc{0.0, 0.0};
        for (u64 n = 1; n < p; ++n) {
            const u64 m = s >= n ? s - n : s + p - n;
            acc += fh1[m] * fh2[n] * kernel.at(m, n);
        }
        total += std::norm(acc);
    }
    return total;
}

GridFunction apply_T(const KernelTable& kernel, u64 h, const GridFunction& g) {
    const u64 p = kernel.p();
    h %= p;
    if (h == 0) throw ZeroShift("apply_T: h must be nonzero");
    check_len(g, p, "apply_T");
    GridFunction out(p);
    for (u64 x = 0; x < p; ++x) {
        const u64 xmh = x >= h ? x - h : x + p - h;
        cplx acc{0.0, 0.0};
        for (u64 y = 0; y < p; ++y) {
            u64 yph = y + h;
            if (yph >= p) yph -= p;
            acc += g[y] * kernel.at(x, y) * std::conj(kernel.at(xmh, yph));
        }
        out[x] = acc;
    }
    return out;
}

cplx tt_form(const KernelTable& kernel, u64 h, const GridFunction& F,
             const GridFunction& G) {
    const u64 p = kernel.p();
    h %= p;
    if (h == 0) throw ZeroShift("tt_form: h must be nonzero");
    check_len(F, p, "tt_form");
    check_len(G, p, "tt_form");
    cplx total{0.0, 0.0};
    for (u64 u = 0; u < p; ++u) {
        const u64 umh = u >= h ? u - h : u + p - h;
        cplx acc{0.0, 0.0};
        for (u64 v = 0; v < p; ++v) {
            u64 vph = v + h;
            if (vph >= p) vph -= p;
            acc += G[v] * kernel.at(u, v) * std::conj(kernel.at(umh, vph));
        }
        total += F[u] * acc;
    }
    return total;
}

} // namespace bilav

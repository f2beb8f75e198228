#include "bilav/kernel.hpp"

#include <cmath>

#include "bilav/parallel.hpp"
#include "bilav/spectral.hpp"

namespace bilav {

namespace {

void build_naive(const Curve& curve, KernelTable& table, unsigned workers) {
    const PrimeField& f = curve.field();
    const u64 p = f.p();
    const auto& tab = f.char_table();
    const auto& e1 = curve.eval1();
    const auto& e2 = curve.eval2();
    const auto& dom = curve.domain();
    const double scale = 1.0 / static_cast<double>(p);

    // per-y phase offsets reused across all x
    std::vector<u64> ybase(p * dom.size());
    for (u64 y = 1; y < p; ++y) {
        u64* row = ybase.data() + y * dom.size();
        for (std::size_t i = 0; i < dom.size(); ++i) row[i] = f.mul(y, e2[dom[i]]);
    }

    parallel_for(p, workers, [&](std::size_t xi) {
        const u64 x = static_cast<u64>(xi);
        std::vector<u64> xbase(dom.size());
        for (std::size_t i = 0; i < dom.size(); ++i) xbase[i] = f.mul(x, e1[dom[i]]);
        cplx* out = table.entries.data() + x * p;
        out[0] = cplx(0.0, 0.0);
        for (u64 y = 1; y < p; ++y) {
            const u64* yb = ybase.data() + y * dom.size();
            cplx acc(0.0, 0.0);
            for (std::size_t i = 0; i < dom.size(); ++i) {
                u64 idx = xbase[i] + yb[i];
                if (idx >= p) idx -= p;
                acc += tab[idx];
            }
            out[y] = acc * scale;
        }
    });
}

void build_fast(const Curve& curve, KernelTable& table, unsigned workers) {
    const PrimeField& f = curve.field();
    const u64 p = f.p();
    const auto& tab = f.char_table();
    const auto& e1 = curve.eval1();
    const auto& e2 = curve.eval2();
    const auto& dom = curve.domain();
    const double scale = 1.0 / static_cast<double>(p);
    const DftPlan plan(f);

    parallel_for(p, workers, [&](std::size_t xi) {
        const u64 x = static_cast<u64>(xi);
        GridFunction bucket(p, cplx(0.0, 0.0));
        for (u64 z : dom) {
            bucket[e2[z]] += tab[f.mul(x, e1[z])];
        }
        GridFunction row;
        plan.apply(bucket, row, +1); // row[y] = sum_b bucket[b] e_p(y b)
        cplx* out = table.entries.data() + x * p;
        out[0] = cplx(0.0, 0.0);
        for (u64 y = 1; y < p; ++y) out[y] = row[y] * scale;
    });
}

} // namespace

KernelTable build_kernel_table(const Curve& curve, KernelBuild mode, unsigned workers) {
    const u64 p = curve.p();
    KernelTable table{curve.field(), mode, std::vector<cplx>(p * p)};
    if (mode == KernelBuild::naive) {
        build_naive(curve, table, workers);
    } else {
        build_fast(curve, table, workers);
    }
    return table;
}

cplx quad_kernel_closed_form(const PrimeField& f, u64 x, u64 y) {
    const u64 p = f.p();
    y %= p;
    if (y == 0) throw ZeroY("quad_kernel_closed_form: y must be nonzero");
    x %= p;

    const double root_p = std::sqrt(static_cast<double>(p));
    const cplx gauss = (p % 4 == 1) ? cplx(root_p, 0.0) : cplx(0.0, root_p);
    const double leg = static_cast<double>(legendre_symbol(f, y));
    const u64 inv4y = f.inv(f.mul(4, y));
    const u64 phase = f.neg(f.mul(f.mul(x, x), inv4y));
    return gauss * leg * f.ep_u(phase) / static_cast<double>(p);
}

} // namespace bilav

#include "bilav/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "bilav/rng.hpp"
#include "bilav/spectral.hpp"

namespace bilav {

namespace {

constexpr double kSentinelFloor = 1e-12;

double fit_exponent(double max_abs, double p) {
    if (max_abs < kSentinelFloor) return kExponentInf;
    return -std::log(max_abs) / std::log(p);
}

/// max_{s != 0} |(1/p) sum_y e_p(s phi1(y))| over the curve domain, via one
/// length-p transform of the phi1 value histogram.
double trace_sum_max(const Curve& curve) {
    const PrimeField& f = curve.field();
    const u64 p = f.p();
    GridFunction hist(p, cplx{0.0, 0.0});
    for (u64 y : curve.domain()) hist[curve.eval1()[y]] += 1.0;
    DftPlan plan(f);
    GridFunction out(p);
    plan.apply(hist, out, +1);
    double best = 0.0;
    for (u64 s = 1; s < p; ++s) best = std::max(best, std::abs(out[s]));
    return best / static_cast<double>(p);
}

std::vector<u64> pick_shifts(u64 p, const std::vector<u64>& requested,
                             const ConditionThresholds& t, bool* exhaustive) {
    std::vector<u64> hs;
    if (!requested.empty()) {
        std::unordered_set<u64> seen;
        for (u64 h : requested) {
            const u64 r = h % p;
            if (r != 0 && seen.insert(r).second) hs.push_back(r);
        }
        *exhaustive = hs.size() == p - 1;
        return hs;
    }
    if (p <= t.h_full_limit) {
        hs.resize(p - 1);
        for (u64 h = 1; h < p; ++h) hs[h - 1] = h;
        *exhaustive = true;
        return hs;
    }
    Rng rng(t.seed ^ 0x68u);
    std::unordered_set<u64> seen;
    while (hs.size() < std::min<u64>(t.h_sample, p - 1)) {
        const u64 h = 1 + rng.next_below(p - 1);
        if (seen.insert(h).second) hs.push_back(h);
    }
    *exhaustive = false;
    return hs;
}

} // namespace

double gamma_from_exponents(double theta_hat, double alpha_hat, double beta_hat) {
    return std::min({theta_hat, alpha_hat - 0.25, beta_hat / 4.0 - 0.25});
}

ConditionReport verify_conditions(const Curve& curve, std::vector<u64> h_sample,
                                  const ConditionThresholds& thresholds) {
    const u64 p = curve.p();
    const double pd = static_cast<double>(p);
    ConditionReport rep;
    rep.p = p;

    rep.max_trace = trace_sum_max(curve);
    rep.theta_hat = fit_exponent(rep.max_trace, pd);
    rep.const_theta = rep.max_trace * std::sqrt(pd);

    const KernelTable kernel =
        build_kernel_table(curve, KernelBuild::fast, thresholds.workers);
    double kmax = 0.0;
    for (u64 x = 0; x < p; ++x) {
        for (u64 y = 1; y < p; ++y) {
            kmax = std::max(kmax, std::abs(kernel.at(x, y)));
        }
    }
    rep.max_kernel = kmax;
    rep.alpha_hat = fit_exponent(kmax, pd);
    rep.const_alpha = kmax * std::sqrt(pd);

    rep.h_used = pick_shifts(p, h_sample, thresholds, &rep.h_exhaustive);
    rep.pairs_exhaustive = p <= thresholds.pair_full_limit;
    const double thr = thresholds.c_thr * std::pow(pd, -thresholds.beta_target);
    double offmax = 0.0;
    for (u64 h : rep.h_used) {
        double hmax = 0.0;
        DiagonalSet ds;
        if (rep.pairs_exhaustive) {
            const GramTable gram = fourfold_gram(kernel, h);
            ds = detect_diagonal(gram, thresholds.beta_target, thresholds.c_thr);
            for (u64 y = 0; y < p; ++y) {
                for (u64 yp = 0; yp < p; ++yp) {
                    const double a = std::abs(gram.at(y, yp));
                    if (a <= thr) hmax = std::max(hmax, a);
                }
            }
        } else {
            ds.p = p;
            ds.h = h;
            ds.threshold = thr;
            Rng rng(thresholds.seed ^ (h * 0x9E37u));
            for (u64 k = 0; k < thresholds.pair_sample; ++k) {
                const u64 y = rng.next_below(p);
                const u64 yp = rng.next_below(p);
                const double a = std::abs(gram_entry(kernel, h, y, yp));
                if (a > thr) {
                    ds.pairs.emplace_back(y, yp);
                } else {
                    hmax = std::max(hmax, a);
                }
            }
            recount_diagonal(ds, false);
        }
        rep.diag_max_row = std::max(rep.diag_max_row, ds.max_row_count);
        rep.diag_max_col = std::max(rep.diag_max_col, ds.max_col_count);
        rep.offdiag_max_by_h.push_back(hmax);
        rep.diag_stats.push_back(std::move(ds));
        offmax = std::max(offmax, hmax);
    }
    rep.max_offdiag = offmax;
    rep.beta_hat = fit_exponent(offmax, pd);
    rep.const_beta = offmax * std::pow(pd, thresholds.beta_target);
    rep.gamma = gamma_from_exponents(rep.theta_hat, rep.alpha_hat, rep.beta_hat);
    return rep;
}

} // namespace bilav

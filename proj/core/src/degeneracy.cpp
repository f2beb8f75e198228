#include "bilav/degeneracy.hpp"

namespace bilav {

namespace {

constexpr int kSign[4] = {+1, -1, -1, +1};

const CurveMeta& theory_meta(const Curve& curve, const char* who) {
    if (!curve.meta()) throw MissingMeta(std::string(who) + ": polynomial metadata required");
    const CurveMeta& m = *curve.meta();
    if (4 * m.d2 >= curve.p()) {
        throw std::invalid_argument(std::string(who) + ": requires 4*max(d1,d2) < p");
    }
    if (m.d1 == m.d2 && m.lead1 == m.lead2) {
        throw std::invalid_argument(std::string(who) +
                                    ": equal degrees need distinct leading terms");
    }
    return m;
}

u64 signed_term(const PrimeField& f, int sign, u64 v) {
    return sign > 0 ? v % f.p() : f.neg(v);
}

/// w_i = (y, y+h, y', y'+h)
std::array<u64, 4> w_values(const PrimeField& f, u64 h, u64 y, u64 yp) {
    return {y % f.p(), f.add(y, h), yp % f.p(), f.add(yp, h)};
}

/// u_i = (b y, b(y+h) - a h, b y', b(y'+h) - a h)
std::array<u64, 4> u_values(const PrimeField& f, const CurveMeta& m, u64 h, u64 y, u64 yp) {
    const u64 ah = f.mul(m.lead1, h);
    const auto w = w_values(f, h, y, yp);
    return {f.mul(m.lead2, w[0]), f.sub(f.mul(m.lead2, w[1]), ah), f.mul(m.lead2, w[2]),
            f.sub(f.mul(m.lead2, w[3]), ah)};
}

std::optional<std::array<u64, 4>> witness_equal_degrees(const Curve& curve,
                                                        const CurveMeta& m, u64 h, u64 y,
                                                        u64 yp) {
    const PrimeField& f = curve.field();
    const u64 d = m.d1;
    const auto u = u_values(f, m, h, y, yp);

    // mask marks the nonzero coordinates; at most two may vanish, and only
    // for d >= 2 does a vanishing coordinate also kill the gradient entries
    for (unsigned mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        if (d == 1 && mask != 15u) continue;
        int first = -1;
        bool constant = true;
        for (int i = 0; i < 4 && constant; ++i) {
            if (!(mask & (1u << i))) continue;
            if (first < 0) {
                first = i;
            } else if (u[i] != u[first]) {
                constant = false;
            }
        }
        if (!constant) continue;

        if (__builtin_popcount(mask) > 2) {
            // u constant on >= 3 coordinates forces (b-a)h = 0, excluded by
            // the preconditions
            throw std::logic_error("predicted_bad_witness: unreachable rank-1 pattern");
        }
        int i = -1, j = -1;
        for (int k = 0; k < 4; ++k) {
            if (!(mask & (1u << k))) continue;
            if (i < 0) i = k; else j = k;
        }
        // s_i z_i^d + s_j z_j^d = 0 with z_j normalized to 1
        const u64 rhs = (kSign[i] == kSign[j]) ? f.p() - 1 : 1;
        const auto roots = mth_roots(f, rhs, d);
        if (roots.empty()) continue;
        std::array<u64, 4> z{0, 0, 0, 0};
        z[i] = roots.front();
        z[j] = 1;
        return z;
    }
    return std::nullopt;
}

std::optional<std::array<u64, 4>> witness_distinct_degrees(const Curve& curve,
                                                           const CurveMeta& m, u64 h,
                                                           u64 y, u64 yp) {
    const PrimeField& f = curve.field();
    const u64 p = f.p();
    const u64 d1 = m.d1;
    const u64 mexp = m.d2 - m.d1;
    const auto w = w_values(f, h, y, yp);
    for (u64 wi : w) {
        if (wi == 0) return std::nullopt; // guard lines handled by the caller
    }

    for (unsigned mask = 0; mask < 16; ++mask) { // mask marks zeroed coordinates
        const int zeros = __builtin_popcount(mask);
        if (zeros > 2) continue;
        if (d1 == 1 && zeros != 0) continue; // grad G never vanishes for d1 = 1

        int j = -1;
        for (int k = 3; k >= 0; --k) {
            if (!(mask & (1u << k))) { j = k; break; }
        }
        // z_j = 1, and w_i z_i^mexp = w_j for the other nonzero coordinates
        std::array<std::vector<u64>, 4> roots;
        std::vector<int> free_idx;
        bool feasible = true;
        for (int i = 0; i < 4 && feasible; ++i) {
            if (mask & (1u << i)) continue;
            if (i == j) {
                roots[i] = {1};
                continue;
            }
            roots[i] = mth_roots(f, f.mul(w[j], f.inv(w[i])), mexp);
            if (roots[i].empty()) feasible = false;
            free_idx.push_back(i);
        }
        if (!feasible) continue;

        std::array<std::size_t, 4> idx{0, 0, 0, 0};
        while (true) {
            std::array<u64, 4> z{0, 0, 0, 0};
            u64 acc = 0;
            for (int i = 0; i < 4; ++i) {
                if (mask & (1u << i)) continue;
                z[i] = roots[i][idx[i]];
                acc = f.add(acc, signed_term(f, kSign[i], f.pow(z[i], d1)));
            }
            if (acc == 0) return z;
            std::size_t k = 0;
            for (; k < free_idx.size(); ++k) {
                const int i = free_idx[k];
                if (++idx[i] < roots[i].size()) break;
                idx[i] = 0;
            }
            if (k == free_idx.size()) break;
        }
        (void)p;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::array<u64, 4>> predicted_bad_witness(const Curve& curve, u64 h, u64 y,
                                                        u64 yp) {
    const CurveMeta& m = theory_meta(curve, "predicted_bad_witness");
    const PrimeField& f = curve.field();
    h %= f.p();
    if (h == 0) throw ZeroShift("predicted_bad_witness: h must be nonzero");
    y %= f.p();
    yp %= f.p();
    if (m.d1 == m.d2) return witness_equal_degrees(curve, m, h, y, yp);
    return witness_distinct_degrees(curve, m, h, y, yp);
}

bool is_predicted_bad(const Curve& curve, u64 h, u64 y, u64 yp) {
    const PrimeField& f = curve.field();
    h %= f.p();
    if (h == 0) throw ZeroShift("is_predicted_bad: h must be nonzero");
    y %= f.p();
    yp %= f.p();
    const u64 g1 = f.p() - h;
    if (y == 0 || y == g1 || yp == 0 || yp == g1) return true;
    return predicted_bad_witness(curve, h, y, yp).has_value();
}

DiagonalSet predicted_bad_pairs(const Curve& curve, u64 h) {
    theory_meta(curve, "predicted_bad_pairs");
    const PrimeField& f = curve.field();
    const u64 p = f.p();
    h %= p;
    if (h == 0) throw ZeroShift("predicted_bad_pairs: h must be nonzero");

    DiagonalSet set;
    set.p = p;
    set.h = h;
    set.threshold = 0.0;
    const u64 g1 = p - h;
    for (u64 y = 0; y < p; ++y) {
        const bool row_guard = (y == 0 || y == g1);
        for (u64 yp = 0; yp < p; ++yp) {
            if (row_guard || yp == 0 || yp == g1) {
                set.pairs.emplace_back(y, yp);
            } else if (predicted_bad_witness(curve, h, y, yp)) {
                set.pairs.emplace_back(y, yp);
            }
        }
    }
    recount_diagonal(set, true);
    return set;
}

SingularScanReport leading_form_singular_scan(const Curve& curve, u64 y, u64 yp, u64 h) {
    const CurveMeta& m = theory_meta(curve, "leading_form_singular_scan");
    const PrimeField& f = curve.field();
    const u64 p = f.p();
    if (p > 127) throw ScanTooLarge("leading_form_singular_scan: p must be <= 127");
    h %= p;
    if (h == 0) throw ZeroShift("leading_form_singular_scan: h must be nonzero");
    y %= p;
    yp %= p;

    const u64 d1 = m.d1;
    const u64 d2 = m.d2;

    // coefficient of z_i^{d1} in G_lead and of z_i^{d2} in F_lead
    std::array<u64, 4> gc{}, fc{};
    for (int i = 0; i < 4; ++i) gc[i] = signed_term(f, kSign[i], m.lead1);
    if (d1 < d2) {
        const auto w = w_values(f, h, y, yp);
        for (int i = 0; i < 4; ++i) fc[i] = signed_term(f, kSign[i], f.mul(m.lead2, w[i]));
    } else {
        const auto u = u_values(f, m, h, y, yp);
        for (int i = 0; i < 4; ++i) fc[i] = signed_term(f, kSign[i], u[i]);
    }

    SingularScanReport rep;
    rep.f_lead_degenerate = (fc[0] == 0 && fc[1] == 0 && fc[2] == 0 && fc[3] == 0);
    if (rep.f_lead_degenerate) rep.smooth_codim2 = false;

    std::vector<u64> pw_d1(p), pw_d1m(p), pw_d2(p), pw_d2m(p);
    for (u64 v = 0; v < p; ++v) {
        pw_d1[v] = f.pow(v, d1);
        pw_d1m[v] = f.pow(v, d1 - 1);
        pw_d2[v] = f.pow(v, d2);
        pw_d2m[v] = f.pow(v, d2 - 1);
    }
    const u64 gd1 = d1 % p;
    const u64 gd2 = d2 % p;
    constexpr std::size_t kWitnessCap = 16;

    auto visit = [&](const std::array<u64, 4>& pt) {
        ++rep.points_scanned;
        u64 g = 0;
        for (int i = 0; i < 4; ++i) g = f.add(g, f.mul(gc[i], pw_d1[pt[i]]));
        if (g != 0) return;

        std::array<u64, 4> dg{};
        bool dg_zero = true;
        for (int i = 0; i < 4; ++i) {
            dg[i] = f.mul(gd1, f.mul(gc[i], pw_d1m[pt[i]]));
            if (dg[i] != 0) dg_zero = false;
        }
        if (dg_zero) {
            rep.smooth_hypersurface = false;
            if (rep.hypersurface_witnesses.size() < kWitnessCap) {
                rep.hypersurface_witnesses.push_back(pt);
            }
        }
        if (rep.f_lead_degenerate) return;

        u64 fv = 0;
        for (int i = 0; i < 4; ++i) fv = f.add(fv, f.mul(fc[i], pw_d2[pt[i]]));
        if (fv != 0) return;

        std::array<u64, 4> df{};
        for (int i = 0; i < 4; ++i) df[i] = f.mul(gd2, f.mul(fc[i], pw_d2m[pt[i]]));
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if (f.sub(f.mul(dg[i], df[j]), f.mul(dg[j], df[i])) != 0) return;
            }
        }
        rep.smooth_codim2 = false;
        if (rep.codim2_witnesses.size() < kWitnessCap) rep.codim2_witnesses.push_back(pt);
    };

    // projective representatives: first nonzero coordinate = 1
    std::array<u64, 4> z{};
    for (int lead = 0; lead < 4; ++lead) {
        z.fill(0);
        z[lead] = 1;
        const int nfree = 3 - lead;
        std::array<u64, 3> fv{0, 0, 0};
        while (true) {
            for (int i = 0; i < nfree; ++i) z[lead + 1 + i] = fv[i];
            visit(z);
            int k = 0;
            for (; k < nfree; ++k) {
                if (++fv[k] < p) break;
                fv[k] = 0;
            }
            if (k == nfree) break;
        }
    }
    return rep;
}

} // namespace bilav

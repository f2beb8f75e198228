#include "bilav/roth.hpp"

#include <cmath>
#include <stdexcept>

#include "bilav/bilinear.hpp"
#include "bilav/rng.hpp"

namespace bilav {

namespace {

u64 word_count(u64 p) { return (p + 63) / 64; }

/// Membership bits duplicated over [0, 2p) so any cyclic shift is a plain
/// 64-bit window read.
std::vector<u64> doubled_words(const SubsetA& a) {
    std::vector<u64> d(2 * word_count(a.p) + 2, 0);
    for (u64 x = 0; x < a.p; ++x) {
        if (!a.contains(x)) continue;
        d[x >> 6] |= u64{1} << (x & 63);
        const u64 j = x + a.p;
        d[j >> 6] |= u64{1} << (j & 63);
    }
    return d;
}

inline u64 window(const std::vector<u64>& d, u64 bit, u64 k) {
    const u64 q = (bit >> 6) + k;
    const unsigned o = static_cast<unsigned>(bit & 63);
    u64 w = d[q] >> o;
    if (o) w |= d[q + 1] << (64 - o);
    return w;
}

} // namespace

SubsetA SubsetA::from_members(u64 p, const std::vector<u64>& members) {
    SubsetA a;
    a.p = p;
    a.words.assign(word_count(p), 0);
    for (u64 m : members) {
        const u64 x = m % p;
        const u64 bit = u64{1} << (x & 63);
        if (!(a.words[x >> 6] & bit)) {
            a.words[x >> 6] |= bit;
            ++a.count;
        }
    }
    return a;
}

SubsetA SubsetA::full(u64 p) {
    SubsetA a;
    a.p = p;
    a.words.assign(word_count(p), ~u64{0});
    if (p & 63) a.words.back() = (u64{1} << (p & 63)) - 1;
    a.count = p;
    return a;
}

SubsetA random_subset(u64 p, double delta, u64 seed) {
    if (delta < 0.0 || delta > 1.0) {
        throw std::invalid_argument("random_subset: delta must lie in [0, 1]");
    }
    SubsetA a;
    a.p = p;
    a.words.assign(word_count(p), 0);
    for (u64 x = 0; x < p; ++x) {
        if (mix64_unit(seed, x) < delta) {
            a.words[x >> 6] |= u64{1} << (x & 63);
            ++a.count;
        }
    }
    return a;
}

u64 count_triplets(const Curve& curve, const SubsetA& A) {
    const u64 p = curve.p();
    if (A.p != p) throw std::invalid_argument("count_triplets: set size must equal p");
    if (A.count == 0) return 0;
    const auto d = doubled_words(A);
    const u64 w = word_count(p);
    const auto& e1 = curve.eval1();
    const auto& e2 = curve.eval2();
    u64 total = 0;
    for (u64 y : curve.domain()) {
        const u64 r1 = e1[y];
        const u64 r2 = e2[y];
        u64 acc = 0;
        for (u64 k = 0; k < w; ++k) {
            // tail bits above p are zero in A.words, masking the windows
            acc += static_cast<u64>(
                __builtin_popcountll(A.words[k] & window(d, r1, k) & window(d, r2, k)));
        }
        total += acc;
    }
    return total;
}

RothReport implication_check(const Curve& curve, const SubsetA& A, double gamma, double c) {
    const u64 p = curve.p();
    RothReport rep;
    rep.p = p;
    rep.triplet_count = count_triplets(curve, A);
    rep.delta = A.delta();
    const double p2 = static_cast<double>(p) * static_cast<double>(p);
    rep.delta_cubed_p2 = rep.delta * rep.delta * rep.delta * p2;
    rep.implication_lhs = static_cast<double>(rep.triplet_count);

    GridFunction f(p, cplx{0.0, 0.0});
    for (u64 x = 0; x < p; ++x) {
        if (A.contains(x)) f[x] = 1.0;
    }
    GridFunction dev = bilinear_average(curve, f, f);
    const double d2 = rep.delta * rep.delta;
    for (auto& v : dev) v -= d2;
    const double dev_norm = norm(dev, 2.0);
    rep.implication_rhs = p2 * (rep.delta * d2 - std::sqrt(rep.delta) * dev_norm);
    rep.delta_min = density_threshold(gamma, p, c);
    return rep;
}

double density_threshold(double gamma, u64 p, double c) {
    if (gamma <= 0.0 || c <= 0.0) {
        throw std::invalid_argument("density_threshold: gamma and c must be positive");
    }
    return c * std::pow(static_cast<double>(p), -2.0 * gamma / 3.0);
}

} // namespace bilav

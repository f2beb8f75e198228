#ifndef BILAV_ROTH_HPP
#define BILAV_ROTH_HPP

#include <vector>

#include "bilav/curve.hpp"

namespace bilav {

/// Subset of Z/p as a bitset; density is the exact popcount over p.
struct SubsetA {
    u64 p = 0;
    std::vector<u64> words; ///< bit x of word x/64; bits >= p are zero
    u64 count = 0;

    static SubsetA from_members(u64 p, const std::vector<u64>& members);
    static SubsetA full(u64 p);

    bool contains(u64 x) const { return (words[x >> 6] >> (x & 63)) & 1u; }
    double delta() const { return p ? static_cast<double>(count) / static_cast<double>(p) : 0.0; }
};

/// Independent Bernoulli(delta) membership from the counter generator;
/// identical seed gives an identical set.
SubsetA random_subset(u64 p, double delta, u64 seed);

/// Exact number of pairs (x, y) with x, x + phi1(y), x + phi2(y) all in A.
u64 count_triplets(const Curve& curve, const SubsetA& A);

struct RothReport {
    u64 p = 0;
    u64 triplet_count = 0;
    double delta = 0.0;
    double delta_cubed_p2 = 0.0;
    double implication_lhs = 0.0;
    double implication_rhs = 0.0;
    double delta_min = 0.0;
};

/// lhs = exact count; rhs = p^2 (delta^3 - sqrt(delta) ||A(1_A,1_A) - delta^2||_2).
/// The inequality lhs >= rhs is Cauchy-Schwarz, so it holds up to rounding.
RothReport implication_check(const Curve& curve, const SubsetA& A, double gamma = 0.125,
                             double c = 1.0);

/// c * p^(-2 gamma / 3).
double density_threshold(double gamma, u64 p, double c);

} // namespace bilav

#endif

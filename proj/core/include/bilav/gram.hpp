#ifndef BILAV_GRAM_HPP
#define BILAV_GRAM_HPP

#include <utility>
#include <vector>

#include "bilav/kernel.hpp"

namespace bilav {

/// I(y, y') = sum_x A_y(x) * conj(A_{y'}(x)) with
/// A_y(x) = K(x, y) * conj(K(x-h, y+h)).  Hermitian PSD; rows/columns
/// y in {0, -h} vanish because K(., 0) = 0.  Entry (y, y') at y*p + y'.
struct GramTable {
    u64 p = 0;
    u64 h = 0;
    std::vector<cplx> entries;

    cplx at(u64 y, u64 yp) const { return entries[y * p + yp]; }
};

/// Full table as the product A * A^H (blocked complex GEMM).
/// Throws ZeroShift when h = 0.
GramTable fourfold_gram(const KernelTable& kernel, u64 h);

/// Single entry by the direct one-dimensional sum over x.
cplx gram_entry(const KernelTable& kernel, u64 h, u64 y, u64 yp);

/// Pairs (y, y') whose Gram magnitude exceeds a threshold, with exact
/// per-row / per-column maxima.  For predicted (algebraic) sets the maxima
/// are taken outside the guard lines y, y' in {0, -h}; `guard_excluded`
/// records which convention produced the counts.
struct DiagonalSet {
    u64 p = 0;
    u64 h = 0;
    double threshold = 0.0;
    std::vector<std::pair<u64, u64>> pairs;
    u64 max_row_count = 0;
    u64 max_col_count = 0;
    bool guard_excluded = false;
};

/// Flags |I(y,y')| > c_thr * p^(-beta_target).  Requires beta_target > 1.
DiagonalSet detect_diagonal(const GramTable& gram, double beta_target, double c_thr);

/// Recompute max_row_count / max_col_count of `set` from its pairs, optionally
/// ignoring rows/columns on the guard lines {0, -h}.
void recount_diagonal(DiagonalSet& set, bool exclude_guard_lines);

} // namespace bilav

#endif

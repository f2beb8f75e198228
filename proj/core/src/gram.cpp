#include "bilav/gram.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace bilav {

namespace {

using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

CMat slice_matrix(const KernelTable& kernel, u64 h) {
    const u64 p = kernel.p();
    CMat a(p, p);
    for (u64 y = 0; y < p; ++y) {
        const u64 ysh = (y + h) % p;
        for (u64 x = 0; x < p; ++x) {
            const u64 xsh = (x + p - h) % p;
            a(y, x) = kernel.at(x, y) * std::conj(kernel.at(xsh, ysh));
        }
    }
    return a;
}

} // namespace

GramTable fourfold_gram(const KernelTable& kernel, u64 h) {
    const u64 p = kernel.p();
    h %= p;
    if (h == 0) throw ZeroShift("fourfold_gram: h must be nonzero");

    const CMat a = slice_matrix(kernel, h);
    const CMat gram = a * a.adjoint();

    GramTable out{p, h, std::vector<cplx>(p * p)};
    for (u64 y = 0; y < p; ++y) {
        for (u64 yp = 0; yp < p; ++yp) out.entries[y * p + yp] = gram(y, yp);
    }
    return out;
}

cplx gram_entry(const KernelTable& kernel, u64 h, u64 y, u64 yp) {
    const u64 p = kernel.p();
    h %= p;
    if (h == 0) throw ZeroShift("gram_entry: h must be nonzero");
    y %= p;
    yp %= p;
    const u64 ysh = (y + h) % p;
    const u64 ypsh = (yp + h) % p;
    cplx acc(0.0, 0.0);
    for (u64 x = 0; x < p; ++x) {
        const u64 xsh = (x + p - h) % p;
        acc += kernel.at(x, y) * std::conj(kernel.at(xsh, ysh)) *
               std::conj(kernel.at(x, yp)) * kernel.at(xsh, ypsh);
    }
    return acc;
}

DiagonalSet detect_diagonal(const GramTable& gram, double beta_target, double c_thr) {
    if (!(beta_target > 1.0)) {
        throw std::invalid_argument("detect_diagonal: beta_target must exceed 1");
    }
    const u64 p = gram.p;
    DiagonalSet set;
    set.p = p;
    set.h = gram.h;
    set.threshold = c_thr * std::pow(static_cast<double>(p), -beta_target);
    for (u64 y = 0; y < p; ++y) {
        for (u64 yp = 0; yp < p; ++yp) {
            if (std::abs(gram.at(y, yp)) > set.threshold) set.pairs.emplace_back(y, yp);
        }
    }
    recount_diagonal(set, false);
    return set;
}

void recount_diagonal(DiagonalSet& set, bool exclude_guard_lines) {
    const u64 p = set.p;
    std::vector<u64> rows(p, 0), cols(p, 0);
    for (const auto& [y, yp] : set.pairs) {
        ++rows[y];
        ++cols[yp];
    }
    const u64 g0 = 0;
    const u64 g1 = set.h == 0 ? 0 : p - set.h;
    set.max_row_count = 0;
    set.max_col_count = 0;
    for (u64 i = 0; i < p; ++i) {
        const bool guard = exclude_guard_lines && (i == g0 || i == g1);
        if (guard) continue;
        set.max_row_count = std::max(set.max_row_count, rows[i]);
        set.max_col_count = std::max(set.max_col_count, cols[i]);
    }
    set.guard_excluded = exclude_guard_lines;
}

} // namespace bilav

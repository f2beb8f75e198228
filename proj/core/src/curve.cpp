#include "bilav/curve.hpp"

#include <algorithm>

namespace bilav {

namespace {

bool proportional(const PrimeField& f, const FpPoly& a, const FpPoly& b) {
    // rank <= 1 of the 2 x (deg+1) coefficient matrix: all 2x2 minors vanish
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    auto at = [](const FpPoly& q, std::size_t i) -> u64 {
        return i < q.coeffs.size() ? q.coeffs[i] : 0;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const u64 m = f.sub(f.mul(at(a, i), at(b, j)), f.mul(at(a, j), at(b, i)));
            if (m != 0) return false;
        }
    }
    return true;
}

} // namespace

Curve::Curve(PrimeField field, std::vector<u64> eval1, std::vector<u64> eval2,
             std::vector<u64> domain, std::optional<CurveMeta> meta)
    : field_(std::move(field)),
      eval1_(std::move(eval1)),
      eval2_(std::move(eval2)),
      domain_(std::move(domain)),
      meta_(std::move(meta)) {
    pre1_.resize(field_.p());
    for (u64 y : domain_) pre1_[eval1_[y]].push_back(y);
}

Curve Curve::from_polys(PrimeField field, const FpPoly& phi1, const FpPoly& phi2) {
    FpPoly a = phi1, b = phi2;
    if (a.is_zero() || b.is_zero() || a.degree() < 1 || b.degree() < 1) {
        throw InvalidCurve("Curve: both polynomials must be nonconstant");
    }
    if (proportional(field, a, b)) {
        throw InvalidCurve("Curve: polynomials must be linearly independent");
    }

    bool swapped = false;
    if (a.degree() > b.degree()) {
        std::swap(a, b);
        swapped = true;
    }

    const u64 p = field.p();
    std::vector<u64> e1(p), e2(p), dom(p);
    for (u64 y = 0; y < p; ++y) {
        e1[y] = poly_eval(field, a, y);
        e2[y] = poly_eval(field, b, y);
        dom[y] = y;
    }

    CurveMeta meta;
    meta.phi1 = a;
    meta.phi2 = b;
    meta.d1 = a.degree();
    meta.d2 = b.degree();
    meta.lead1 = a.leading();
    meta.lead2 = b.leading();
    meta.linearly_independent = true;
    meta.swapped = swapped;

    return Curve(std::move(field), std::move(e1), std::move(e2), std::move(dom),
                 std::move(meta));
}

Curve Curve::from_tables(PrimeField field, std::vector<u64> eval1,
                         std::vector<u64> eval2, std::vector<u64> domain) {
    const u64 p = field.p();
    if (eval1.size() != p || eval2.size() != p) {
        throw InvalidCurve("Curve: evaluation tables must have length p");
    }
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    if (domain.empty()) throw InvalidCurve("Curve: empty domain");
    for (u64 y : domain) {
        if (y >= p) throw InvalidCurve("Curve: domain point out of range");
        if (eval1[y] >= p || eval2[y] >= p) {
            throw InvalidCurve("Curve: table value out of range");
        }
    }
    return Curve(std::move(field), std::move(eval1), std::move(eval2),
                 std::move(domain), std::nullopt);
}

} // namespace bilav

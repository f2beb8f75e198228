#ifndef BILAV_CURVE_HPP
#define BILAV_CURVE_HPP

#include <optional>
#include <vector>

#include "bilav/fp.hpp"

namespace bilav {

/// Polynomial data for curves given by a pair of polynomials.  Stored in
/// canonical order d1 <= d2 (the pair is swapped at construction if needed;
/// `swapped` records that).
struct CurveMeta {
    FpPoly phi1, phi2;
    u64 d1 = 0, d2 = 0;
    u64 lead1 = 0, lead2 = 0; // leading coefficients a, b (both nonzero)
    bool linearly_independent = true;
    bool swapped = false;
};

/// A pair of maps (phi1, phi2) : domain -> F_p used as the translation pattern
/// of the bilinear average.  Owns its field by value, so curves can be copied
/// and moved freely.
class Curve {
public:
    /// Polynomial curve on the full domain F_p.  Requires both polynomials
    /// nonconstant and linearly independent (coefficient matrix of rank 2);
    /// throws InvalidCurve otherwise.
    static Curve from_polys(PrimeField field, const FpPoly& phi1, const FpPoly& phi2);

    /// Table curve: eval1/eval2 are indexed by y and only meaningful on
    /// `domain` (sorted, unique, values < p).  No polynomial metadata.
    static Curve from_tables(PrimeField field, std::vector<u64> eval1,
                             std::vector<u64> eval2, std::vector<u64> domain);

    const PrimeField& field() const { return field_; }
    u64 p() const { return field_.p(); }

    const std::vector<u64>& eval1() const { return eval1_; }
    const std::vector<u64>& eval2() const { return eval2_; }
    const std::vector<u64>& domain() const { return domain_; }
    bool full_domain() const { return domain_.size() == field_.p(); }

    const std::optional<CurveMeta>& meta() const { return meta_; }

    /// phi1_preimages()[v] lists the domain points z with phi1(z) = v.
    const std::vector<std::vector<u64>>& phi1_preimages() const { return pre1_; }

private:
    Curve(PrimeField field, std::vector<u64> eval1, std::vector<u64> eval2,
          std::vector<u64> domain, std::optional<CurveMeta> meta);

    PrimeField field_;
    std::vector<u64> eval1_, eval2_;
    std::vector<u64> domain_;
    std::optional<CurveMeta> meta_;
    std::vector<std::vector<u64>> pre1_;
};

} // namespace bilav

#endif

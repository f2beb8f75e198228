#ifndef BILAV_FP_HPP
#define BILAV_FP_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "bilav/errors.hpp"

namespace bilav {

using cplx = std::complex<double>;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Odd prime field F_p with precomputed character, inverse and discrete-log
/// tables.  Immutable after construction; all lookups are safe for
/// concurrent reads.
class PrimeField {
public:
    /// Throws TooSmall for p < 3, CompositeModulus if p is not prime.
    explicit PrimeField(u64 p);

    u64 p() const { return p_; }
    u64 generator() const { return generator_; }

    /// char_table()[k] = exp(2*pi*i*k/p)
    const std::vector<cplx>& char_table() const { return char_table_; }
    const std::vector<u64>& inv_table() const { return inv_table_; }

    /// Multiplicative inverse; throws std::domain_error on 0.
    u64 inv(u64 x) const;

    /// Discrete log base generator(); dlog(generator()^k) = k for k in [0, p-1).
    /// Throws std::domain_error on 0.
    u64 dlog(u64 x) const;

    /// Reduce a signed integer into [0, p).
    u64 reduce(i64 k) const;

    /// e_p(k) = exp(2*pi*i*k/p), table lookup after reduction mod p.
    cplx ep(i64 k) const { return char_table_[reduce(k)]; }
    cplx ep_u(u64 k) const { return char_table_[k % p_]; }

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    u64 mul(u64 a, u64 b) const { return mulmod(a % p_, b % p_, p_); }
    u64 neg(u64 a) const { return a % p_ == 0 ? 0 : p_ - a % p_; }
    u64 pow(u64 base, u64 exp) const { return powmod(base % p_, exp, p_); }

private:
    u64 p_;
    u64 generator_;
    std::vector<cplx> char_table_;
    std::vector<u64> inv_table_;  // inv_table_[0] unused
    std::vector<u64> dlog_table_; // dlog_table_[0] unused
};

/// e_p(x) accessor used where only the field is at hand.
inline cplx ep_eval(const PrimeField& f, i64 x) { return f.ep(x); }

/// Dense polynomial over F_p, coefficients lowest-degree first, trimmed.
struct FpPoly {
    std::vector<u64> coeffs; // empty <=> zero polynomial

    bool is_zero() const { return coeffs.empty(); }
    u64 degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    u64 leading() const { return coeffs.empty() ? 0 : coeffs.back(); }
};

/// Reduce raw signed coefficients mod p and trim.  Enforces degree < p.
FpPoly make_poly(const PrimeField& f, const std::vector<i64>& raw);

/// Horner evaluation.
u64 poly_eval(const PrimeField& f, const FpPoly& poly, u64 x);

/// All m-th roots of x in F_p, sorted ascending.  Solved through the
/// discrete-log table: m*t = dlog(x) (mod p-1).  For x != 0 the result has
/// size 0 or gcd(m, p-1); for x = 0 it is {0}.  Requires m >= 1.
std::vector<u64> mth_roots(const PrimeField& f, u64 x, u64 m);

/// Euler criterion: x^((p-1)/2), mapped to {-1, 0, 1}.
int legendre_symbol(const PrimeField& f, u64 x);

} // namespace bilav

#endif

#include "bilav/fp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace bilav {

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is a proven deterministic witness set for all n < 3.3e24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::vector<u64> factor_distinct(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 find_generator(u64 p) {
    const std::vector<u64> qs = factor_distinct(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (u64 q : qs) {
            if (powmod(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    return 0; // unreachable for prime p
}

} // namespace

PrimeField::PrimeField(u64 p) : p_(p) {
    if (p < 3) throw TooSmall("PrimeField: modulus must be at least 3");
    if (!is_prime(p)) throw CompositeModulus("PrimeField: modulus is not prime");

    char_table_.resize(p);
    const double w = 2.0 * std::numbers::pi / static_cast<double>(p);
    for (u64 k = 0; k < p; ++k) {
        const double a = w * static_cast<double>(k);
        char_table_[k] = cplx(std::cos(a), std::sin(a));
    }

    // inv[i] = -(p/i) * inv[p mod i] mod p, linear time.
    inv_table_.assign(p, 0);
    if (p > 1) inv_table_[1] = 1;
    for (u64 i = 2; i < p; ++i) {
        inv_table_[i] = mulmod(p - p / i, inv_table_[p % i], p);
    }

    generator_ = find_generator(p);
    dlog_table_.assign(p, 0);
    u64 x = 1;
    for (u64 k = 0; k + 1 < p; ++k) {
        dlog_table_[x] = k;
        x = mulmod(x, generator_, p);
    }
}

u64 PrimeField::inv(u64 x) const {
    x %= p_;
    if (x == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
    return inv_table_[x];
}

u64 PrimeField::dlog(u64 x) const {
    x %= p_;
    if (x == 0) throw std::domain_error("PrimeField::dlog: undefined at zero");
    return dlog_table_[x];
}

u64 PrimeField::reduce(i64 k) const {
    i64 r = k % static_cast<i64>(p_);
    if (r < 0) r += static_cast<i64>(p_);
    return static_cast<u64>(r);
}

u64 PrimeField::add(u64 a, u64 b) const {
    a %= p_;
    b %= p_;
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
}

u64 PrimeField::sub(u64 a, u64 b) const {
    a %= p_;
    b %= p_;
    return a >= b ? a - b : a + p_ - b;
}

FpPoly make_poly(const PrimeField& f, const std::vector<i64>& raw) {
    if (raw.size() > f.p()) {
        throw std::invalid_argument("make_poly: degree must be smaller than p");
    }
    FpPoly poly;
    poly.coeffs.reserve(raw.size());
    for (i64 c : raw) poly.coeffs.push_back(f.reduce(c));
    while (!poly.coeffs.empty() && poly.coeffs.back() == 0) poly.coeffs.pop_back();
    return poly;
}

u64 poly_eval(const PrimeField& f, const FpPoly& poly, u64 x) {
    x %= f.p();
    u64 acc = 0;
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) {
        acc = f.add(f.mul(acc, x), *it);
    }
    return acc;
}

std::vector<u64> mth_roots(const PrimeField& f, u64 x, u64 m) {
    if (m == 0) throw std::invalid_argument("mth_roots: m must be >= 1");
    x %= f.p();
    if (x == 0) return {0};

    const u64 n = f.p() - 1;
    const u64 mm = m % n;
    const u64 target = f.dlog(x);
    if (mm == 0) {
        // z^m = z^(m mod n) = 1 for all z != 0
        if (target != 0) return {};
        std::vector<u64> roots;
        roots.reserve(n);
        for (u64 z = 1; z < f.p(); ++z) roots.push_back(z);
        return roots;
    }

    const u64 g = std::gcd(mm, n);
    if (target % g != 0) return {};
    const u64 n2 = n / g;
    // (mm/g) is invertible mod n2
    u64 minv = 1;
    {
        // extended Euclid on (mm/g, n2)
        i64 a = static_cast<i64>((mm / g) % n2), b = static_cast<i64>(n2);
        i64 x0 = 1, x1 = 0;
        while (b) {
            i64 q = a / b;
            std::swap(a -= q * b, b);
            std::swap(x0 -= q * x1, x1);
        }
        i64 r = x0 % static_cast<i64>(n2);
        if (r < 0) r += static_cast<i64>(n2);
        minv = static_cast<u64>(r);
    }
    const u64 t0 = mulmod(minv, (target / g) % n2, n2);

    std::vector<u64> roots;
    roots.reserve(g);
    for (u64 k = 0; k < g; ++k) {
        roots.push_back(f.pow(f.generator(), t0 + k * n2));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int legendre_symbol(const PrimeField& f, u64 x) {
    x %= f.p();
    if (x == 0) return 0;
    const u64 e = f.pow(x, (f.p() - 1) / 2);
    return e == 1 ? 1 : -1;
}

} // namespace bilav

#include "bilav/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bilav {

namespace {

/// Kahan-compensated complex accumulator.
struct KahanC {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};

    void add(cplx v) {
        const cplx y = v - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct KahanR {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

/// Iterative radix-2 FFT, sign -1 forward.  data.size() must be a power of two
/// and twiddle[k] = exp(-2*pi*i*k/m) for k < m/2.
void fft_pow2(std::vector<cplx>& data, const std::vector<cplx>& twiddle, bool inverse) {
    const std::size_t m = data.size();
    for (std::size_t i = 1, j = 0; i < m; ++i) {
        std::size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        const std::size_t step = m / len;
        for (std::size_t i = 0; i < m; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx w = twiddle[k * step];
                if (inverse) w = std::conj(w);
                const cplx u = data[i + k];
                const cplx v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / static_cast<double>(m);
        for (auto& z : data) z *= s;
    }
}

void check_length(const PrimeField& f, const GridFunction& v, const char* who) {
    if (v.size() != f.p()) {
        throw std::invalid_argument(std::string(who) + ": grid length must equal p");
    }
}

} // namespace

cplx expectation(const GridFunction& f) {
    KahanC acc;
    for (const cplx& z : f) acc.add(z);
    return acc.sum / static_cast<double>(f.size());
}

double norm(const GridFunction& f, double r, bool normalized) {
    if (!(r >= 1.0)) throw std::invalid_argument("norm: r must be >= 1");
    KahanR acc;
    if (r == 2.0) {
        for (const cplx& z : f) acc.add(std::norm(z));
    } else {
        for (const cplx& z : f) acc.add(std::pow(std::abs(z), r));
    }
    double s = acc.sum;
    if (normalized) s /= static_cast<double>(f.size());
    return r == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / r);
}

DftPlan::DftPlan(const PrimeField& f) : p_(f.p()), m_(next_pow2(2 * f.p() - 1)) {
    // chirp[n] = exp(-i*pi*n^2/p); n^2 is taken mod 2p so exact table angles
    // can be used.
    std::vector<cplx> half(2 * p_);
    const double w = std::numbers::pi / static_cast<double>(p_);
    for (u64 k = 0; k < 2 * p_; ++k) {
        const double a = -w * static_cast<double>(k);
        half[k] = cplx(std::cos(a), std::sin(a));
    }
    chirp_.resize(p_);
    for (u64 n = 0; n < p_; ++n) {
        chirp_[n] = half[mulmod(n, n, 2 * p_)];
    }

    twiddle_.resize(m_ / 2);
    const double wm = 2.0 * std::numbers::pi / static_cast<double>(m_);
    for (std::size_t k = 0; k < m_ / 2; ++k) {
        const double a = -wm * static_cast<double>(k);
        twiddle_[k] = cplx(std::cos(a), std::sin(a));
    }

    std::vector<cplx> v(m_, cplx(0.0, 0.0));
    for (u64 n = 0; n < p_; ++n) {
        const cplx c = std::conj(chirp_[n]);
        v[n] = c;
        if (n != 0) v[m_ - n] = c;
    }
    fft_pow2(v, twiddle_, false);
    kernel_fft_ = std::move(v);
}

void DftPlan::apply(const cplx* in, cplx* out, int sign) const {
    std::vector<cplx> a(m_, cplx(0.0, 0.0));
    if (sign < 0) {
        for (u64 x = 0; x < p_; ++x) a[x] = in[x] * chirp_[x];
    } else {
        for (u64 x = 0; x < p_; ++x) a[x] = std::conj(in[x]) * chirp_[x];
    }
    fft_pow2(a, twiddle_, false);
    for (std::size_t k = 0; k < m_; ++k) a[k] *= kernel_fft_[k];
    fft_pow2(a, twiddle_, true);
    if (sign < 0) {
        for (u64 z = 0; z < p_; ++z) out[z] = a[z] * chirp_[z];
    } else {
        for (u64 z = 0; z < p_; ++z) out[z] = std::conj(a[z] * chirp_[z]);
    }
}

void DftPlan::apply(const GridFunction& in, GridFunction& out, int sign) const {
    out.resize(p_);
    apply(in.data(), out.data(), sign);
}

namespace {

GridFunction direct_transform(const PrimeField& f, const GridFunction& v, int sign) {
    const u64 p = f.p();
    const auto& tab = f.char_table();
    GridFunction out(p);
    for (u64 z = 0; z < p; ++z) {
        KahanC acc;
        for (u64 x = 0; x < p; ++x) {
            u64 idx = mulmod(x, z, p);
            if (sign < 0 && idx != 0) idx = p - idx;
            acc.add(v[x] * tab[idx]);
        }
        out[z] = acc.sum;
    }
    return out;
}

} // namespace

GridFunction fourier_hat(const PrimeField& f, const GridFunction& v, bool fast) {
    check_length(f, v, "fourier_hat");
    GridFunction out;
    if (fast) {
        DftPlan plan(f);
        plan.apply(v, out, -1);
    } else {
        out = direct_transform(f, v, -1);
    }
    const double s = 1.0 / static_cast<double>(f.p());
    for (auto& z : out) z *= s;
    return out;
}

GridFunction fourier_hat(const DftPlan& plan, const GridFunction& v) {
    if (v.size() != plan.p()) throw std::invalid_argument("fourier_hat: grid length must equal p");
    GridFunction out;
    plan.apply(v, out, -1);
    const double s = 1.0 / static_cast<double>(plan.p());
    for (auto& z : out) z *= s;
    return out;
}

GridFunction fourier_invert(const PrimeField& f, const GridFunction& v, bool fast) {
    check_length(f, v, "fourier_invert");
    if (fast) {
        GridFunction out;
        DftPlan plan(f);
        plan.apply(v, out, +1);
        return out;
    }
    return direct_transform(f, v, +1);
}

GridFunction fourier_invert(const DftPlan& plan, const GridFunction& v) {
    if (v.size() != plan.p()) throw std::invalid_argument("fourier_invert: grid length must equal p");
    GridFunction out;
    plan.apply(v, out, +1);
    return out;
}

} // namespace bilav

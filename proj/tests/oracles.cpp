#include "oracles.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace oracle {

namespace {

using cplxl = std::complex<long double>;

const long double kTau = 6.283185307179586476925286766559L;

cplxl unit_phase(u64 num, u64 p) {
    const long double a = kTau * static_cast<long double>(num % p) / static_cast<long double>(p);
    return {std::cos(a), std::sin(a)};
}

} // namespace

bilav::GridFunction dft(const bilav::PrimeField& f, const bilav::GridFunction& in,
                        int sign) {
    const u64 p = f.p();
    bilav::GridFunction out(p);
    for (u64 z = 0; z < p; ++z) {
        cplxl acc{0.0L, 0.0L};
        for (u64 x = 0; x < p; ++x) {
            u64 idx = (x * z) % p;
            if (sign < 0 && idx != 0) idx = p - idx;
            acc += cplxl(in[x]) * unit_phase(idx, p);
        }
        out[z] = cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
    return out;
}

cplx kernel_entry(const bilav::Curve& c, u64 x, u64 y) {
    const u64 p = c.p();
    y %= p;
    if (y == 0) return {0.0, 0.0};
    x %= p;
    cplxl acc{0.0L, 0.0L};
    for (u64 z : c.domain()) {
        acc += unit_phase(x * c.eval1()[z] + y * c.eval2()[z], p);
    }
    acc /= static_cast<long double>(p);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

cplx gram_entry_direct(const bilav::KernelTable& k, u64 h, u64 y, u64 yp) {
    const u64 p = k.p();
    h %= p;
    y %= p;
    yp %= p;
    const u64 yh = (y + h) % p;
    const u64 yph = (yp + h) % p;
    cplxl acc{0.0L, 0.0L};
    for (u64 x = 0; x < p; ++x) {
        const u64 xmh = (x + p - h) % p;
        const cplxl t = cplxl(k.at(x, y)) * std::conj(cplxl(k.at(xmh, yh))) *
                        std::conj(cplxl(k.at(x, yp))) * cplxl(k.at(xmh, yph));
        acc += t;
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

cplx constrained_sum_brute(const bilav::Curve& c, u64 y, u64 yp, u64 h) {
    const u64 p = c.p();
    y %= p;
    yp %= p;
    h %= p;
    const auto& e1 = c.eval1();
    const auto& e2 = c.eval2();
    const u64 yh = (y + h) % p;
    const u64 yph = (yp + h) % p;
    cplxl acc{0.0L, 0.0L};
    for (u64 z1 : c.domain()) {
        for (u64 z2 : c.domain()) {
            for (u64 z3 : c.domain()) {
                for (u64 z4 : c.domain()) {
                    const u64 g = (e1[z1] + p - e1[z2] + p - e1[z3] + e1[z4]) % p;
                    if (g != 0) continue;
                    u64 f = y * e2[z1] % p;
                    f = (f + h * e1[z2]) % p;
                    f = (f + p * p - yh * e2[z2] % p) % p;
                    f = (f + p * p - yp * e2[z3] % p) % p;
                    f = (f + p * p - h * e1[z4] % p) % p;
                    f = (f + yph * e2[z4]) % p;
                    acc += unit_phase(f, p);
                }
            }
        }
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

u64 triplets_brute(const bilav::Curve& c, const bilav::SubsetA& a) {
    const u64 p = c.p();
    u64 total = 0;
    for (u64 x = 0; x < p; ++x) {
        if (!a.contains(x)) continue;
        for (u64 y : c.domain()) {
            if (a.contains((x + c.eval1()[y]) % p) && a.contains((x + c.eval2()[y]) % p)) {
                ++total;
            }
        }
    }
    return total;
}

double top_singular_value(const std::vector<cplx>& a, std::size_t rows, std::size_t cols) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a[r * cols + c];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

bool codim2_singular_brute(u64 p, u64 d1, u64 d2, u64 lead1, u64 lead2, u64 y, u64 yp,
                           u64 h) {
    auto pw = [p](u64 base, u64 e) {
        u64 r = 1;
        base %= p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    const u64 s[4] = {1, p - 1, p - 1, 1};
    u64 gc[4], fc[4];
    for (int i = 0; i < 4; ++i) gc[i] = s[i] * lead1 % p;
    if (d1 < d2) {
        const u64 w[4] = {y % p, (y + h) % p, yp % p, (yp + h) % p};
        for (int i = 0; i < 4; ++i) fc[i] = s[i] * (lead2 * w[i] % p) % p;
    } else {
        const u64 ah = lead1 * h % p;
        const u64 u[4] = {lead2 * y % p, (lead2 * ((y + h) % p) % p + p - ah) % p,
                          lead2 * yp % p, (lead2 * ((yp + h) % p) % p + p - ah) % p};
        for (int i = 0; i < 4; ++i) fc[i] = s[i] * u[i] % p;
    }

    u64 z[4];
    for (z[0] = 0; z[0] < p; ++z[0]) {
        for (z[1] = 0; z[1] < p; ++z[1]) {
            for (z[2] = 0; z[2] < p; ++z[2]) {
                for (z[3] = 0; z[3] < p; ++z[3]) {
                    if (!z[0] && !z[1] && !z[2] && !z[3]) continue;
                    u64 g = 0, f = 0;
                    for (int i = 0; i < 4; ++i) {
                        g = (g + gc[i] * pw(z[i], d1)) % p;
                        f = (f + fc[i] * pw(z[i], d2)) % p;
                    }
                    if (g || f) continue;
                    u64 dg[4], df[4];
                    for (int i = 0; i < 4; ++i) {
                        dg[i] = d1 % p * gc[i] % p * pw(z[i], d1 - 1) % p;
                        df[i] = d2 % p * fc[i] % p * pw(z[i], d2 - 1) % p;
                    }
                    bool rank2 = false;
                    for (int i = 0; i < 4 && !rank2; ++i) {
                        for (int j = i + 1; j < 4; ++j) {
                            if ((dg[i] * df[j] % p + p - dg[j] * df[i] % p) % p != 0) {
                                rank2 = true;
                                break;
                            }
                        }
                    }
                    if (!rank2) return true;
                }
            }
        }
    }
    return false;
}

} // namespace oracle

#ifndef BILAV_SPECTRAL_HPP
#define BILAV_SPECTRAL_HPP

#include <vector>

#include "bilav/fp.hpp"

namespace bilav {

/// Complex function on Z/p, one value per residue.
using GridFunction = std::vector<cplx>;

/// E[f] = (1/p) sum_x f(x), compensated summation.
cplx expectation(const GridFunction& f);

/// Normalized r-norm ((1/p) sum |f|^r)^(1/r) or the plain l^r norm when
/// normalized = false.  Requires r >= 1.
double norm(const GridFunction& f, double r, bool normalized = true);

/// Length-p transform sum_x f(x) e_p(sign * x * z) realized either directly
/// (O(p^2), compensated sums) or via the Bluestein chirp factorization
/// x*z = (x^2 + z^2 - (z-x)^2)/2, turning the sum into one cyclic convolution
/// of power-of-two length m >= 2p-1.  No 1/p scaling here.
class DftPlan {
public:
    explicit DftPlan(const PrimeField& f);

    u64 p() const { return p_; }

    /// out[z] = sum_x in[x] * e_p(sign * x * z), sign in {-1, +1}
    void apply(const cplx* in, cplx* out, int sign) const;
    void apply(const GridFunction& in, GridFunction& out, int sign) const;

private:
    u64 p_;
    std::size_t m_;                  // power-of-two convolution length
    std::vector<cplx> chirp_;        // exp(-i*pi*n^2/p), n in [0, p)
    std::vector<cplx> kernel_fft_;   // FFT of the wrapped conjugate chirp
    std::vector<cplx> twiddle_;      // FFT roots exp(-2*pi*i*k/m), k < m/2
};

/// f_hat(z) = (1/p) sum_x f(x) e_p(-x z).
GridFunction fourier_hat(const PrimeField& f, const GridFunction& v, bool fast = true);
GridFunction fourier_hat(const DftPlan& plan, const GridFunction& v);

/// f(x) = sum_z f_hat(z) e_p(x z).
GridFunction fourier_invert(const PrimeField& f, const GridFunction& v, bool fast = true);
GridFunction fourier_invert(const DftPlan& plan, const GridFunction& v);

} // namespace bilav

#endif

#include <doctest.h>

#include <cmath>

#include "bilav/rng.hpp"
#include "bilav/spectral.hpp"
#include "oracles.hpp"

using namespace bilav;

namespace {

GridFunction random_grid(u64 p, u64 seed) {
    Rng rng(seed);
    GridFunction f(p);
    for (auto& v : f) v = rng.next_cgauss();
    return f;
}

double max_diff(const GridFunction& a, const GridFunction& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("expectation and norms") {
    PrimeField f(11);
    GridFunction ones(11, cplx{1.0, 0.0});
    CHECK(std::abs(expectation(ones) - cplx{1.0, 0.0}) < 1e-15);
    CHECK(norm(ones, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm(ones, 2.0, false) == doctest::Approx(std::sqrt(11.0)).epsilon(1e-12));

    GridFunction spike(11, cplx{0.0, 0.0});
    spike[3] = 11.0;
    CHECK(std::abs(expectation(spike) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(norm(spike, 2.0) == doctest::Approx(std::sqrt(11.0)).epsilon(1e-12));
    CHECK(norm(spike, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(norm(spike, 0.5), std::invalid_argument);
}

TEST_CASE("chirp transform equals the direct sum") {
    for (u64 p : {u64{5}, u64{31}, u64{97}, u64{251}}) {
        PrimeField f(p);
        DftPlan plan(f);
        const GridFunction in = random_grid(p, 100 + p);
        GridFunction out(p);
        for (int sign : {-1, +1}) {
            plan.apply(in, out, sign);
            const GridFunction want = oracle::dft(f, in, sign);
            CHECK(max_diff(out, want) < 1e-9);
        }
    }
}

TEST_CASE("chirp transform stays accurate at the top of the range") {
    const u64 p = 4093;
    PrimeField f(p);
    DftPlan plan(f);
    const GridFunction in = random_grid(p, 9);
    GridFunction out(p);
    plan.apply(in, out, -1);
    const GridFunction want = oracle::dft(f, in, -1);
    CHECK(max_diff(out, want) < 1e-8);
}

TEST_CASE("transform of a delta is a pure character") {
    const u64 p = 101;
    PrimeField f(p);
    DftPlan plan(f);
    GridFunction in(p, cplx{0.0, 0.0});
    in[7] = 1.0;
    GridFunction out(p);
    plan.apply(in, out, +1);
    for (u64 z = 0; z < p; ++z) CHECK(std::abs(out[z] - f.ep_u(7 * z)) < 1e-11);
}

TEST_CASE("hat and invert are mutually inverse") {
    const u64 p = 409;
    PrimeField f(p);
    const GridFunction in = random_grid(p, 5);
    const GridFunction hat = fourier_hat(f, in);
    const GridFunction back = fourier_invert(f, hat);
    CHECK(max_diff(back, in) < 1e-10);

    const GridFunction hat_slow = fourier_hat(f, in, false);
    CHECK(max_diff(hat, hat_slow) < 1e-11);
}

TEST_CASE("norm identity between both sides") {
    const u64 p = 211;
    PrimeField f(p);
    const GridFunction in = random_grid(p, 17);
    const GridFunction hat = fourier_hat(f, in);
    double rhs = 0.0;
    for (const cplx& v : hat) rhs += std::norm(v);
    const double lhs = norm(in, 2.0);
    CHECK(lhs * lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("constant maps to a single frequency") {
    const u64 p = 31;
    PrimeField f(p);
    GridFunction ones(p, cplx{1.0, 0.0});
    const GridFunction hat = fourier_hat(f, ones);
    CHECK(std::abs(hat[0] - cplx{1.0, 0.0}) < 1e-12);
    for (u64 z = 1; z < p; ++z) CHECK(std::abs(hat[z]) < 1e-12);
}

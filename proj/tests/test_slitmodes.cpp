#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "slitwave/slitmodes.hpp"

using namespace slitwave;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace {

constexpr double kLambda = 6.328e-7;

SlitGeometry fig5() { return {1.76e-4, SlitLength::finite(4e-4), 1.1e-6, 0.0, 1}; }

// k^2 - nu^2 - mu^2 in 50 digits from the same double inputs
double radicand_mp(ModeIndex i, const SlitGeometry &g, double lambda) {
    const mp pi = boost::math::constants::pi<mp>();
    const mp k = 2 * pi / mp(lambda);
    const mp mu = (2 * i.m + 1) * pi / mp(g.width);
    mp r = k * k - mu * mu;
    if (!g.length.is_infinite()) {
        const mp nu = (2 * i.n + 1) * pi / mp(g.length.value());
        r -= nu * nu;
    }
    return static_cast<double>(r);
}

// 4/pi sum_{m<=M} sin((2m+1) pi t)/(2m+1), the truncated sine series of 1 on (0, 1)
double square_wave(double t, int M) {
    long double s = 0.0L;
    for (int m = 0; m <= M; ++m)
        s += std::sin((2.0L * m + 1.0L) * 3.14159265358979323846264338327950288L * t) / (2.0L * m + 1.0L);
    return static_cast<double>(4.0L / 3.14159265358979323846264338327950288L * s);
}

} // namespace

TEST_CASE("radicand matches a 50-digit evaluation") {
    std::mt19937_64 rng{7};
    std::uniform_real_distribution<double> lw{-1.0, 3.0};
    const auto w = WaveSpec::from_wavelength(kLambda);
    const double k = w.wavenumber();
    for (int trial = 0; trial < 500; ++trial) {
        const double a = kLambda * std::pow(10.0, lw(rng));
        const double b = kLambda * std::pow(10.0, lw(rng));
        SlitGeometry g{a, trial % 5 == 0 ? SlitLength::infinite() : SlitLength::finite(b), 0.0, 0.0, 1};
        const ModeIndex i{static_cast<int>(rng() % 50), static_cast<int>(rng() % 50)};
        const double r = axial_radicand(i, g, w);
        const double ref = radicand_mp(i, g, kLambda);
        const double mu = (2 * i.m + 1) * kPi / a;
        const double nu = g.length.is_infinite() ? 0.0 : (2 * i.n + 1) * kPi / b;
        CHECK(std::abs(r - ref) <= 1e-14 * (k * k + mu * mu + nu * nu));
    }
}

TEST_CASE("radicand keeps digits near cutoff") {
    // width a hair above lambda/2: k - pi/a is tiny relative to k
    const auto w = WaveSpec::from_wavelength(kLambda);
    const SlitGeometry g{0.5 * kLambda * (1 + 1e-9), SlitLength::infinite(), 0.0, 0.0, 1};
    const double r = axial_radicand({0, 0}, g, w);
    const double ref = radicand_mp({0, 0}, g, kLambda);
    CHECK(r > 0.0);
    CHECK(std::abs(r - ref) <= 1e-6 * ref);
}

TEST_CASE("axial wavenumber branch and kinds") {
    const auto w = WaveSpec::from_wavelength(kLambda);
    const double k = w.wavenumber();

    const auto p = axial_wavenumber({0, 0}, fig5(), w);
    CHECK(p.kind == ModeKind::propagating);
    CHECK(p.kz.imag() == 0.0);
    CHECK(p.kz.real() > 0.0);
    CHECK(p.kz.real() < k);

    const SlitGeometry hole{0.1 * kLambda, SlitLength::finite(0.1 * kLambda), 1.1e-6, 0.0, 1};
    const auto e = axial_wavenumber({0, 0}, hole, w);
    CHECK(e.kind == ModeKind::evanescent);
    CHECK(e.kz.real() == 0.0);
    CHECK(e.kz.imag() > 0.0);

    // a = lambda/2 strip: pi/a == k in floating point
    const SlitGeometry edge{0.5 * kLambda, SlitLength::infinite(), 0.0, 0.0, 1};
    const auto c = axial_wavenumber({0, 0}, edge, w);
    CHECK(c.kind == ModeKind::cutoff);
    CHECK(c.kz == cplx{0.0, 0.0});

    std::mt19937_64 rng{11};
    for (int i = 0; i < 200; ++i) {
        const ModeIndex idx{static_cast<int>(rng() % 400), static_cast<int>(rng() % 400)};
        const auto kz = axial_wavenumber(idx, fig5(), w);
        CHECK(kz.kz.imag() >= 0.0);
        const double r = axial_radicand(idx, fig5(), w);
        CHECK(std::abs((kz.kz * kz.kz).real() - r) <= 1e-14 * std::abs(r));
    }
}

TEST_CASE("mode coefficients") {
    PolarizationAmplitude A;
    A.components = {cplx{1, 0}, cplx{0, 2}, cplx{-1, 1}};
    const auto d = mode_coefficient({0, 0}, A);
    CHECK(std::abs(d[0] - 16.0 / (kPi * kPi)) < 1e-15);
    const auto d2 = mode_coefficient({2, 3}, A);
    const double s = 16.0 / (5.0 * 7.0 * kPi * kPi);
    for (int j = 0; j < 3; ++j)
        CHECK(std::abs(d2[j] - s * A.components[j]) <= 1e-15 * std::abs(A.components[j]));
    const auto st = strip_mode_coefficient(4, A);
    CHECK(std::abs(st[1] - 4.0 / (9.0 * kPi) * A.components[1]) < 1e-15);
}

TEST_CASE("transmission factor") {
    const auto w = WaveSpec::from_wavelength(kLambda);
    auto g = fig5();
    const auto tp = transmission_factor({0, 0}, g, w);
    CHECK(std::abs(tp) == doctest::Approx(1.0).epsilon(1e-14));
    const auto kz = axial_wavenumber({0, 0}, g, w).kz.real();
    CHECK(std::arg(tp) == doctest::Approx(std::remainder(kz * g.thickness, 2 * kPi)).epsilon(1e-12));

    const ModeIndex far{400, 0};
    const auto ke = axial_wavenumber(far, g, w);
    REQUIRE(ke.kind == ModeKind::evanescent);
    CHECK(std::abs(transmission_factor(far, g, w)) ==
          doctest::Approx(std::exp(-ke.kz.imag() * g.thickness)).epsilon(1e-12));

    g.thickness = 0.0;
    CHECK(transmission_factor(far, g, w) == cplx{1.0, 0.0});
}

TEST_CASE("enumerate_modes ordering and filtering") {
    const auto w = WaveSpec::from_wavelength(kLambda);
    TruncationPolicy t;
    t.max_mode_index = 300;
    const auto modes = enumerate_modes(fig5(), w, t);
    REQUIRE_FALSE(modes.empty());
    for (std::size_t i = 1; i < modes.size(); ++i)
        CHECK(modes[i - 1].index < modes[i].index);

    // every propagating mode inside the cap is kept
    std::size_t propagating = 0;
    for (int m = 0; m <= 300; ++m)
        for (int n = 0; n <= 300; ++n)
            propagating += axial_wavenumber({m, n}, fig5(), w).kind != ModeKind::evanescent;
    std::size_t kept_prop = 0;
    for (const auto &e : modes)
        kept_prop += e.kz.kind != ModeKind::evanescent;
    CHECK(kept_prop == propagating);

    // tighter tolerance keeps a superset
    TruncationPolicy loose = t;
    loose.tail_tolerance = 1e-3;
    const auto fewer = enumerate_modes(fig5(), w, loose);
    CHECK(fewer.size() <= modes.size());

    SlitGeometry strip = fig5();
    strip.length = SlitLength::infinite();
    for (const auto &e : enumerate_modes(strip, w, t))
        CHECK(e.index.n == 0);

    const SlitGeometry hole{0.1 * kLambda, SlitLength::finite(0.1 * kLambda), 1.1e-6, 0.0, 1};
    CHECK(enumerate_modes(hole, w, TruncationPolicy{}).empty());
}

TEST_CASE("wavefunction vanishes on the walls") {
    const auto w = WaveSpec::from_wavelength(kLambda);
    const auto g = fig5();
    const double a = g.width, b = g.length.value();
    for (int cap : {1, 7, 50, 500}) {
        TruncationPolicy t;
        t.max_mode_index = cap;
        for (double f : {0.13, 0.5, 0.77}) {
            for (double z : {0.0, 0.5 * g.thickness, g.thickness}) {
                for (const auto &pt : {std::array{0.0, f * a}, std::array{b, f * a}, std::array{f * b, 0.0},
                                       std::array{f * b, a}}) {
                    const auto psi = slit_wavefunction(pt[0], pt[1], z, 0.0, g, w, PolarizationAmplitude{}, t);
                    CHECK(std::abs(psi[0]) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("entrance field is the product of two square-wave series") {
    const auto w = WaveSpec::from_wavelength(kLambda);
    const auto g = fig5();
    TruncationPolicy t;
    t.max_mode_index = 120;
    PolarizationAmplitude A;
    A.components = {cplx{0.5, -0.25}, cplx{0, 0}, cplx{1, 0}};
    for (double fx : {0.5, 0.2, 0.91})
        for (double fy : {0.5, 0.37, 0.05}) {
            const auto psi = slit_wavefunction(fx * g.length.value(), fy * g.width, 0.0, 0.0, g, w, A, t);
            const double ref = square_wave(fx, 120) * square_wave(fy, 120);
            for (int j = 0; j < 3; ++j)
                CHECK(std::abs(psi[j] - ref * A.components[j]) <= 1e-12 * (1 + std::abs(A.components[j])));
        }

    t.max_mode_index = 500;
    const auto centre = slit_wavefunction(0.5 * g.length.value(), 0.5 * g.width, 0.0, 0.0, g, w, A, t);
    const double mag = std::sqrt(std::norm(centre[0]) + std::norm(centre[1]) + std::norm(centre[2]));
    CHECK(std::abs(mag - A.norm()) <= 0.01 * A.norm());
}

TEST_CASE("strip wavefunction ignores x") {
    const auto w = WaveSpec::from_wavelength(kLambda);
    auto g = fig5();
    g.length = SlitLength::infinite();
    TruncationPolicy t;
    t.max_mode_index = 200;
    const auto p1 = slit_wavefunction(0.0, 0.3 * g.width, 0.0, 0.0, g, w, PolarizationAmplitude{}, t);
    const auto p2 = slit_wavefunction(123.0, 0.3 * g.width, 0.0, 0.0, g, w, PolarizationAmplitude{}, t);
    CHECK(p1[0] == p2[0]);
    CHECK(p1[0].real() == doctest::Approx(square_wave(0.3, 200)).epsilon(1e-12));
}

TEST_CASE("wavefunction time factor and bounds") {
    const auto w = WaveSpec::from_wavelength(kLambda);
    const auto g = fig5();
    TruncationPolicy t;
    t.max_mode_index = 40;
    const double t1 = 1.3e-15;
    const auto p0 = slit_wavefunction(1e-4, 5e-5, 5e-7, 0.0, g, w, PolarizationAmplitude{}, t);
    const auto p1 = slit_wavefunction(1e-4, 5e-5, 5e-7, t1, g, w, PolarizationAmplitude{}, t);
    const cplx ref = p0[0] * std::exp(cplx{0, -w.angular_frequency() * t1});
    CHECK(std::abs(p1[0] - ref) <= 1e-13 * std::abs(ref));

    CHECK_THROWS_WITH_AS(slit_wavefunction(-1e-6, 5e-5, 0, 0, g, w, {}, t), "point outside the slit along x",
                         ValidationError);
    CHECK_THROWS_WITH_AS(slit_wavefunction(1e-4, 2e-4, 0, 0, g, w, {}, t), "point outside the slit along y",
                         ValidationError);
    CHECK_THROWS_WITH_AS(slit_wavefunction(1e-4, 5e-5, 2e-6, 0, g, w, {}, t), "point outside the slit along z",
                         ValidationError);
}

TEST_CASE("sin_pi is exact at integers") {
    for (int i = -9; i <= 9; ++i)
        CHECK(detail::sin_pi(i) == 0.0);
    CHECK(detail::sin_pi(0.5) == 1.0);
    CHECK(detail::sin_pi(-0.5) == -1.0);
    CHECK(detail::sin_pi(2.25) == doctest::Approx(std::sin(kPi * 0.25)).epsilon(1e-15));
}

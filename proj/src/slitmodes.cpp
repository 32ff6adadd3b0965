#include "slitwave/slitmodes.hpp"

#include <cmath>
#include <string>

namespace slitwave {

namespace detail {

double sin_pi(double t) noexcept {
    // reduce to r in [-1, 1]; sin(pi t) = sin(pi r)
    const double r = t - 2.0 * std::nearbyint(0.5 * t);
    if (r == 0.0 || r == 1.0 || r == -1.0)
        return 0.0;
    if (r > 0.5)
        return std::sin(kPi * (1.0 - r));
    if (r < -0.5)
        return -std::sin(kPi * (1.0 + r));
    return std::sin(kPi * r);
}

bool mode_admitted(ModeKind kind, double relative_weight, double transmission_modulus,
                   double absolute_weight, const TruncationPolicy &trunc) noexcept {
    if (kind != ModeKind::evanescent)
        return true;
    return relative_weight * transmission_modulus > trunc.tail_tolerance &&
           absolute_weight * transmission_modulus > kAbsoluteWeightFloor;
}

} // namespace detail

namespace {

// (k - mu)(k + mu) keeps digits near cutoff where k^2 - mu^2 would cancel.
double radicand(double k, double mu, double nu) noexcept {
    return (k - mu) * (k + mu) - nu * nu;
}

AxialWavenumber from_radicand(double r) noexcept {
    if (r > 0.0)
        return {cplx{std::sqrt(r), 0.0}, ModeKind::propagating};
    if (r < 0.0)
        return {cplx{0.0, std::sqrt(-r)}, ModeKind::evanescent};
    return {cplx{0.0, 0.0}, ModeKind::cutoff};
}

double x_frequency(ModeIndex mode, const SlitGeometry &g) {
    if (g.length.is_infinite())
        return 0.0;
    return mode.x_harmonic() * kPi / g.length.value();
}

void check_inside(bool ok, const char *axis) {
    if (!ok)
        throw ValidationError{std::string{"point outside the slit along "} + axis};
}

} // namespace

double axial_radicand(ModeIndex mode, const SlitGeometry &g, const WaveSpec &w) {
    const double mu = mode.y_harmonic() * kPi / g.width;
    return radicand(w.wavenumber(), mu, x_frequency(mode, g));
}

AxialWavenumber axial_wavenumber(ModeIndex mode, const SlitGeometry &g, const WaveSpec &w) {
    return from_radicand(axial_radicand(mode, g, w));
}

Vec3c mode_coefficient(ModeIndex mode, const PolarizationAmplitude &A) {
    const double s = 16.0 / (static_cast<double>(mode.y_harmonic()) * mode.x_harmonic() * kPi * kPi);
    return {s * A.components[0], s * A.components[1], s * A.components[2]};
}

Vec3c strip_mode_coefficient(int m, const PolarizationAmplitude &A) {
    const double s = 4.0 / ((2.0 * m + 1.0) * kPi);
    return {s * A.components[0], s * A.components[1], s * A.components[2]};
}

cplx transmission_factor(ModeIndex mode, const SlitGeometry &g, const WaveSpec &w) {
    if (g.thickness == 0.0)
        return cplx{1.0, 0.0};
    const cplx kz = axial_wavenumber(mode, g, w).kz;
    return std::exp(cplx{0.0, 1.0} * kz * g.thickness);
}

Vec3c slit_wavefunction(double x, double y, double z, double t, const SlitGeometry &g,
                        const WaveSpec &w, const PolarizationAmplitude &A,
                        const TruncationPolicy &trunc) {
    trunc.validate();
    const bool strip = g.length.is_infinite();
    if (!strip)
        check_inside(x >= 0.0 && x <= g.length.value(), "x");
    check_inside(y >= 0.0 && y <= g.width, "y");
    check_inside(z >= 0.0 && z <= g.thickness, "z");

    const int cap = trunc.max_mode_index;
    const double k = w.wavenumber();
    const double y_frac = y / g.width;
    const double x_frac = strip ? 0.0 : x / g.length.value();

    std::vector<double> sin_y(cap + 1), sin_x(strip ? 1 : cap + 1, 1.0);
    for (int m = 0; m <= cap; ++m)
        sin_y[m] = detail::sin_pi((2 * m + 1) * y_frac);
    if (!strip)
        for (int n = 0; n <= cap; ++n)
            sin_x[n] = detail::sin_pi((2 * n + 1) * x_frac);

    const double scale = strip ? 4.0 / kPi : 16.0 / (kPi * kPi);
    const int n_cap = strip ? 0 : cap;
    cplx sum{0.0, 0.0};
    for (int m = 0; m <= cap; ++m) {
        if (sin_y[m] == 0.0)
            continue;
        const double mu = (2 * m + 1) * kPi / g.width;
        for (int n = 0; n <= n_cap; ++n) {
            if (sin_x[n] == 0.0)
                continue;
            const double nu = strip ? 0.0 : (2 * n + 1) * kPi / g.length.value();
            const AxialWavenumber kz = from_radicand(radicand(k, mu, nu));
            const cplx phase = std::exp(cplx{0.0, 1.0} * kz.kz * z);
            const double rel = 1.0 / ((2.0 * m + 1.0) * (strip ? 1.0 : 2.0 * n + 1.0));
            if (!detail::mode_admitted(kz.kind, rel, std::abs(phase), scale * rel, trunc))
                continue;
            sum += (scale * rel * sin_y[m] * sin_x[n]) * phase;
        }
    }
    sum *= std::exp(cplx{0.0, -w.angular_frequency() * t});
    return {A.components[0] * sum, A.components[1] * sum, A.components[2] * sum};
}

std::vector<ModeEntry> enumerate_modes(const SlitGeometry &g, const WaveSpec &w,
                                       const TruncationPolicy &trunc) {
    trunc.validate();
    const bool strip = g.length.is_infinite();
    const int cap = trunc.max_mode_index;
    const double scale = strip ? 4.0 / kPi : 16.0 / (kPi * kPi);
    std::vector<ModeEntry> out;
    for (int m = 0; m <= cap; ++m) {
        for (int n = 0; n <= (strip ? 0 : cap); ++n) {
            const ModeIndex idx{m, n};
            const AxialWavenumber kz = axial_wavenumber(idx, g, w);
            const double t_mod = std::exp(-kz.kz.imag() * g.thickness);
            const double rel = 1.0 / ((2.0 * m + 1.0) * (strip ? 1.0 : 2.0 * n + 1.0));
            if (detail::mode_admitted(kz.kind, rel, t_mod, scale * rel, trunc))
                out.push_back({idx, kz});
        }
    }
    return out;
}

} // namespace slitwave

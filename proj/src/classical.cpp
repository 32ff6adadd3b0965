#include "slitwave/classical.hpp"

#include <cmath>

#include "slitwave/core.hpp"

namespace slitwave::classical {

namespace {
constexpr double kWindow = 1e-8;
}

ClassicalParams classical_params(double sin_theta, double a, double d, double lambda) noexcept {
    return {a * kPi * sin_theta / lambda, (a + d) * kPi * sin_theta / lambda};
}

double envelope(double beta_cl) noexcept {
    if (std::abs(beta_cl) < kWindow)
        return 1.0 - beta_cl * beta_cl / 3.0;
    const double s = std::sin(beta_cl) / beta_cl;
    return s * s;
}

double grating(double gamma_cl, int slits) noexcept {
    const double n = slits;
    // distance from the nearest multiple of pi; the ratio is even under that shift
    const double eps = gamma_cl - kPi * std::nearbyint(gamma_cl / kPi);
    if (std::abs(eps) < kWindow)
        return n * n * (1.0 - (n * n - 1.0) * eps * eps / 3.0);
    const double r = std::sin(n * eps) / std::sin(eps);
    return r * r;
}

double classical_intensity_sin(double sin_theta, double a, double d, int slits, double lambda, double I0) {
    if (!(a > 0.0))
        throw ValidationError{"width must be positive"};
    if (slits < 1)
        throw ValidationError{"slit count must be at least 1"};
    if (!(lambda > 0.0))
        throw ValidationError{"wavelength must be positive"};
    const ClassicalParams p = classical_params(sin_theta, a, d, lambda);
    return I0 * envelope(p.beta_cl) * grating(p.gamma_cl, slits);
}

double classical_intensity(double theta, double a, double d, int slits, double lambda, double I0) {
    return classical_intensity_sin(std::sin(theta), a, d, slits, lambda, I0);
}

} // namespace slitwave::classical

#ifndef SLITWAVE_CLASSICAL_HPP
#define SLITWAVE_CLASSICAL_HPP

// Classical Fraunhofer N-slit intensity
//   I = I0 (sin^2 b / b^2) (sin^2 N g / sin^2 g),  b = a pi sin(theta) / lambda,
//   g = (a + d) pi sin(theta) / lambda,
// used as the reference pattern for the quantum model.

namespace slitwave::classical {

struct ClassicalParams {
    double beta_cl;  // a pi sin(theta) / lambda
    double gamma_cl; // (a + d) pi sin(theta) / lambda
};

ClassicalParams classical_params(double sin_theta, double a, double d, double lambda) noexcept;

/// sin^2(x) / x^2, with the series limit for |x| < 1e-8.
double envelope(double beta_cl) noexcept;

/// sin^2(N g) / sin^2(g), with the limit N^2 within 1e-8 of g = j pi.
double grating(double gamma_cl, int slits) noexcept;

/// Throws ValidationError unless a > 0, N >= 1 and lambda > 0.
double classical_intensity(double theta, double a, double d, int slits, double lambda, double I0 = 1.0);

/// Same, taking sin(theta) directly.
double classical_intensity_sin(double sin_theta, double a, double d, int slits, double lambda,
                               double I0 = 1.0);

} // namespace slitwave::classical

#endif

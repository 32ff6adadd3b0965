#include "slitwave/core.hpp"

#include <cmath>

#include "slitwave/slitmodes.hpp"

namespace slitwave {

namespace {

void require(bool ok, const char *msg) {
    if (!ok)
        throw ValidationError{msg};
}

} // namespace

WaveSpec WaveSpec::from_wavelength(double lambda) {
    require(std::isfinite(lambda) && lambda > 0.0, "wavelength must be positive");
    const double k = 2.0 * kPi / lambda;
    return WaveSpec{lambda, k, kSpeedOfLight * k};
}

double SlitLength::value() const {
    if (infinite_)
        throw std::logic_error{"slit length is infinite"};
    return b_;
}

double PolarizationAmplitude::norm() const noexcept {
    double s = 0.0;
    for (const auto &c : components)
        s += std::norm(c);
    return std::sqrt(s);
}

ObservationDirection::ObservationDirection(double alpha, double beta)
    : alpha_{alpha}, beta_{beta}, sin_alpha_{std::sin(alpha)}, sin_beta_{std::sin(beta)} {
    cos_theta_ = std::sqrt(std::max(0.0, 1.0 - sin_alpha_ * sin_alpha_ - sin_beta_ * sin_beta_));
}

ObservationDirection ObservationDirection::from_angles(double alpha, double beta) {
    require(std::isfinite(alpha) && std::isfinite(beta), "direction angles must be finite");
    const double sa = std::sin(alpha);
    const double sb = std::sin(beta);
    require(sa * sa + sb * sb <= 1.0, "direction requires sin^2(alpha) + sin^2(beta) <= 1");
    return ObservationDirection{alpha, beta};
}

void ScreenScan::validate() const {
    require(std::isfinite(distance) && distance > 0.0, "screen distance must be positive");
    require(std::isfinite(alpha), "alpha must be finite");
    require(std::isfinite(beta_min) && std::isfinite(beta_max), "beta range must be finite");
    require(beta_min < beta_max, "beta_min must be below beta_max");
    require(samples >= 2, "scan needs at least 2 samples");
}

double ScreenScan::beta_at(int i) const noexcept {
    if (i == samples - 1)
        return beta_max;
    return beta_min + (beta_max - beta_min) * (static_cast<double>(i) / (samples - 1));
}

void TruncationPolicy::validate() const {
    require(max_mode_index >= 1, "max mode index must be at least 1");
    require(tail_tolerance > 0.0 && tail_tolerance < 1.0, "tail tolerance must lie in (0, 1)");
}

ValidatedGeometry validate_geometry(const SlitGeometry &g, const WaveSpec &w) {
    require(std::isfinite(g.width) && g.width > 0.0, "width must be positive");
    if (!g.length.is_infinite())
        require(std::isfinite(g.length.value()) && g.length.value() > 0.0, "length must be positive");
    require(std::isfinite(g.thickness) && g.thickness >= 0.0, "thickness must be non-negative");
    require(std::isfinite(g.gap) && g.gap >= 0.0, "gap must be non-negative");
    require(g.slits >= 1, "slit count must be at least 1");
    require(std::isfinite(w.wavelength()) && w.wavelength() > 0.0, "wavelength must be positive");

    const bool propagating = axial_radicand(ModeIndex{0, 0}, g, w) > 0.0;
    return ValidatedGeometry{g, w, g.pitch(), propagating};
}

const char *to_string(ModelSelection m) noexcept {
    switch (m) {
    case ModelSelection::quantum: return "quantum";
    case ModelSelection::classical: return "classical";
    case ModelSelection::both: return "both";
    }
    return "both";
}

ModelSelection model_selection_from_string(const std::string &s) {
    if (s == "quantum")
        return ModelSelection::quantum;
    if (s == "classical")
        return ModelSelection::classical;
    if (s == "both")
        return ModelSelection::both;
    throw ValidationError{"unknown model '" + s + "'"};
}

} // namespace slitwave

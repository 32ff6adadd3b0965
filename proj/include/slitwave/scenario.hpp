#ifndef SLITWAVE_SCENARIO_HPP
#define SLITWAVE_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "slitwave/core.hpp"

namespace slitwave::cli {

/// A complete run configuration. Presets carry the figure inputs.
struct Scenario {
    std::string name;
    std::string description;
    SlitGeometry geometry;
    double wavelength = 0.0;
    ScreenScan scan;
    TruncationPolicy truncation;
    PolarizationAmplitude amplitude;
};

inline constexpr double kHeNeWavelength = 6.328e-7;
inline constexpr double kScreenDistance = 4.572;
inline constexpr double kDiffractionAngle = 0.001;

/// All presets in a fixed order: fig4a..fig4f, fig5, fig6a..c, fig7a..c, fig8, fig9a..c,
/// fig10a..d, fig11a..c, fig12a..c.
const std::vector<Scenario> &presets();

std::optional<Scenario> find_preset(const std::string &name);

/// Starting point for free-form runs without --scenario (the single-slit fig5 inputs).
Scenario custom_base();

} // namespace slitwave::cli

#endif

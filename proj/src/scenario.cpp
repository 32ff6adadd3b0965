#include "slitwave/scenario.hpp"

#include <array>

namespace slitwave::cli {

namespace {

constexpr double kGratingWidth = 0.88e-4;  // fig4, fig12
constexpr double kGratingPitch = 3.52e-4;
constexpr double kGratingThickness = 0.88e-4;
constexpr double kSingleWidth = 1.76e-4;   // fig5..fig11
constexpr double kSingleLength = 4.0e-4;
constexpr double kSingleThickness = 1.1e-6;

ScreenScan scan(double half_range, int samples) {
    ScreenScan s;
    s.distance = kScreenDistance;
    s.alpha = kDiffractionAngle;
    s.beta_min = -half_range;
    s.beta_max = half_range;
    s.samples = samples;
    s.models = ModelSelection::both;
    return s;
}

Scenario single(std::string name, std::string desc, double a, SlitLength b, double c, double lambda,
                ScreenScan sc) {
    Scenario s;
    s.name = std::move(name);
    s.description = std::move(desc);
    s.geometry = SlitGeometry{a, b, c, 0.0, 1};
    s.wavelength = lambda;
    s.scan = sc;
    return s;
}

Scenario grating(std::string name, std::string desc, int slits, double thickness, ScreenScan sc) {
    Scenario s;
    s.name = std::move(name);
    s.description = std::move(desc);
    s.geometry = SlitGeometry{kGratingWidth, SlitLength::finite(kGratingPitch), thickness,
                              kGratingPitch - kGratingWidth, slits};
    s.wavelength = kHeNeWavelength;
    s.scan = sc;
    return s;
}

std::vector<Scenario> build() {
    std::vector<Scenario> v;
    const ScreenScan narrow = scan(0.01, 4001);
    const ScreenScan wide = scan(1.2, 4001);

    const std::array<const char *, 6> fig4 = {"fig4a", "fig4b", "fig4c", "fig4d", "fig4e", "fig4f"};
    for (int i = 0; i < 6; ++i)
        v.push_back(grating(fig4[i], std::to_string(i + 2) + "-slit grating, (a+d)/a = 4", i + 2,
                            kGratingThickness, narrow));

    const SlitLength b0 = SlitLength::finite(kSingleLength);
    v.push_back(single("fig5", "single slit", kSingleWidth, b0, kSingleThickness, kHeNeWavelength, narrow));

    const std::array<std::pair<const char *, double>, 3> fig6 = {{{"fig6a", 5}, {"fig6b", 10}, {"fig6c", 20}}};
    for (const auto &[n, f] : fig6)
        v.push_back(single(n, "single slit, width " + std::to_string(static_cast<int>(f)) + "a",
                           f * kSingleWidth, b0, kSingleThickness, kHeNeWavelength, narrow));

    const std::array<std::pair<const char *, double>, 3> fig7 = {{{"fig7a", 1}, {"fig7b", 3}, {"fig7c", 5}}};
    for (const auto &[n, f] : fig7)
        v.push_back(single(n, "square aperture a = b = " + std::to_string(static_cast<int>(f)) + " lambda",
                           f * kHeNeWavelength, SlitLength::finite(f * kHeNeWavelength), kSingleThickness,
                           kHeNeWavelength, wide));

    v.push_back(single("fig8", "square aperture a = b = 0.1 lambda", 0.1 * kHeNeWavelength,
                       SlitLength::finite(0.1 * kHeNeWavelength), kSingleThickness, kHeNeWavelength, wide));

    v.push_back(single("fig9a", "single slit, length 50 b0", kSingleWidth, SlitLength::finite(50 * kSingleLength),
                       kSingleThickness, kHeNeWavelength, narrow));
    v.push_back(single("fig9b", "single slit, length 70 b0", kSingleWidth, SlitLength::finite(70 * kSingleLength),
                       kSingleThickness, kHeNeWavelength, narrow));
    v.push_back(single("fig9c", "single slit, infinite length", kSingleWidth, SlitLength::infinite(),
                       kSingleThickness, kHeNeWavelength, narrow));

    const std::array<std::pair<const char *, double>, 4> fig10 = {
        {{"fig10a", 100}, {"fig10b", 1000}, {"fig10c", 2000}, {"fig10d", 3000}}};
    for (const auto &[n, f] : fig10)
        v.push_back(single(n, "single slit, thickness " + std::to_string(static_cast<int>(f)) + " c'",
                           kSingleWidth, b0, f * kSingleThickness, kHeNeWavelength, narrow));

    const std::array<std::pair<const char *, double>, 3> fig11 = {{{"fig11a", 10}, {"fig11b", 20}, {"fig11c", 50}}};
    for (const auto &[n, f] : fig11)
        v.push_back(single(n, "single slit, wavelength " + std::to_string(static_cast<int>(f)) + " lambda",
                           kSingleWidth, b0, kSingleThickness, f * kHeNeWavelength, scan(0.5, 4001)));

    // +-0.016 rad reaches order 8 at the same 5e-6 rad step
    const std::array<std::pair<const char *, double>, 3> fig12 = {{{"fig12a", 1}, {"fig12b", 10}, {"fig12c", 50}}};
    for (const auto &[n, f] : fig12)
        v.push_back(grating(n, "double slit, thickness " + std::to_string(static_cast<int>(f)) + " c'", 2,
                            f * kGratingThickness, scan(0.016, 6401)));
    return v;
}

} // namespace

const std::vector<Scenario> &presets() {
    static const std::vector<Scenario> table = build();
    return table;
}

std::optional<Scenario> find_preset(const std::string &name) {
    for (const auto &s : presets())
        if (s.name == name)
            return s;
    return std::nullopt;
}

Scenario custom_base() {
    Scenario s = *find_preset("fig5");
    s.name = "custom";
    s.description = "free-form parameters";
    return s;
}

} // namespace slitwave::cli

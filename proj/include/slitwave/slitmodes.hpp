#ifndef SLITWAVE_SLITMODES_HPP
#define SLITWAVE_SLITMODES_HPP

#include <vector>

#include "slitwave/core.hpp"

// Standing-wave modes of the rectangular slit box 0<=x<=b, 0<=y<=a, 0<=z<=c'.
// Only odd harmonics are excited by a uniform incident wave, so modes are
// indexed by (m, n) with harmonics 2m+1 along y and 2n+1 along x.

namespace slitwave {

/// Mode (m, n). `n` is ignored when the slit length is infinite.
struct ModeIndex {
    int m = 0;
    int n = 0;

    int y_harmonic() const noexcept { return 2 * m + 1; }
    int x_harmonic() const noexcept { return 2 * n + 1; }

    auto operator<=>(const ModeIndex &) const = default;
};

enum class ModeKind { propagating, cutoff, evanescent };

struct AxialWavenumber {
    cplx kz;
    ModeKind kind;
};

struct ModeEntry {
    ModeIndex index;
    AxialWavenumber kz;
};

/// k^2 - ((2n+1)pi/b)^2 - ((2m+1)pi/a)^2, with the b term dropped for an infinite slit.
double axial_radicand(ModeIndex mode, const SlitGeometry &g, const WaveSpec &w);

/// Square root of the radicand on the branch Im(kz) >= 0, so e^{i kz z} never grows with z.
AxialWavenumber axial_wavenumber(ModeIndex mode, const SlitGeometry &g, const WaveSpec &w);

/// D_mn = 16 A / ((2m+1)(2n+1) pi^2), the sine-series coefficients of the uniform incident field.
Vec3c mode_coefficient(ModeIndex mode, const PolarizationAmplitude &A);

/// Strip (infinite length) coefficient 4 A / ((2m+1) pi).
Vec3c strip_mode_coefficient(int m, const PolarizationAmplitude &A);

/// e^{i kz c'} for one mode.
cplx transmission_factor(ModeIndex mode, const SlitGeometry &g, const WaveSpec &w);

/// Field inside the slit at (x, y, z) and time t. Throws ValidationError outside the box.
/// For an infinite slit x is ignored.
Vec3c slit_wavefunction(double x, double y, double z, double t, const SlitGeometry &g,
                        const WaveSpec &w, const PolarizationAmplitude &A,
                        const TruncationPolicy &trunc);

/// Modes kept by the truncation policy, ordered by (m, n).
///
/// A mode is kept when it propagates, or when its transmitted weight
/// |coefficient| * |e^{i kz c'}| exceeds tail_tolerance times the untransmitted
/// weight of the fundamental and also the absolute floor 1e-300. For an
/// infinite slit every entry has n == 0.
std::vector<ModeEntry> enumerate_modes(const SlitGeometry &g, const WaveSpec &w,
                                       const TruncationPolicy &trunc);

namespace detail {

/// sin(pi * t), exact zero at integer t.
double sin_pi(double t) noexcept;

/// Admission rule shared by enumerate_modes and the far-field sums.
/// `relative_weight` is |coefficient / fundamental coefficient| and `absolute_weight`
/// the transmitted |coefficient| for unit amplitude.
bool mode_admitted(ModeKind kind, double relative_weight, double transmission_modulus,
                   double absolute_weight, const TruncationPolicy &trunc) noexcept;

inline constexpr double kAbsoluteWeightFloor = 1e-300;

} // namespace detail

} // namespace slitwave

#endif

#ifndef SLITWAVE_CORE_HPP
#define SLITWAVE_CORE_HPP

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace slitwave {

using cplx = std::complex<double>;
using Vec3c = std::array<cplx, 3>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299'792'458.0; // m/s

/// Raised for any input that fails validation. The message names the offending field.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string &msg) : std::invalid_argument{msg} {}
};

/// Monochromatic incident light. Built from the vacuum wavelength; k and omega are derived.
class WaveSpec {
public:
    static WaveSpec from_wavelength(double lambda);

    double wavelength() const noexcept { return lambda_; }
    double wavenumber() const noexcept { return k_; }
    double angular_frequency() const noexcept { return omega_; }

private:
    WaveSpec(double lambda, double k, double omega) : lambda_{lambda}, k_{k}, omega_{omega} {}
    double lambda_;
    double k_;
    double omega_;
};

/// Slit length along x. Either a positive finite value or the distinguished infinite length,
/// which selects the single-sum strip formulas instead of a very large float.
class SlitLength {
public:
    static SlitLength finite(double b) noexcept { return SlitLength{b, false}; }
    static SlitLength infinite() noexcept { return SlitLength{0.0, true}; }

    bool is_infinite() const noexcept { return infinite_; }
    /// Throws std::logic_error when the length is infinite.
    double value() const;

    bool operator==(const SlitLength &) const = default;

private:
    SlitLength(double b, bool inf) : b_{b}, infinite_{inf} {}
    double b_;
    bool infinite_;
};

/// Rectangular slit (or array of identical slits) in an opaque screen.
/// All lengths in metres; slits are stacked along y with edge-to-edge gap `gap`.
struct SlitGeometry {
    double width = 0.0;                        // a, along y
    SlitLength length = SlitLength::infinite(); // b, along x
    double thickness = 0.0;                    // c', along z
    double gap = 0.0;                          // d
    int slits = 1;                             // N

    double pitch() const noexcept { return width + gap; }
};

/// Incident amplitude vector A. Defaults to x-polarised unit amplitude.
struct PolarizationAmplitude {
    Vec3c components{cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}};

    double norm() const noexcept;
};

/// Far-field direction given by the angles to the yz plane (alpha) and to the xz plane (beta).
class ObservationDirection {
public:
    /// Throws ValidationError when sin^2(alpha) + sin^2(beta) > 1.
    static ObservationDirection from_angles(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double sin_alpha() const noexcept { return sin_alpha_; }
    double sin_beta() const noexcept { return sin_beta_; }
    double cos_theta() const noexcept { return cos_theta_; }

private:
    ObservationDirection(double alpha, double beta);
    double alpha_, beta_, sin_alpha_, sin_beta_, cos_theta_;
};

enum class ModelSelection { quantum, classical, both };

/// Screen sampling: beta swept uniformly at fixed alpha, screen at distance R.
struct ScreenScan {
    double distance = 4.572;
    double alpha = 0.001;
    double beta_min = -0.01;
    double beta_max = 0.01;
    int samples = 4001;
    ModelSelection models = ModelSelection::both;

    void validate() const;
    double beta_at(int i) const noexcept;
    double step() const noexcept { return (beta_max - beta_min) / (samples - 1); }
};

/// Caps the mode sums and drops modes whose transmitted weight is negligible.
struct TruncationPolicy {
    int max_mode_index = 2000;
    double tail_tolerance = 1e-9;

    void validate() const;
};

/// Geometry and wave that passed validation, with derived facts attached.
struct ValidatedGeometry {
    SlitGeometry geometry;
    WaveSpec wave;
    double pitch;
    bool has_propagating_mode;
};

ValidatedGeometry validate_geometry(const SlitGeometry &g, const WaveSpec &w);

const char *to_string(ModelSelection m) noexcept;
ModelSelection model_selection_from_string(const std::string &s);

} // namespace slitwave

#endif

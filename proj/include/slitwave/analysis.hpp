#ifndef SLITWAVE_ANALYSIS_HPP
#define SLITWAVE_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "slitwave/core.hpp"

namespace slitwave::analysis {

enum class Model { quantum, classical };

const char *to_string(Model m) noexcept;

struct PatternSample {
    double beta;
    double sin_beta;
    double intensity;
};

/// Inputs the series was generated from; the analysis needs the grating geometry.
struct PatternParameters {
    double width;
    double pitch;
    double wavelength;
    int slits;
    double distance;
    double alpha;
};

struct PatternSeries {
    Model model = Model::quantum;
    PatternParameters params{};
    std::vector<PatternSample> samples;

    /// Throws ValidationError unless beta is strictly increasing, intensities are
    /// non-negative and there are at least 2 samples.
    void validate() const;
    double max_intensity() const noexcept;
};

struct Extremum {
    std::size_t index;
    double beta;
    double intensity;
    std::optional<int> order; // grating order, principal maxima only
};

struct GapCounts {
    int from_order;
    int to_order;
    int secondary_maxima;
    int minima;
};

struct ExtremaReport {
    std::vector<Extremum> principal_maxima;
    std::vector<Extremum> secondary_maxima;
    std::vector<Extremum> minima;
    /// One entry per pair of principal maxima at consecutive orders j, j+1.
    std::vector<GapCounts> gaps;

    /// The secondary-maxima count shared by every gap, if all gaps agree.
    std::optional<int> secondary_maxima_per_gap() const;
    std::optional<int> minima_per_gap() const;
};

struct AgreementMetrics {
    double rms;                   // RMS of the difference of peak-normalised curves
    int max_peak_offset;          // grid steps, over principal maxima matched by order
    std::optional<double> secondary_ratio; // count(q) / count(c); empty when count(c) == 0 < count(q)
};

inline constexpr double kDefaultProminenceFloor = 1e-6;
inline constexpr double kDefaultMissingThreshold = 1e-3;

/// Samples one model over the scan. Uses A and the truncation only for the quantum model.
PatternSeries scan_pattern(Model model, const ValidatedGeometry &vg, const PolarizationAmplitude &A,
                           const ScreenScan &scan, const TruncationPolicy &trunc,
                           unsigned threads = 1);

/// Local extrema of the series, with maxima split into principal and secondary.
///
/// A local maximum is principal when it sits within half a principal-lobe half width
/// (0.5/N of the order spacing in sin beta) of an order position j lambda / (a + d),
/// reaches half the height the classical N^2 envelope predicts there (scaled to the
/// global maximum), and the order is not missing. Extrema whose prominence is below
/// prominence_floor times the global maximum are dropped. For N = 1 the global
/// maximum is the only principal maximum (order 0).
ExtremaReport find_extrema(const PatternSeries &series,
                           double prominence_floor = kDefaultProminenceFloor);

/// Positive orders j whose intensity at sin beta = +-j lambda / (a + d) (nearest sample)
/// is below threshold times the strongest order intensity. Both signs are checked when
/// both lie in the scan; the order is missing only if every in-range side is.
/// Throws ValidationError for N < 2 or when no order j >= 1 lies in the scan.
std::vector<int> missing_orders(const PatternSeries &series,
                                double threshold = kDefaultMissingThreshold);

/// Throws ValidationError when the beta grids differ.
AgreementMetrics compare_patterns(const PatternSeries &quantum, const PatternSeries &classical);

/// Trapezoidal integral of intensity over beta.
double integrated_intensity(const PatternSeries &series);

} // namespace slitwave::analysis

#endif

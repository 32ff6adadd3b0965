#ifndef SLITWAVE_EMIT_HPP
#define SLITWAVE_EMIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "slitwave/analysis.hpp"
#include "slitwave/scenario.hpp"

namespace slitwave::cli {

enum class Normalization { none, peak };

struct ModelReport {
    analysis::ExtremaReport extrema;
    std::optional<std::vector<int>> missing_orders;
    double integrated_intensity = 0.0;
};

/// Everything a run produced. Series are raw; normalisation is applied on output.
struct RunResult {
    Scenario scenario;
    Normalization normalization = Normalization::none;
    std::optional<analysis::PatternSeries> quantum;
    std::optional<analysis::PatternSeries> classical;
    std::optional<ModelReport> quantum_report;
    std::optional<ModelReport> classical_report;
    std::optional<analysis::AgreementMetrics> comparison;
    std::size_t modes_used = 0;
};

/// Scientific notation, 12 significant digits, independent of the C locale.
std::string format_number(double v);

/// Header: beta_rad,sin_beta,screen_y_m[,intensity_quantum][,intensity_classical]
std::string emit_csv(const RunResult &r);
std::string emit_json(const RunResult &r);

/// Writes content to path; throws std::runtime_error when the file cannot be written.
void write_file(const std::string &path, const std::string &content);

} // namespace slitwave::cli

#endif

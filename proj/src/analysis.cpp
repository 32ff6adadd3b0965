#include "slitwave/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "slitwave/classical.hpp"
#include "slitwave/kirchhoff.hpp"

namespace slitwave::analysis {

const char *to_string(Model m) noexcept {
    return m == Model::quantum ? "quantum" : "classical";
}

void PatternSeries::validate() const {
    if (samples.size() < 2)
        throw ValidationError{"series needs at least 2 samples"};
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].intensity >= 0.0))
            throw ValidationError{"series intensities must be non-negative"};
        if (i > 0 && !(samples[i].beta > samples[i - 1].beta))
            throw ValidationError{"series beta must be strictly increasing"};
    }
}

double PatternSeries::max_intensity() const noexcept {
    double m = 0.0;
    for (const auto &s : samples)
        m = std::max(m, s.intensity);
    return m;
}

namespace {

std::optional<int> uniform(const std::vector<GapCounts> &gaps, int GapCounts::*field) {
    if (gaps.empty())
        return std::nullopt;
    const int v = gaps.front().*field;
    for (const auto &g : gaps)
        if (g.*field != v)
            return std::nullopt;
    return v;
}

double order_spacing(const PatternParameters &p) { return p.wavelength / p.pitch; }

std::size_t nearest_sample(const PatternSeries &s, double sin_target) {
    std::size_t best = 0;
    double best_d = std::abs(s.samples[0].sin_beta - sin_target);
    for (std::size_t i = 1; i < s.samples.size(); ++i) {
        const double d = std::abs(s.samples[i].sin_beta - sin_target);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

// Intensity at the sample nearest each grating order inside the scan.
std::map<int, double> order_intensities(const PatternSeries &s) {
    std::map<int, double> out;
    const double spacing = order_spacing(s.params);
    const double lo = s.samples.front().sin_beta;
    const double hi = s.samples.back().sin_beta;
    const int j_lo = static_cast<int>(std::ceil(lo / spacing - 1e-9));
    const int j_hi = static_cast<int>(std::floor(hi / spacing + 1e-9));
    for (int j = j_lo; j <= j_hi; ++j) {
        const double target = j * spacing;
        if (target < lo || target > hi)
            continue;
        out[j] = s.samples[nearest_sample(s, target)].intensity;
    }
    return out;
}

// Orders (signed) below threshold times the strongest order.
std::map<int, bool> order_missing_flags(const PatternSeries &s, double threshold) {
    const auto inten = order_intensities(s);
    double ref = 0.0;
    for (const auto &[j, v] : inten)
        ref = std::max(ref, v);
    std::map<int, bool> out;
    for (const auto &[j, v] : inten)
        out[j] = !(v >= threshold * ref);
    return out;
}

double left_walk_min(const std::vector<double> &I, std::size_t i) {
    double m = I[i];
    for (std::size_t j = i; j-- > 0;) {
        if (I[j] > I[i])
            break;
        m = std::min(m, I[j]);
    }
    return m;
}

double right_walk_min(const std::vector<double> &I, std::size_t i) {
    double m = I[i];
    for (std::size_t j = i + 1; j < I.size(); ++j) {
        if (I[j] > I[i])
            break;
        m = std::min(m, I[j]);
    }
    return m;
}

double left_walk_max(const std::vector<double> &I, std::size_t i) {
    double m = I[i];
    for (std::size_t j = i; j-- > 0;) {
        if (I[j] < I[i])
            break;
        m = std::max(m, I[j]);
    }
    return m;
}

double right_walk_max(const std::vector<double> &I, std::size_t i) {
    double m = I[i];
    for (std::size_t j = i + 1; j < I.size(); ++j) {
        if (I[j] < I[i])
            break;
        m = std::max(m, I[j]);
    }
    return m;
}

double envelope_at(const PatternParameters &p, double sin_beta) {
    return classical::envelope(classical::classical_params(sin_beta, p.width, p.pitch - p.width, p.wavelength).beta_cl);
}

} // namespace

std::optional<int> ExtremaReport::secondary_maxima_per_gap() const {
    return uniform(gaps, &GapCounts::secondary_maxima);
}

std::optional<int> ExtremaReport::minima_per_gap() const { return uniform(gaps, &GapCounts::minima); }

PatternSeries scan_pattern(Model model, const ValidatedGeometry &vg, const PolarizationAmplitude &A,
                           const ScreenScan &scan, const TruncationPolicy &trunc, unsigned threads) {
    scan.validate();
    const SlitGeometry &g = vg.geometry;
    PatternSeries out;
    out.model = model;
    out.params = {g.width, vg.pitch, vg.wave.wavelength(), g.slits, scan.distance, scan.alpha};

    std::vector<double> betas(scan.samples);
    for (int i = 0; i < scan.samples; ++i)
        betas[i] = scan.beta_at(i);

    std::vector<double> values;
    if (model == Model::quantum) {
        const FarFieldModel ff{vg, scan.alpha, scan.distance, trunc, threads};
        values = scan_intensity(ff, A, betas, threads);
    } else {
        values.resize(betas.size());
        for (std::size_t i = 0; i < betas.size(); ++i)
            values[i] = classical::classical_intensity_sin(std::sin(betas[i]), g.width, g.gap, g.slits,
                                                           vg.wave.wavelength());
    }
    out.samples.reserve(betas.size());
    for (std::size_t i = 0; i < betas.size(); ++i)
        out.samples.push_back({betas[i], std::sin(betas[i]), values[i]});
    return out;
}

ExtremaReport find_extrema(const PatternSeries &series, double prominence_floor) {
    series.validate();
    if (series.samples.size() < 3)
        throw ValidationError{"series too short for extrema"};
    std::vector<double> I;
    I.reserve(series.samples.size());
    for (const auto &s : series.samples)
        I.push_back(s.intensity);

    ExtremaReport rep;
    const double gmax = *std::max_element(I.begin(), I.end());
    if (gmax <= 0.0)
        return rep;
    const double floor = prominence_floor * gmax;

    std::vector<std::size_t> maxima;
    for (std::size_t i = 1; i + 1 < I.size(); ++i) {
        if (I[i] > I[i - 1] && I[i] > I[i + 1]) {
            const double prom = I[i] - std::max(left_walk_min(I, i), right_walk_min(I, i));
            if (prom >= floor)
                maxima.push_back(i);
        } else if (I[i] < I[i - 1] && I[i] < I[i + 1]) {
            const double prom = std::min(left_walk_max(I, i), right_walk_max(I, i)) - I[i];
            if (prom >= floor)
                rep.minima.push_back({i, series.samples[i].beta, I[i], std::nullopt});
        }
    }
    if (maxima.empty())
        return rep;

    const PatternParameters &p = series.params;
    std::map<int, std::size_t> principal; // order -> sample index
    if (p.slits <= 1) {
        const auto top = *std::max_element(maxima.begin(), maxima.end(),
                                           [&](std::size_t a, std::size_t b) { return I[a] < I[b]; });
        principal[0] = top;
    } else {
        const double spacing = order_spacing(p);
        const double tol = 0.5 / p.slits * spacing;
        const auto missing = order_missing_flags(series, kDefaultMissingThreshold);
        const std::size_t gi = static_cast<std::size_t>(std::max_element(I.begin(), I.end()) - I.begin());
        const double env_top = envelope_at(p, series.samples[gi].sin_beta);
        for (std::size_t i : maxima) {
            const double s = series.samples[i].sin_beta;
            const int j = static_cast<int>(std::lround(s / spacing));
            if (std::abs(s - j * spacing) > tol)
                continue;
            const auto it = missing.find(j);
            if (it == missing.end() || it->second)
                continue;
            const double expected = env_top > 0.0 ? gmax * envelope_at(p, s) / env_top : 0.0;
            if (I[i] < 0.5 * expected)
                continue;
            auto [pos, inserted] = principal.try_emplace(j, i);
            if (!inserted && I[i] > I[pos->second])
                pos->second = i;
        }
    }

    std::vector<bool> is_principal(I.size(), false);
    for (const auto &[j, i] : principal) {
        is_principal[i] = true;
        rep.principal_maxima.push_back({i, series.samples[i].beta, I[i], j});
    }
    for (std::size_t i : maxima)
        if (!is_principal[i])
            rep.secondary_maxima.push_back({i, series.samples[i].beta, I[i], std::nullopt});

    for (std::size_t k = 0; k + 1 < rep.principal_maxima.size(); ++k) {
        const Extremum &lo = rep.principal_maxima[k];
        const Extremum &hi = rep.principal_maxima[k + 1];
        if (*hi.order != *lo.order + 1)
            continue;
        GapCounts gc{*lo.order, *hi.order, 0, 0};
        for (const auto &e : rep.secondary_maxima)
            gc.secondary_maxima += e.index > lo.index && e.index < hi.index;
        for (const auto &e : rep.minima)
            gc.minima += e.index > lo.index && e.index < hi.index;
        rep.gaps.push_back(gc);
    }
    return rep;
}

std::vector<int> missing_orders(const PatternSeries &series, double threshold) {
    series.validate();
    if (series.params.slits < 2)
        throw ValidationError{"missing orders need at least 2 slits"};
    const auto flags = order_missing_flags(series, threshold);
    std::map<int, bool> by_abs; // |j| -> all in-range sides missing
    for (const auto &[j, miss] : flags) {
        if (j == 0)
            continue;
        auto [it, inserted] = by_abs.try_emplace(std::abs(j), miss);
        if (!inserted)
            it->second = it->second && miss;
    }
    if (by_abs.empty())
        throw ValidationError{"scan range covers no grating orders"};
    std::vector<int> out;
    for (const auto &[j, miss] : by_abs)
        if (miss)
            out.push_back(j);
    return out;
}

AgreementMetrics compare_patterns(const PatternSeries &quantum, const PatternSeries &classical) {
    quantum.validate();
    classical.validate();
    if (quantum.samples.size() != classical.samples.size())
        throw ValidationError{"pattern grids differ in size"};
    for (std::size_t i = 0; i < quantum.samples.size(); ++i) {
        const double a = quantum.samples[i].beta;
        const double b = classical.samples[i].beta;
        if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a)))
            throw ValidationError{"pattern grids differ"};
    }

    const double qmax = quantum.max_intensity();
    const double cmax = classical.max_intensity();
    double acc = 0.0;
    for (std::size_t i = 0; i < quantum.samples.size(); ++i) {
        const double q = qmax > 0.0 ? quantum.samples[i].intensity / qmax : 0.0;
        const double c = cmax > 0.0 ? classical.samples[i].intensity / cmax : 0.0;
        acc += (q - c) * (q - c);
    }
    AgreementMetrics m{};
    m.rms = std::sqrt(acc / quantum.samples.size());

    const ExtremaReport rq = find_extrema(quantum);
    const ExtremaReport rc = find_extrema(classical);
    std::map<int, std::size_t> cpos;
    for (const auto &e : rc.principal_maxima)
        cpos[*e.order] = e.index;
    m.max_peak_offset = 0;
    for (const auto &e : rq.principal_maxima) {
        const auto it = cpos.find(*e.order);
        if (it == cpos.end())
            continue;
        const long d = static_cast<long>(e.index) - static_cast<long>(it->second);
        m.max_peak_offset = std::max(m.max_peak_offset, static_cast<int>(std::abs(d)));
    }
    const auto nq = rq.secondary_maxima.size();
    const auto nc = rc.secondary_maxima.size();
    if (nc == 0)
        m.secondary_ratio = nq == 0 ? std::optional<double>{1.0} : std::nullopt;
    else
        m.secondary_ratio = static_cast<double>(nq) / static_cast<double>(nc);
    return m;
}

double integrated_intensity(const PatternSeries &series) {
    series.validate();
    double sum = 0.0;
    for (std::size_t i = 1; i < series.samples.size(); ++i) {
        const auto &a = series.samples[i - 1];
        const auto &b = series.samples[i];
        sum += 0.5 * (a.intensity + b.intensity) * (b.beta - a.beta);
    }
    return sum;
}

} // namespace slitwave::analysis

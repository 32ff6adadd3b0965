#include "slitwave/emit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace slitwave::cli {

using ojson = nlohmann::ordered_json;

std::string format_number(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 11);
    return std::string{buf, res.ptr};
}

namespace {

double scale_of(const std::optional<analysis::PatternSeries> &s, Normalization n) {
    if (!s || n == Normalization::none)
        return 1.0;
    const double m = s->max_intensity();
    return m > 0.0 ? 1.0 / m : 1.0;
}

// Number formatting is fixed here rather than left to the JSON library so that
// CSV and JSON agree digit for digit.
void dump(const ojson &j, std::string &out, int level) {
    const std::string pad(2 * (level + 1), ' ');
    const std::string close_pad(2 * level, ' ');
    switch (j.type()) {
    case ojson::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            out += pad + ojson(it.key()).dump() + ": ";
            dump(it.value(), out, level + 1);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case ojson::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        bool scalars = true;
        for (const auto &e : j)
            scalars = scalars && !e.is_structured();
        if (scalars) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i)
                    out += ", ";
                dump(j[i], out, level + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ",\n";
            out += pad;
            dump(j[i], out, level + 1);
        }
        out += "\n" + close_pad + "]";
        return;
    }
    case ojson::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_number(v) : "null";
        return;
    }
    default:
        out += j.dump();
    }
}

ojson extremum_list(const std::vector<analysis::Extremum> &v, double scale) {
    ojson arr = ojson::array();
    for (const auto &e : v) {
        ojson o;
        if (e.order)
            o["order"] = *e.order;
        o["beta"] = e.beta;
        o["intensity"] = e.intensity * scale;
        arr.push_back(std::move(o));
    }
    return arr;
}

ojson report_json(const ModelReport &r, double scale) {
    ojson o;
    o["principal_maxima"] = extremum_list(r.extrema.principal_maxima, scale);
    o["secondary_maxima"] = extremum_list(r.extrema.secondary_maxima, scale);
    o["minima"] = extremum_list(r.extrema.minima, scale);
    ojson gaps = ojson::array();
    for (const auto &g : r.extrema.gaps)
        gaps.push_back({{"from_order", g.from_order},
                        {"to_order", g.to_order},
                        {"secondary_maxima", g.secondary_maxima},
                        {"minima", g.minima}});
    o["gaps"] = std::move(gaps);
    const auto spg = r.extrema.secondary_maxima_per_gap();
    const auto mpg = r.extrema.minima_per_gap();
    o["secondary_maxima_per_gap"] = spg ? ojson(*spg) : ojson(nullptr);
    o["minima_per_gap"] = mpg ? ojson(*mpg) : ojson(nullptr);
    o["missing_orders"] = r.missing_orders ? ojson(*r.missing_orders) : ojson(nullptr);
    o["integrated_intensity"] = r.integrated_intensity * scale;
    return o;
}

ojson parameters_json(const RunResult &r) {
    const Scenario &s = r.scenario;
    const SlitGeometry &g = s.geometry;
    ojson geom;
    geom["width_m"] = g.width;
    geom["length_m"] = g.length.is_infinite() ? ojson("inf") : ojson(g.length.value());
    geom["thickness_m"] = g.thickness;
    geom["gap_m"] = g.gap;
    geom["pitch_m"] = g.pitch();
    geom["slits"] = g.slits;

    ojson scan;
    scan["distance_m"] = s.scan.distance;
    scan["alpha_rad"] = s.scan.alpha;
    scan["beta_min_rad"] = s.scan.beta_min;
    scan["beta_max_rad"] = s.scan.beta_max;
    scan["samples"] = s.scan.samples;
    scan["model"] = to_string(s.scan.models);

    ojson amp = ojson::array();
    for (const auto &c : s.amplitude.components)
        amp.push_back(ojson::array({c.real(), c.imag()}));

    ojson p;
    p["geometry"] = std::move(geom);
    p["wavelength_m"] = s.wavelength;
    p["scan"] = std::move(scan);
    p["truncation"] = {{"max_mode_index", s.truncation.max_mode_index},
                       {"tail_tolerance", s.truncation.tail_tolerance}};
    p["amplitude"] = std::move(amp);
    p["normalize"] = r.normalization == Normalization::peak ? "peak" : "none";
    return p;
}

const analysis::PatternSeries &grid_of(const RunResult &r) {
    if (r.quantum)
        return *r.quantum;
    if (r.classical)
        return *r.classical;
    throw std::logic_error{"run result holds no series"};
}

} // namespace

std::string emit_csv(const RunResult &r) {
    const auto &grid = grid_of(r);
    const double qs = scale_of(r.quantum, r.normalization);
    const double cs = scale_of(r.classical, r.normalization);
    std::string out = "beta_rad,sin_beta,screen_y_m";
    if (r.quantum)
        out += ",intensity_quantum";
    if (r.classical)
        out += ",intensity_classical";
    out += '\n';
    const double R = r.scenario.scan.distance;
    for (std::size_t i = 0; i < grid.samples.size(); ++i) {
        const auto &s = grid.samples[i];
        out += format_number(s.beta) + ',' + format_number(s.sin_beta) + ',' + format_number(R * std::tan(s.beta));
        if (r.quantum)
            out += ',' + format_number(r.quantum->samples[i].intensity * qs);
        if (r.classical)
            out += ',' + format_number(r.classical->samples[i].intensity * cs);
        out += '\n';
    }
    return out;
}

std::string emit_json(const RunResult &r) {
    const auto &grid = grid_of(r);
    const double qs = scale_of(r.quantum, r.normalization);
    const double cs = scale_of(r.classical, r.normalization);
    const double R = r.scenario.scan.distance;

    ojson root;
    root["scenario"] = r.scenario.name;
    root["description"] = r.scenario.description;
    root["parameters"] = parameters_json(r);
    root["modes_used"] = r.modes_used;

    ojson cols = ojson::array({"beta_rad", "sin_beta", "screen_y_m"});
    ojson beta = ojson::array(), sinb = ojson::array(), ys = ojson::array();
    for (const auto &s : grid.samples) {
        beta.push_back(s.beta);
        sinb.push_back(s.sin_beta);
        ys.push_back(R * std::tan(s.beta));
    }
    ojson series;
    series["beta_rad"] = std::move(beta);
    series["sin_beta"] = std::move(sinb);
    series["screen_y_m"] = std::move(ys);
    if (r.quantum) {
        cols.push_back("intensity_quantum");
        ojson v = ojson::array();
        for (const auto &s : r.quantum->samples)
            v.push_back(s.intensity * qs);
        series["intensity_quantum"] = std::move(v);
    }
    if (r.classical) {
        cols.push_back("intensity_classical");
        ojson v = ojson::array();
        for (const auto &s : r.classical->samples)
            v.push_back(s.intensity * cs);
        series["intensity_classical"] = std::move(v);
    }
    root["columns"] = std::move(cols);
    root["series"] = std::move(series);

    ojson an = ojson::object();
    if (r.quantum_report)
        an["quantum"] = report_json(*r.quantum_report, qs);
    if (r.classical_report)
        an["classical"] = report_json(*r.classical_report, cs);
    if (r.comparison) {
        an["comparison"] = {{"rms", r.comparison->rms},
                            {"max_peak_offset", r.comparison->max_peak_offset},
                            {"secondary_ratio", r.comparison->secondary_ratio
                                                    ? ojson(*r.comparison->secondary_ratio)
                                                    : ojson(nullptr)}};
    }
    root["analysis"] = std::move(an);

    std::string out;
    dump(root, out, 0);
    out += '\n';
    return out;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream f{path, std::ios::binary | std::ios::trunc};
    if (!f)
        throw std::runtime_error{"cannot open '" + path + "' for writing"};
    f << content;
    f.flush();
    if (!f)
        throw std::runtime_error{"failed writing '" + path + "'"};
}

} // namespace slitwave::cli

#include "slitwave/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "slitwave/kirchhoff.hpp"
#include "slitwave/parallel.hpp"

namespace slitwave::cli {

namespace {

SlitLength parse_length(const std::string &s) {
    if (s == "inf" || s == "infinite" || s == "INFINITE")
        return SlitLength::infinite();
    double v = 0.0;
    const auto *end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ValidationError{"malformed slit length '" + s + "'"};
    return SlitLength::finite(v);
}

ModelReport report_for(const analysis::PatternSeries &s) {
    ModelReport r;
    r.integrated_intensity = analysis::integrated_intensity(s);
    if (s.samples.size() >= 3)
        r.extrema = analysis::find_extrema(s);
    if (s.params.slits >= 2) {
        try {
            r.missing_orders = analysis::missing_orders(s);
        } catch (const ValidationError &) {
            // scan covers no orders
        }
    }
    return r;
}

} // namespace

unsigned thread_budget() {
    if (const char *env = std::getenv("SLITWAVE_THREADS")) {
        unsigned v = 0;
        const std::string s{env};
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec == std::errc{} && v > 0)
            return v;
    }
    return detail::default_thread_count();
}

RunResult execute(const Scenario &s, Normalization norm, unsigned threads) {
    const WaveSpec w = WaveSpec::from_wavelength(s.wavelength);
    const ValidatedGeometry vg = validate_geometry(s.geometry, w);
    s.scan.validate();
    s.truncation.validate();

    RunResult r;
    r.scenario = s;
    r.normalization = norm;
    const bool want_q = s.scan.models != ModelSelection::classical;
    const bool want_c = s.scan.models != ModelSelection::quantum;
    if (want_q) {
        r.quantum = analysis::scan_pattern(analysis::Model::quantum, vg, s.amplitude, s.scan, s.truncation, threads);
        r.quantum_report = report_for(*r.quantum);
        r.modes_used = FarFieldModel{vg, s.scan.alpha, s.scan.distance, s.truncation, threads}.modes_used();
    }
    if (want_c) {
        r.classical = analysis::scan_pattern(analysis::Model::classical, vg, s.amplitude, s.scan, s.truncation);
        r.classical_report = report_for(*r.classical);
    }
    if (want_q && want_c && r.quantum->samples.size() >= 3)
        r.comparison = analysis::compare_patterns(*r.quantum, *r.classical);
    return r;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"slitwave: diffraction of light through rectangular slits of finite width, length and thickness"};
    app.set_config("--config", "", "flat key=value file mirroring the flags; flags win");
    app.require_subcommand(1);
    auto *run_cmd = app.add_subcommand("run", "compute a pattern and write CSV or JSON");
    auto *list_cmd = app.add_subcommand("list", "list scenario presets");
    run_cmd->fallthrough();
    list_cmd->fallthrough();

    std::optional<std::string> scenario_name;
    std::optional<double> lambda, width, thickness, gap, alpha, beta_min, beta_max, distance, tail_tol;
    std::optional<std::string> length;
    std::optional<int> slits, samples, modes_max;
    std::string model_name, format = "csv", normalize = "none";
    std::optional<std::string> output;

    app.add_option("--scenario", scenario_name, "preset name (see `list`)");
    app.add_option("--lambda", lambda, "wavelength [m]");
    app.add_option("--slit-width", width, "slit width a [m]");
    app.add_option("--slit-length", length, "slit length b [m] or inf");
    app.add_option("--thickness", thickness, "slit thickness c' [m]");
    app.add_option("--gap", gap, "gap d between slits [m]");
    app.add_option("--slits", slits, "number of slits N");
    app.add_option("--alpha", alpha, "fixed angle alpha [rad]");
    app.add_option("--beta-min", beta_min, "scan start [rad]");
    app.add_option("--beta-max", beta_max, "scan end [rad]");
    app.add_option("--samples", samples, "number of beta samples");
    app.add_option("--distance", distance, "slit-to-screen distance R [m]");
    app.add_option("--modes-max", modes_max, "mode index cap");
    app.add_option("--tail-tol", tail_tol, "relative tail tolerance");
    app.add_option("--model", model_name, "quantum|classical|both")
        ->check(CLI::IsMember({"quantum", "classical", "both"}));
    app.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output, "output path (default stdout)");
    app.add_option("--normalize", normalize, "peak|none")->check(CLI::IsMember({"peak", "none"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    if (list_cmd->parsed()) {
        for (const auto &s : presets())
            out << s.name << "\t" << s.description << "\n";
        return 0;
    }

    try {
        Scenario s;
        if (scenario_name) {
            const auto found = find_preset(*scenario_name);
            if (!found) {
                err << "error: unknown scenario '" << *scenario_name << "'\n";
                return 2;
            }
            s = *found;
        } else {
            s = custom_base();
        }

        const auto note = [&](const char *flag, bool given) {
            if (given && scenario_name)
                err << "note: " << flag << " overrides scenario " << *scenario_name << "\n";
        };
        note("--lambda", lambda.has_value());
        note("--slit-width", width.has_value());
        note("--slit-length", length.has_value());
        note("--thickness", thickness.has_value());
        note("--gap", gap.has_value());
        note("--slits", slits.has_value());

        if (lambda) s.wavelength = *lambda;
        if (width) s.geometry.width = *width;
        if (length) s.geometry.length = parse_length(*length);
        if (thickness) s.geometry.thickness = *thickness;
        if (gap) s.geometry.gap = *gap;
        if (slits) s.geometry.slits = *slits;
        if (alpha) s.scan.alpha = *alpha;
        if (beta_min) s.scan.beta_min = *beta_min;
        if (beta_max) s.scan.beta_max = *beta_max;
        if (samples) s.scan.samples = *samples;
        if (distance) s.scan.distance = *distance;
        if (modes_max) s.truncation.max_mode_index = *modes_max;
        if (tail_tol) s.truncation.tail_tolerance = *tail_tol;
        if (!model_name.empty()) s.scan.models = model_selection_from_string(model_name);

        const Normalization norm = normalize == "peak" ? Normalization::peak : Normalization::none;
        const RunResult r = execute(s, norm, thread_budget());
        const std::string content = format == "json" ? emit_json(r) : emit_csv(r);
        if (output)
            write_file(*output, content);
        else
            out << content;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace slitwave::cli

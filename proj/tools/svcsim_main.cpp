// Command-line front end: scenario generation, simulation, stimulus
// optimization, and baseline-vs-optimized comparison.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "svcsim/errors.hpp"
#include "svcsim/io.hpp"
#include "svcsim/model.hpp"
#include "svcsim/optimize.hpp"
#include "svcsim/scenario.hpp"

namespace {

using namespace svcsim;

struct CommonArgs {
    std::string config_path;
    std::string input_path;
    std::string out_path;
    double sim_dt = 0.0;       // 0 = use config value
    std::int64_t seed = -1;    // <0 = use config value
    int budget = 0;            // 0 = use config value
};

RunConfig resolve_config(const CommonArgs& args) {
    RunConfig cfg = args.config_path.empty() ? RunConfig{} : load_config(args.config_path);
    if (args.sim_dt > 0.0) cfg.sim_dt = args.sim_dt;
    if (args.seed >= 0) cfg.optimizer.minimize.seed = static_cast<std::uint64_t>(args.seed);
    if (args.budget > 0) cfg.optimizer.minimize.max_evaluations = args.budget;
    return cfg;
}

MotionProfile resolve_profile(const CommonArgs& args, const RunConfig& cfg) {
    if (!args.input_path.empty()) return read_motion_csv(args.input_path);
    if (cfg.input) return read_motion_csv(*cfg.input);
    if (cfg.scenario) return sinusoid_profile(*cfg.scenario);
    throw ConfigError("no motion input: give -i/--input or a config scenario");
}

VisualStimulus resolve_stimulus(const std::string& spec) {
    if (spec == "zero") return VisualStimulus::zero();
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return VisualStimulus::coefficients(read_coefficients_json(spec));
    return VisualStimulus::trajectory(read_stimulus_csv(spec));
}

// Minimal line plot of MSI vs time.
void write_svg_plot(const SicknessTrace& trace, const std::string& path) {
    const double width = 800, height = 400, margin = 50;
    double t_max = trace.records.empty() ? 1.0 : trace.records.back().t;
    if (t_max <= 0.0) t_max = 1.0;
    double msi_max = 1.0;
    for (const auto& r : trace.records) msi_max = std::max(msi_max, r.msi);

    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 400\">\n"
        << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n"
        << "<line x1=\"50\" y1=\"350\" x2=\"750\" y2=\"350\" stroke=\"black\"/>\n"
        << "<line x1=\"50\" y1=\"50\" x2=\"50\" y2=\"350\" stroke=\"black\"/>\n"
        << "<text x=\"400\" y=\"390\" text-anchor=\"middle\">t [s] (0 .. "
        << format_double(t_max) << ")</text>\n"
        << "<text x=\"15\" y=\"200\" transform=\"rotate(-90 15 200)\" "
           "text-anchor=\"middle\">MSI [%] (0 .. "
        << format_double(msi_max) << ")</text>\n"
        << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    // Cap the polyline at ~2000 points.
    const std::size_t stride = std::max<std::size_t>(1, trace.records.size() / 2000);
    for (std::size_t i = 0; i < trace.records.size(); i += stride) {
        const auto& r = trace.records[i];
        double px = margin + (width - 2 * margin) * (r.t / t_max);
        double py = height - margin - (height - 2 * margin) * (r.msi / msi_max);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px, py);
        out << buf;
    }
    out << "\"/>\n</svg>\n";
    if (!out) throw IoError("write failed: " + path);
}

int cmd_generate(const CommonArgs& args, const std::optional<double>& A,
                 const std::optional<double>& f, const std::optional<double>& duration,
                 const std::optional<double>& dt) {
    RunConfig cfg = resolve_config(args);
    ScenarioSpec spec = cfg.scenario.value_or(ScenarioSpec{});
    if (A) spec.amplitude = *A;
    if (f) spec.f_hz = *f;
    if (duration) spec.duration = *duration;
    if (dt) spec.dt = *dt;
    try {
        spec.validate();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const std::string out = args.out_path.empty() ? cfg.output.value_or("motion.csv")
                                                  : args.out_path;
    write_motion_csv(sinusoid_profile(spec), out);
    std::cout << "wrote " << out << " (" << format_double(spec.duration) << " s at dt="
              << format_double(spec.dt) << ")\n";
    return 0;
}

int cmd_simulate(const CommonArgs& args, const std::string& stimulus_spec,
                 const std::string& svg_path, bool full_state) {
    RunConfig cfg = resolve_config(args);
    MotionProfile profile = resolve_profile(args, cfg);
    VisualStimulus stimulus = resolve_stimulus(stimulus_spec);
    SicknessTrace trace = simulate(profile, stimulus, cfg.params, cfg.sim_dt);

    const std::string out = args.out_path.empty() ? cfg.output.value_or("trace.csv")
                                                  : args.out_path;
    write_trace_csv(trace, out, full_state);
    if (!svg_path.empty()) write_svg_plot(trace, svg_path);
    std::printf("terminal MSI = %.3f %%\n", trace.terminal_msi());
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_optimize(const CommonArgs& args, const std::string& mode,
                 const std::optional<int>& n_terms, const std::optional<double>& knot_dt,
                 const std::optional<double>& bound) {
    RunConfig cfg = resolve_config(args);
    if (n_terms) cfg.optimizer.n_terms = *n_terms;
    if (knot_dt) cfg.optimizer.knot_dt = *knot_dt;
    if (bound) cfg.optimizer.bound = *bound;
    MotionProfile profile = resolve_profile(args, cfg);

    if (mode == "coeffs") {
        FitResult fit = fit_coefficients(profile, cfg.params, cfg.optimizer.n_terms,
                                         cfg.optimizer.minimize, cfg.sim_dt);
        const std::string out = args.out_path.empty() ? cfg.output.value_or("coeffs.json")
                                                      : args.out_path;
        write_coefficients_json(fit.coefficients, out);
        std::printf("terminal MSI: optimized = %.4f %%, baseline = %.4f %% (%d evaluations)\n",
                    fit.objective, fit.baseline_objective, fit.evaluations);
        std::cout << "wrote " << out << "\n";
        return 0;
    }
    if (mode == "trajectory") {
        TrajectoryFitResult res =
            optimize_trajectory(profile, cfg.params, cfg.optimizer.knot_dt,
                                cfg.optimizer.bound, cfg.optimizer.minimize, cfg.sim_dt);
        const std::string out = args.out_path.empty() ? cfg.output.value_or("stimulus.csv")
                                                      : args.out_path;
        write_stimulus_csv(res.trajectory, out);
        std::printf("sum MSI: optimized = %.4f, baseline = %.4f (%d evaluations)\n",
                    res.objective, res.baseline_objective, res.evaluations);
        std::cout << "wrote " << out << "\n";
        return 0;
    }
    std::cerr << "error: bad mode '" << mode << "' (coeffs|trajectory)\n";
    return 2;
}

int cmd_compare(const CommonArgs& args, const std::optional<int>& n_terms,
                std::string baseline_trace, std::string optimized_trace) {
    RunConfig cfg = resolve_config(args);
    if (n_terms) cfg.optimizer.n_terms = *n_terms;
    MotionProfile profile = resolve_profile(args, cfg);

    FitResult fit = fit_coefficients(profile, cfg.params, cfg.optimizer.n_terms,
                                     cfg.optimizer.minimize, cfg.sim_dt);

    SicknessTrace baseline = simulate(profile, VisualStimulus::zero(), cfg.params, cfg.sim_dt);
    SicknessTrace optimized =
        simulate(profile, VisualStimulus::coefficients(fit.coefficients), cfg.params, cfg.sim_dt);

    const std::string report_path =
        args.out_path.empty() ? cfg.output.value_or("report.json") : args.out_path;
    auto stem = [&](const char* suffix) {
        std::string s = report_path;
        auto dot = s.rfind('.');
        if (dot != std::string::npos) s.resize(dot);
        return s + suffix;
    };
    if (baseline_trace.empty()) baseline_trace = stem("_baseline.csv");
    if (optimized_trace.empty()) optimized_trace = stem("_optimized.csv");
    write_trace_csv(baseline, baseline_trace);
    write_trace_csv(optimized, optimized_trace);

    const double b = baseline.terminal_msi();
    const double o = optimized.terminal_msi();
    // 0/0 reported as 1.0: nothing to reduce when the baseline is already zero.
    const double ratio = (b == 0.0) ? 1.0 : o / b;

    nlohmann::ordered_json report;
    report["baseline_msi_T"] = b;
    report["optimized_msi_T"] = o;
    report["reduction_ratio"] = ratio;
    if (b == 0.0) report["note"] = "baseline MSI is zero; ratio reported as 1.0 by convention";
    std::ofstream out(report_path);
    if (!out) throw IoError("cannot open for writing: " + report_path);
    out << report.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + report_path);

    std::printf("reduction ratio = %.4f (baseline %.4f %% -> optimized %.4f %%)\n", ratio, b, o);
    std::cout << "wrote " << report_path << ", " << baseline_trace << ", " << optimized_trace
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motion sickness simulation and visual-stimulus optimization"};
    app.require_subcommand(1);

    CommonArgs args;
    std::optional<double> A, f, duration, dt, knot_dt, bound;
    std::optional<int> n_terms;
    std::string stimulus_spec = "zero";
    std::string svg_path, mode = "coeffs", baseline_trace, optimized_trace;
    bool full_state = false;

    auto add_common = [&](CLI::App* sub, bool with_input) {
        sub->add_option("--config", args.config_path, "Config JSON");
        sub->add_option("--seed", args.seed, "Optimizer seed");
        sub->add_option("--dt", args.sim_dt, "Simulation step [s]");
        sub->add_option("-o,--out", args.out_path, "Output path");
        if (with_input) sub->add_option("-i,--input", args.input_path, "Motion CSV");
    };

    auto* gen = app.add_subcommand("generate", "Write a fore-aft sinusoid motion CSV");
    gen->add_option("--config", args.config_path, "Config JSON");
    gen->add_option("-o,--out", args.out_path, "Output path");
    gen->add_option("--A", A, "Amplitude [m/s^2]");
    gen->add_option("--f", f, "Frequency [Hz]");
    gen->add_option("--duration", duration, "Duration [s]");
    gen->add_option("--dt", dt, "Sample interval [s]");

    auto* sim = app.add_subcommand("simulate", "Simulate a motion profile and write the trace");
    add_common(sim, true);
    sim->add_option("--stimulus", stimulus_spec,
                    "zero | coefficients JSON | trajectory CSV");
    sim->add_option("--svg", svg_path, "Also write an SVG plot of MSI vs time");
    sim->add_flag("--full-state", full_state, "Include full state columns in the trace");

    auto* opt = app.add_subcommand("optimize", "Fit a sickness-minimizing visual stimulus");
    add_common(opt, true);
    opt->add_option("--mode", mode, "coeffs | trajectory");
    opt->add_option("--n", n_terms, "Regression terms");
    opt->add_option("--budget", args.budget, "Objective evaluation budget");
    opt->add_option("--knot-dt", knot_dt, "Trajectory knot spacing [s]");
    opt->add_option("--bound", bound, "Trajectory amplitude bound [rad/s]");

    auto* cmp = app.add_subcommand("compare", "Fit, then compare zero vs optimized stimulus");
    add_common(cmp, true);
    cmp->add_option("--n", n_terms, "Regression terms");
    cmp->add_option("--budget", args.budget, "Objective evaluation budget");
    cmp->add_option("--trace-baseline", baseline_trace, "Baseline trace path");
    cmp->add_option("--trace-optimized", optimized_trace, "Optimized trace path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(args, A, f, duration, dt);
        if (sim->parsed()) return cmd_simulate(args, stimulus_spec, svg_path, full_state);
        if (opt->parsed()) return cmd_optimize(args, mode, n_terms, knot_dt, bound);
        if (cmp->parsed()) return cmd_compare(args, n_terms, baseline_trace, optimized_trace);
    } catch (const svcsim::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

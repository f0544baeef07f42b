#include "svcsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "svcsim/errors.hpp"

namespace svcsim {

using nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    return in;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_field(const std::string& s, long line_no, const std::string& col) {
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ParseError("malformed number in column " + col + ": '" + s + "'", line_no);
    if (!std::isfinite(v))
        throw ParseError("non-finite value in column " + col, line_no);
    return v;
}

// Parses rows of `width` numeric columns after an exact header. Verifies the
// time column forms a uniform grid and returns its spacing.
struct CsvTable {
    double dt = 0.0;
    std::vector<std::vector<double>> rows;  // excludes the time column
};

CsvTable read_numeric_csv(const std::string& path, const std::string& header) {
    auto in = open_in(path);
    std::string line;
    long line_no = 1;
    if (!std::getline(in, line)) throw ParseError("empty file: " + path, 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header)
        throw ParseError("bad header in " + path + ": expected '" + header + "'", 1);

    const auto cols = split_csv(header);
    CsvTable table;
    std::vector<double> times;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv(line);
        if (fields.size() != cols.size())
            throw ParseError("expected " + std::to_string(cols.size()) + " columns, got " +
                                 std::to_string(fields.size()),
                             line_no);
        std::vector<double> row;
        row.reserve(fields.size() - 1);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            double v = parse_field(fields[i], line_no, cols[i]);
            if (i == 0)
                times.push_back(v);
            else
                row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }

    if (times.size() < 2)
        throw ParseError("need at least 2 data rows in " + path,
                         static_cast<long>(times.size()) + 1);
    table.dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
    if (table.dt <= 0.0) throw ParseError("time column must be increasing in " + path, 2);
    for (std::size_t k = 0; k < times.size(); ++k) {
        double expected = times.front() + static_cast<double>(k) * table.dt;
        if (std::abs(times[k] - expected) > 1e-9)
            throw ParseError("non-uniform time grid in " + path, static_cast<long>(k) + 2);
    }
    return table;
}

void write_row(std::ofstream& out, double t, std::initializer_list<double> values) {
    out << format_double(t);
    for (double v : values) out << ',' << format_double(v);
    out << '\n';
}

}  // namespace

MotionProfile read_motion_csv(const std::string& path) {
    const CsvTable table = read_numeric_csv(path, "t,ax,ay,az,wx,wy,wz");
    MotionProfile p;
    p.dt = table.dt;
    p.accel.reserve(table.rows.size());
    p.ang_vel.reserve(table.rows.size());
    for (const auto& r : table.rows) {
        p.accel.push_back({r[0], r[1], r[2]});
        p.ang_vel.push_back({r[3], r[4], r[5]});
    }
    p.validate();
    return p;
}

void write_motion_csv(const MotionProfile& profile, const std::string& path) {
    profile.validate();
    auto out = open_out(path);
    out << "t,ax,ay,az,wx,wy,wz\n";
    for (std::size_t k = 0; k < profile.size(); ++k) {
        const Vec3& a = profile.accel[k];
        const Vec3& w = profile.ang_vel[k];
        write_row(out, static_cast<double>(k) * profile.dt, {a.x, a.y, a.z, w.x, w.y, w.z});
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_trace_csv(const SicknessTrace& trace, const std::string& path, bool full_state) {
    auto out = open_out(path);
    out << "t,msi,dv_norm,phi,wvis_x,wvis_y,wvis_z";
    if (full_state)
        out << ",xscc_x,xscc_y,xscc_z,vs_x,vs_y,vs_z,xscchat_x,xscchat_y,xscchat_z,"
               "vhat_x,vhat_y,vhat_z,m1,m2";
    out << '\n';
    for (const auto& r : trace.records) {
        out << format_double(r.t) << ',' << format_double(r.msi) << ','
            << format_double(r.d_v_norm) << ',' << format_double(r.phi) << ','
            << format_double(r.omega_vis.x) << ',' << format_double(r.omega_vis.y) << ','
            << format_double(r.omega_vis.z);
        if (full_state) {
            const ModelState& s = r.state;
            for (double v : {s.x_scc.x, s.x_scc.y, s.x_scc.z, s.v_s.x, s.v_s.y, s.v_s.z,
                             s.x_scc_hat.x, s.x_scc_hat.y, s.x_scc_hat.z, s.v_hat.x,
                             s.v_hat.y, s.v_hat.z, s.m1, s.m2})
                out << ',' << format_double(v);
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

SicknessTrace read_trace_csv(const std::string& path) {
    const CsvTable table = read_numeric_csv(path, "t,msi,dv_norm,phi,wvis_x,wvis_y,wvis_z");
    SicknessTrace trace;
    trace.dt = table.dt;
    trace.records.reserve(table.rows.size());
    double t = 0.0;
    for (const auto& r : table.rows) {
        TraceRecord rec;
        rec.t = t;
        rec.msi = r[0];
        rec.d_v_norm = r[1];
        rec.phi = r[2];
        rec.omega_vis = {r[3], r[4], r[5]};
        trace.records.push_back(rec);
        t += table.dt;
    }
    return trace;
}

void write_stimulus_csv(const StimulusTrajectory& traj, const std::string& path) {
    traj.validate();
    auto out = open_out(path);
    out << "t,wvis_x,wvis_y,wvis_z\n";
    for (std::size_t k = 0; k < traj.omega.size(); ++k) {
        const Vec3& w = traj.omega[k];
        write_row(out, static_cast<double>(k) * traj.dt, {w.x, w.y, w.z});
    }
    if (!out) throw IoError("write failed: " + path);
}

StimulusTrajectory read_stimulus_csv(const std::string& path) {
    const CsvTable table = read_numeric_csv(path, "t,wvis_x,wvis_y,wvis_z");
    StimulusTrajectory traj;
    traj.dt = table.dt;
    traj.omega.reserve(table.rows.size());
    for (const auto& r : table.rows) traj.omega.push_back({r[0], r[1], r[2]});
    traj.validate();
    return traj;
}

void write_coefficients_json(const RegressionCoefficients& coeffs, const std::string& path) {
    coeffs.validate();
    ordered_json j;
    j["n_terms"] = coeffs.n_terms();
    j["h"] = coeffs.h;
    j["axis"] = "pitch";
    auto out = open_out(path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

RegressionCoefficients read_coefficients_json(const std::string& path) {
    auto in = open_in(path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON in ") + path + ": " + e.what());
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "n_terms" && key != "h" && key != "axis")
            throw ParseError("unknown key in " + path + ": " + key);
    }
    if (!j.contains("h") || !j["h"].is_array())
        throw ParseError("missing coefficient array 'h' in " + path);
    RegressionCoefficients coeffs;
    coeffs.h = j["h"].get<std::vector<double>>();
    coeffs.validate();
    if (j.contains("n_terms") &&
        j["n_terms"].get<std::size_t>() != coeffs.n_terms())
        throw ParseError("n_terms does not match h length in " + path);
    if (j.contains("axis") && j["axis"].get<std::string>() != "pitch")
        throw ParseError("unsupported axis in " + path + " (only 'pitch')");
    return coeffs;
}

namespace {

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> known,
                         const std::string& scope) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok)
            throw ConfigError("unknown key: " + (scope.empty() ? key : scope + "." + key));
    }
}

double get_number(const ordered_json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError(std::string("key must be numeric: ") + key);
    return obj[key].get<double>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");

    reject_unknown_keys(j,
                        {"k_a", "k_omega", "k_omega_c", "k_v_c", "k_a_c", "k_omega_vis",
                         "tau_d", "tau_v", "hill_b", "hill_n", "tau_l", "tau_l_minutes",
                         "p_max", "gravity", "sim_dt", "scenario", "optimizer", "input",
                         "output"},
                        "");

    RunConfig cfg;
    ModelParams& p = cfg.params;
    p.k_a = get_number(j, "k_a", p.k_a);
    p.k_omega = get_number(j, "k_omega", p.k_omega);
    p.k_omega_c = get_number(j, "k_omega_c", p.k_omega_c);
    p.k_v_c = get_number(j, "k_v_c", p.k_v_c);
    p.k_a_c = get_number(j, "k_a_c", p.k_a_c);
    p.k_omega_vis = get_number(j, "k_omega_vis", p.k_omega_vis);
    p.tau_d = get_number(j, "tau_d", p.tau_d);
    p.tau_v = get_number(j, "tau_v", p.tau_v);
    p.hill_b = get_number(j, "hill_b", p.hill_b);
    p.hill_n = get_number(j, "hill_n", p.hill_n);
    if (j.contains("tau_l") && j.contains("tau_l_minutes"))
        throw ConfigError("tau_l and tau_l_minutes are mutually exclusive");
    p.tau_l = get_number(j, "tau_l", p.tau_l);
    if (j.contains("tau_l_minutes")) p.tau_l = 60.0 * get_number(j, "tau_l_minutes", 0.0);
    p.p_max = get_number(j, "p_max", p.p_max);
    p.gravity = get_number(j, "gravity", p.gravity);
    p.validate();

    cfg.sim_dt = get_number(j, "sim_dt", cfg.sim_dt);
    if (cfg.sim_dt <= 0.0) throw ConfigError("sim_dt must be > 0");

    if (j.contains("scenario")) {
        const auto& s = j["scenario"];
        if (!s.is_object()) throw ConfigError("scenario must be an object");
        reject_unknown_keys(s, {"A", "f_hz", "duration", "dt"}, "scenario");
        ScenarioSpec spec;
        spec.amplitude = get_number(s, "A", spec.amplitude);
        spec.f_hz = get_number(s, "f_hz", spec.f_hz);
        spec.duration = get_number(s, "duration", spec.duration);
        spec.dt = get_number(s, "dt", spec.dt);
        spec.validate();
        cfg.scenario = spec;
    }

    if (j.contains("optimizer")) {
        const auto& o = j["optimizer"];
        if (!o.is_object()) throw ConfigError("optimizer must be an object");
        reject_unknown_keys(o,
                            {"max_evaluations", "x_tolerance", "f_tolerance", "simplex_scale",
                             "restarts", "seed", "n_terms", "knot_dt", "bound"},
                            "optimizer");
        OptimizerConfig& opt = cfg.optimizer;
        opt.minimize.max_evaluations =
            static_cast<int>(get_number(o, "max_evaluations", opt.minimize.max_evaluations));
        opt.minimize.x_tolerance = get_number(o, "x_tolerance", opt.minimize.x_tolerance);
        opt.minimize.f_tolerance = get_number(o, "f_tolerance", opt.minimize.f_tolerance);
        opt.minimize.simplex_scale = get_number(o, "simplex_scale", opt.minimize.simplex_scale);
        opt.minimize.restarts = static_cast<int>(get_number(o, "restarts", opt.minimize.restarts));
        opt.minimize.seed =
            static_cast<std::uint64_t>(get_number(o, "seed", static_cast<double>(opt.minimize.seed)));
        opt.minimize.validate();
        opt.n_terms = static_cast<int>(get_number(o, "n_terms", opt.n_terms));
        if (opt.n_terms < 1) throw ConfigError("optimizer.n_terms must be >= 1");
        opt.knot_dt = get_number(o, "knot_dt", opt.knot_dt);
        if (opt.knot_dt <= 0.0) throw ConfigError("optimizer.knot_dt must be > 0");
        opt.bound = get_number(o, "bound", opt.bound);
        if (opt.bound < 0.0) throw ConfigError("optimizer.bound must be >= 0");
    }

    if (j.contains("input")) {
        cfg.input = j["input"].get<std::string>();
        if (!std::ifstream(*cfg.input))
            throw ConfigError("input file does not exist: " + *cfg.input);
    }
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();

    return cfg;
}

RunConfig load_config(const std::string& path) {
    auto in = open_in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

std::string dump_config(const RunConfig& cfg) {
    ordered_json j;
    const ModelParams& p = cfg.params;
    j["k_a"] = p.k_a;
    j["k_omega"] = p.k_omega;
    j["k_omega_c"] = p.k_omega_c;
    j["k_v_c"] = p.k_v_c;
    j["k_a_c"] = p.k_a_c;
    j["k_omega_vis"] = p.k_omega_vis;
    j["tau_d"] = p.tau_d;
    j["tau_v"] = p.tau_v;
    j["hill_b"] = p.hill_b;
    j["hill_n"] = p.hill_n;
    j["tau_l"] = p.tau_l;
    j["p_max"] = p.p_max;
    j["gravity"] = p.gravity;
    j["sim_dt"] = cfg.sim_dt;
    if (cfg.scenario) {
        j["scenario"] = {{"A", cfg.scenario->amplitude},
                         {"f_hz", cfg.scenario->f_hz},
                         {"duration", cfg.scenario->duration},
                         {"dt", cfg.scenario->dt}};
    }
    j["optimizer"] = {{"max_evaluations", cfg.optimizer.minimize.max_evaluations},
                      {"x_tolerance", cfg.optimizer.minimize.x_tolerance},
                      {"f_tolerance", cfg.optimizer.minimize.f_tolerance},
                      {"simplex_scale", cfg.optimizer.minimize.simplex_scale},
                      {"restarts", cfg.optimizer.minimize.restarts},
                      {"seed", cfg.optimizer.minimize.seed},
                      {"n_terms", cfg.optimizer.n_terms},
                      {"knot_dt", cfg.optimizer.knot_dt},
                      {"bound", cfg.optimizer.bound}};
    if (cfg.input) j["input"] = *cfg.input;
    if (cfg.output) j["output"] = *cfg.output;
    return j.dump(2) + "\n";
}

}  // namespace svcsim

#pragma once

#include <optional>
#include <string>

#include "svcsim/model.hpp"
#include "svcsim/params.hpp"
#include "svcsim/profile.hpp"
#include "svcsim/scenario.hpp"
#include "svcsim/simplex.hpp"
#include "svcsim/stimulus.hpp"

namespace svcsim {

struct OptimizerConfig {
    MinimizeConfig minimize;
    int n_terms = 10;
    double knot_dt = 0.5;  // [s]
    double bound = 2.0;    // [rad/s]
};

struct RunConfig {
    ModelParams params;
    double sim_dt = 0.01;
    std::optional<ScenarioSpec> scenario;
    std::optional<std::string> input;   // motion CSV path
    std::optional<std::string> output;  // artifact path
    OptimizerConfig optimizer;
};

// Motion CSV: header `t,ax,ay,az,wx,wy,wz`; s, m/s^2, rad/s.
MotionProfile read_motion_csv(const std::string& path);
void write_motion_csv(const MotionProfile& profile, const std::string& path);

// Trace CSV: header `t,msi,dv_norm,phi,wvis_x,wvis_y,wvis_z`, plus the full
// state columns when full_state is set.
void write_trace_csv(const SicknessTrace& trace, const std::string& path,
                     bool full_state = false);
SicknessTrace read_trace_csv(const std::string& path);

// Stimulus trajectory CSV: header `t,wvis_x,wvis_y,wvis_z`.
void write_stimulus_csv(const StimulusTrajectory& traj, const std::string& path);
StimulusTrajectory read_stimulus_csv(const std::string& path);

// Coefficients JSON: { "n_terms": N, "h": [h0 ... hN], "axis": "pitch" }.
void write_coefficients_json(const RegressionCoefficients& coeffs, const std::string& path);
RegressionCoefficients read_coefficients_json(const std::string& path);

// Config JSON merged over defaults; unknown keys rejected.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);
std::string dump_config(const RunConfig& config);

// Decimal formatting used by every writer: 15 significant digits.
std::string format_double(double v);

}  // namespace svcsim

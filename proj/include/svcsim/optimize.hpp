#pragma once

#include "svcsim/model.hpp"
#include "svcsim/simplex.hpp"
#include "svcsim/stimulus.hpp"

namespace svcsim {

struct FitResult {
    RegressionCoefficients coefficients;
    double objective = 0.0;           // terminal MSI with the fitted stimulus [%]
    double baseline_objective = 0.0;  // terminal MSI with zero stimulus [%]
    int evaluations = 0;
};

// Fits the regression coefficients minimizing terminal MSI on `profile`.
// The zero vector is the first candidate, so objective <= baseline_objective.
FitResult fit_coefficients(const MotionProfile& profile, const ModelParams& params,
                           int n_terms, const MinimizeConfig& config, double sim_dt);

struct TrajectoryFitResult {
    StimulusTrajectory trajectory;
    double objective = 0.0;           // sum of MSI over all steps with the stimulus
    double baseline_objective = 0.0;  // same sum with zero stimulus
    int evaluations = 0;
};

// Finite-horizon trajectory optimization: pitch values at knots every
// knot_dt, linearly interpolated, clamped to [-bound, bound], minimizing the
// per-step MSI sum.
TrajectoryFitResult optimize_trajectory(const MotionProfile& profile, const ModelParams& params,
                                        double knot_dt, double bound,
                                        const MinimizeConfig& config, double sim_dt);

}  // namespace svcsim

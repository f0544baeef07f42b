#include "svcsim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "svcsim/errors.hpp"

namespace svcsim {

FitResult fit_coefficients(const MotionProfile& profile, const ModelParams& params,
                           int n_terms, const MinimizeConfig& config, double sim_dt) {
    params.validate();
    profile.validate();
    config.validate();
    if (n_terms < 1) throw ValidationError("fit_coefficients: n_terms must be >= 1");

    auto objective = [&](const std::vector<double>& h) {
        RegressionCoefficients c{h};
        try {
            return simulate_summary(profile, VisualStimulus::coefficients(std::move(c)), params,
                                    sim_dt)
                .terminal_msi;
        } catch (const DivergenceError& e) {
            std::ostringstream msg;
            msg << e.what() << "; coefficients [";
            for (std::size_t i = 0; i < h.size(); ++i)
                msg << (i ? ", " : "") << h[i];
            msg << "]";
            throw DivergenceError(msg.str(), e.step());
        }
    };

    const std::vector<double> zero(static_cast<std::size_t>(n_terms) + 1, 0.0);
    const double baseline = objective(zero);

    MinimizeConfig cfg = config;
    cfg.max_evaluations = std::max(1, config.max_evaluations - 1);
    MinimizeResult res = simplex_minimize(objective, zero, cfg);

    FitResult fit;
    fit.baseline_objective = baseline;
    fit.evaluations = res.evaluations + 1;
    if (res.f <= baseline) {
        fit.coefficients.h = std::move(res.x);
        fit.objective = res.f;
    } else {
        fit.coefficients.h = zero;
        fit.objective = baseline;
    }
    return fit;
}

namespace {

StimulusTrajectory knots_to_trajectory(const std::vector<double>& knots, double knot_dt,
                                       double bound) {
    StimulusTrajectory traj;
    traj.dt = knot_dt;
    traj.omega.reserve(knots.size());
    for (double w : knots)
        traj.omega.push_back({0.0, std::clamp(w, -bound, bound), 0.0});
    return traj;
}

}  // namespace

TrajectoryFitResult optimize_trajectory(const MotionProfile& profile, const ModelParams& params,
                                        double knot_dt, double bound,
                                        const MinimizeConfig& config, double sim_dt) {
    params.validate();
    profile.validate();
    config.validate();
    if (bound < 0.0) throw ValidationError("optimize_trajectory: bound must be >= 0");
    if (knot_dt < sim_dt)
        throw ValidationError("optimize_trajectory: knot_dt must be >= sim_dt");

    // Knot grid covering the whole horizon; the last knot may extend past the
    // profile end when the duration is not a knot_dt multiple.
    const auto n_knots =
        static_cast<std::size_t>(std::ceil(profile.duration() / knot_dt - 1e-9)) + 1;

    const double baseline =
        simulate_summary(profile, VisualStimulus::zero(), params, sim_dt).msi_sum;

    TrajectoryFitResult out;
    out.baseline_objective = baseline;

    if (bound == 0.0) {
        out.trajectory = knots_to_trajectory(std::vector<double>(n_knots, 0.0), knot_dt, 0.0);
        out.objective = baseline;
        out.evaluations = 1;
        return out;
    }

    auto objective = [&](const std::vector<double>& knots) {
        auto stim = VisualStimulus::trajectory(knots_to_trajectory(knots, knot_dt, bound));
        return simulate_summary(profile, stim, params, sim_dt).msi_sum;
    };

    const std::vector<double> zero(n_knots, 0.0);
    MinimizeResult res = simplex_minimize(objective, zero, config);

    out.evaluations = res.evaluations + 1;
    if (res.f <= baseline) {
        out.trajectory = knots_to_trajectory(res.x, knot_dt, bound);
        out.objective = res.f;
    } else {
        out.trajectory = knots_to_trajectory(zero, knot_dt, bound);
        out.objective = baseline;
    }
    return out;
}

}  // namespace svcsim

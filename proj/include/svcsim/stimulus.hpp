#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "svcsim/profile.hpp"
#include "svcsim/vec3.hpp"

namespace svcsim {

// Coefficients of the arctangent-basis regression mapping longitudinal
// acceleration to a visual pitch rate:
//   w(a) = h[0] + sum_{i=1..N} h[i] * atan(a^i)
struct RegressionCoefficients {
    std::vector<double> h;  // length n_terms + 1

    std::size_t n_terms() const { return h.empty() ? 0 : h.size() - 1; }
    void validate() const;
};

double eval_regression(const RegressionCoefficients& coeffs, double a_x);

// Uniformly sampled visual angular-velocity time series.
struct StimulusTrajectory {
    double dt = 0.0;
    std::vector<Vec3> omega;  // [rad/s]

    double duration() const {
        return omega.empty() ? 0.0 : dt * static_cast<double>(omega.size() - 1);
    }
    void validate() const;
    Vec3 at(double t) const;  // clamped linear interpolation
};

// A visual stimulus is either a coefficient vector evaluated against the
// instantaneous longitudinal acceleration (pitch axis) or an explicit
// angular-velocity trajectory.
class VisualStimulus {
public:
    static VisualStimulus zero();
    static VisualStimulus coefficients(RegressionCoefficients c);
    static VisualStimulus trajectory(StimulusTrajectory t);

    bool is_coefficients() const {
        return std::holds_alternative<RegressionCoefficients>(form_);
    }
    const RegressionCoefficients& as_coefficients() const {
        return std::get<RegressionCoefficients>(form_);
    }
    const StimulusTrajectory& as_trajectory() const {
        return std::get<StimulusTrajectory>(form_);
    }

    // omega_vis at time t; a_x is the interpolated longitudinal acceleration
    // at the same instant (used by the coefficient form).
    Vec3 sample(double t, double a_x) const;

    // Throws CoverageError if a trajectory form ends before `duration`.
    void check_coverage(double duration) const;

private:
    std::variant<RegressionCoefficients, StimulusTrajectory> form_;
};

// Evaluates the regression on each profile sample, giving a pitch-only
// trajectory with the profile's grid.
StimulusTrajectory stimulus_from_profile(const RegressionCoefficients& coeffs,
                                         const MotionProfile& profile);

}  // namespace svcsim

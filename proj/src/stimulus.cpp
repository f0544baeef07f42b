#include "svcsim/stimulus.hpp"

#include <cmath>

#include "svcsim/errors.hpp"

namespace svcsim {

void RegressionCoefficients::validate() const {
    if (h.empty()) throw ValidationError("regression coefficients: empty vector");
    for (double c : h)
        if (!std::isfinite(c))
            throw ValidationError("regression coefficients: non-finite entry");
}

double eval_regression(const RegressionCoefficients& coeffs, double a_x) {
    double w = coeffs.h[0];
    double power = 1.0;
    for (std::size_t i = 1; i < coeffs.h.size(); ++i) {
        power *= a_x;
        w += coeffs.h[i] * std::atan(power);
    }
    return w;
}

void StimulusTrajectory::validate() const {
    if (dt <= 0.0) throw ValidationError("stimulus trajectory: dt must be > 0");
    if (omega.empty()) throw ValidationError("stimulus trajectory: empty");
    for (const Vec3& w : omega)
        if (!w.finite()) throw ValidationError("stimulus trajectory: non-finite entry");
}

Vec3 StimulusTrajectory::at(double t) const {
    if (t <= 0.0 || omega.size() == 1) return omega.front();
    double u = t / dt;
    auto i = static_cast<std::size_t>(u);
    if (i >= omega.size() - 1) return omega.back();
    double w = u - static_cast<double>(i);
    return omega[i] * (1.0 - w) + omega[i + 1] * w;
}

VisualStimulus VisualStimulus::zero() {
    RegressionCoefficients c;
    c.h = {0.0};
    return coefficients(std::move(c));
}

VisualStimulus VisualStimulus::coefficients(RegressionCoefficients c) {
    c.validate();
    VisualStimulus s;
    s.form_ = std::move(c);
    return s;
}

VisualStimulus VisualStimulus::trajectory(StimulusTrajectory t) {
    t.validate();
    VisualStimulus s;
    s.form_ = std::move(t);
    return s;
}

Vec3 VisualStimulus::sample(double t, double a_x) const {
    if (const auto* c = std::get_if<RegressionCoefficients>(&form_))
        return {0.0, eval_regression(*c, a_x), 0.0};
    return std::get<StimulusTrajectory>(form_).at(t);
}

void VisualStimulus::check_coverage(double duration) const {
    if (const auto* traj = std::get_if<StimulusTrajectory>(&form_)) {
        if (traj->duration() + 1e-9 < duration)
            throw CoverageError("stimulus trajectory covers " +
                                std::to_string(traj->duration()) + " s but the profile lasts " +
                                std::to_string(duration) + " s");
    }
}

StimulusTrajectory stimulus_from_profile(const RegressionCoefficients& coeffs,
                                         const MotionProfile& profile) {
    coeffs.validate();
    profile.validate();
    StimulusTrajectory traj;
    traj.dt = profile.dt;
    traj.omega.reserve(profile.size());
    for (const Vec3& a : profile.accel)
        traj.omega.push_back({0.0, eval_regression(coeffs, a.x), 0.0});
    return traj;
}

}  // namespace svcsim

#include "svcsim/scenario.hpp"

#include <cmath>
#include <numbers>

namespace svcsim {

MotionProfile sinusoid_profile(const ScenarioSpec& spec) {
    spec.validate();
    const auto n = static_cast<std::size_t>(std::floor(spec.duration / spec.dt + 1e-9)) + 1;
    MotionProfile p;
    p.dt = spec.dt;
    p.accel.reserve(n);
    p.ang_vel.assign(n, Vec3{});
    const double two_pi_f = 2.0 * std::numbers::pi * spec.f_hz;
    for (std::size_t k = 0; k < n; ++k) {
        double t = static_cast<double>(k) * spec.dt;
        p.accel.push_back({spec.amplitude * std::sin(two_pi_f * t), 0.0, 0.0});
    }
    return p;
}

}  // namespace svcsim

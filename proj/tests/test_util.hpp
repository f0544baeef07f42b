#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "svcsim/profile.hpp"

namespace svcsim::testutil {

// Band-limited fore-aft acceleration: a few random sinusoids in the
// 0.05..0.5 Hz band, rescaled so max |a_x| <= amp.
inline MotionProfile random_profile(std::uint64_t seed, double duration, double dt,
                                    double amp = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> freq(0.05, 0.5);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> weight(0.2, 1.0);

    struct Component {
        double f, ph, w;
    };
    Component comps[3];
    for (auto& c : comps) c = {freq(rng), phase(rng), weight(rng)};

    const auto n = static_cast<std::size_t>(std::floor(duration / dt + 1e-9)) + 1;
    MotionProfile p;
    p.dt = dt;
    p.accel.reserve(n);
    p.ang_vel.assign(n, Vec3{});
    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double t = static_cast<double>(k) * dt;
        double a = 0.0;
        for (const auto& c : comps)
            a += c.w * std::sin(2.0 * std::numbers::pi * c.f * t + c.ph);
        p.accel.push_back({a, 0.0, 0.0});
        peak = std::max(peak, std::abs(a));
    }
    if (peak > 0.0)
        for (auto& a : p.accel) a = a * (amp / peak);
    return p;
}

}  // namespace svcsim::testutil

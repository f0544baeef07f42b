#pragma once

#include <cstddef>
#include <vector>

#include "svcsim/errors.hpp"
#include "svcsim/vec3.hpp"

namespace svcsim {

// Uniformly sampled inertial acceleration and angular velocity in the head
// frame. Axes: x forward, y left, z up.
struct MotionProfile {
    double dt = 0.0;            // sample interval [s]
    std::vector<Vec3> accel;    // a(t) [m/s^2]
    std::vector<Vec3> ang_vel;  // omega(t) [rad/s]

    std::size_t size() const { return accel.size(); }
    double duration() const { return dt * static_cast<double>(accel.size() - 1); }

    void validate() const {
        if (dt <= 0.0) throw ValidationError("motion profile: dt must be > 0");
        if (accel.size() != ang_vel.size())
            throw ValidationError("motion profile: accel/ang_vel length mismatch");
        if (accel.size() < 2) throw ValidationError("motion profile: need at least 2 samples");
        for (std::size_t i = 0; i < accel.size(); ++i) {
            if (!accel[i].finite() || !ang_vel[i].finite())
                throw ValidationError("motion profile: non-finite sample at index " +
                                      std::to_string(i));
        }
    }

    // Linear interpolation, clamped at the ends.
    Vec3 accel_at(double t) const { return sample(accel, t); }
    Vec3 ang_vel_at(double t) const { return sample(ang_vel, t); }

private:
    Vec3 sample(const std::vector<Vec3>& s, double t) const {
        if (t <= 0.0) return s.front();
        double u = t / dt;
        auto i = static_cast<std::size_t>(u);
        if (i >= s.size() - 1) return s.back();
        double w = u - static_cast<double>(i);
        return s[i] * (1.0 - w) + s[i + 1] * w;
    }
};

}  // namespace svcsim

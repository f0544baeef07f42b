#pragma once

#include "svcsim/errors.hpp"
#include "svcsim/profile.hpp"

namespace svcsim {

// Fore-aft sinusoid a_x(t) = A sin(2 pi f t).
struct ScenarioSpec {
    double amplitude = 0.5;  // A [m/s^2]
    double f_hz = 0.25;      // [Hz]
    double duration = 1800.0;  // [s]
    double dt = 0.01;        // [s]

    void validate() const {
        if (amplitude <= 0.0) throw ValidationError("scenario: A must be > 0");
        if (f_hz <= 0.0) throw ValidationError("scenario: f_hz must be > 0");
        if (duration <= 0.0) throw ValidationError("scenario: duration must be > 0");
        if (dt <= 0.0) throw ValidationError("scenario: dt must be > 0");
        if (dt >= 0.5 / f_hz) throw ValidationError("scenario: dt must be < 1/(2*f_hz)");
    }
};

MotionProfile sinusoid_profile(const ScenarioSpec& spec);

}  // namespace svcsim

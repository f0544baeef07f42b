#pragma once

#include "svcsim/errors.hpp"

namespace svcsim {

// Gains, time constants, and output parameters of the vestibular-visual
// motion sickness model. Defaults are the published parameter set; tau_v,
// hill_n, and gravity are toolkit constants exposed so they can be re-fit.
struct ModelParams {
    double k_a = 0.1;          // efference-copy acceleration gain
    double k_omega = 0.8;      // efference-copy angular-velocity gain
    double k_omega_c = 10.0;   // angular-conflict feedback gain
    double k_v_c = 5.0;        // vertical-conflict feedback gain [1/s]
    double k_a_c = 1.0;        // acceleration-conflict feedback gain
    double k_omega_vis = 10.0; // visual angular-conflict feedback gain
    double tau_d = 7.0;        // SCC time constant [s]
    double tau_v = 2.0;        // vertical low-pass time constant [s]
    double hill_b = 0.5;       // Hill half-saturation conflict [m/s^2]
    double hill_n = 2.0;       // Hill exponent
    double tau_l = 720.0;      // MSI lag time constant [s]
    double p_max = 85.0;       // maximum MSI [%]
    double gravity = 9.81;     // gravitational acceleration [m/s^2]

    void validate() const {
        auto require = [](bool ok, const char* what) {
            if (!ok) throw ValidationError(std::string("invalid model parameter: ") + what);
        };
        require(tau_d > 0.0, "tau_d must be > 0");
        require(tau_v > 0.0, "tau_v must be > 0");
        require(tau_l > 0.0, "tau_l must be > 0");
        require(gravity > 0.0, "gravity must be > 0");
        require(hill_b > 0.0, "hill_b must be > 0");
        require(hill_n >= 1.0, "hill_n must be >= 1");
        require(p_max > 0.0 && p_max <= 100.0, "p_max must be in (0, 100]");
        require(k_a >= 0.0, "k_a must be >= 0");
        require(k_omega >= 0.0, "k_omega must be >= 0");
        require(k_omega_c >= 0.0, "k_omega_c must be >= 0");
        require(k_v_c >= 0.0, "k_v_c must be >= 0");
        require(k_a_c >= 0.0, "k_a_c must be >= 0");
        require(k_omega_vis >= 0.0, "k_omega_vis must be >= 0");
    }
};

}  // namespace svcsim

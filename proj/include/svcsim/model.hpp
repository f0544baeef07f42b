#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "svcsim/params.hpp"
#include "svcsim/profile.hpp"
#include "svcsim/stimulus.hpp"
#include "svcsim/vec3.hpp"

namespace svcsim {

// Full ODE state of the model: sensory and internal SCC filter states,
// sensed and internal verticals, and the two MSI lag states.
struct ModelState {
    Vec3 x_scc;      // sensory SCC filter state [rad/s]
    Vec3 v_s;        // sensed vertical [m/s^2]
    Vec3 x_scc_hat;  // internal SCC filter state [rad/s]
    Vec3 v_hat;      // internal vertical estimate [m/s^2]
    double m1 = 0.0; // first lag state
    double m2 = 0.0; // second lag state, MSI = p_max * m2

    bool finite() const {
        return x_scc.finite() && v_s.finite() && x_scc_hat.finite() && v_hat.finite() &&
               std::isfinite(m1) && std::isfinite(m2);
    }
};

inline ModelState operator+(const ModelState& a, const ModelState& b) {
    return {a.x_scc + b.x_scc, a.v_s + b.v_s,   a.x_scc_hat + b.x_scc_hat,
            a.v_hat + b.v_hat, a.m1 + b.m1,     a.m2 + b.m2};
}

inline ModelState operator*(const ModelState& a, double s) {
    return {a.x_scc * s, a.v_s * s, a.x_scc_hat * s, a.v_hat * s, a.m1 * s, a.m2 * s};
}

// Instantaneous signals of the conflict network, with both algebraic loops
// resolved in closed form.
struct AlgebraicSignals {
    Vec3 omega_s;      // SCC afferent [rad/s]
    Vec3 omega_hat;    // CNS angular-velocity estimate [rad/s]
    Vec3 omega_s_hat;  // internal SCC output [rad/s]
    Vec3 d_omega;      // angular conflict [rad/s]
    Vec3 d_omega_vis;  // visual angular conflict [rad/s]
    Vec3 d_a;          // acceleration conflict [m/s^2]
    Vec3 f_hat;        // internal GIA estimate [m/s^2]
    Vec3 d_v;          // vertical conflict [m/s^2]
    double phi = 0.0;  // Hill output in [0, 1)
};

// Saturating conflict nonlinearity h^n / (h^n + b^n).
double hill_saturation(double conflict_norm, double b, double n);

// Second-order lag realized as two cascaded first-order lags.
// Returns (dm1/dt, dm2/dt).
std::pair<double, double> lag_rates(double phi, double m1, double m2, double tau_l);

// Rest state: verticals aligned with gravity, everything else zero.
ModelState equilibrium_state(const ModelParams& params);

AlgebraicSignals algebraic_layer(const ModelState& state, const Vec3& a, const Vec3& omega,
                                 const Vec3& omega_vis, const ModelParams& params);

ModelState state_derivative(const ModelState& state, const Vec3& a, const Vec3& omega,
                            const Vec3& omega_vis, const ModelParams& params);

struct TraceRecord {
    double t = 0.0;        // [s]
    double msi = 0.0;      // [%]
    double d_v_norm = 0.0; // [m/s^2]
    double phi = 0.0;
    Vec3 omega_vis;        // applied stimulus [rad/s]
    ModelState state;
};

struct SicknessTrace {
    double dt = 0.0;
    std::vector<TraceRecord> records;

    double terminal_msi() const { return records.empty() ? 0.0 : records.back().msi; }
    double msi_sum() const {
        double s = 0.0;
        for (const auto& r : records) s += r.msi;
        return s;
    }
};

// Fixed-step RK4 integration over the profile duration, inputs linearly
// interpolated at substep times. The trace includes the initial state.
SicknessTrace simulate(const MotionProfile& profile, const VisualStimulus& stimulus,
                       const ModelParams& params, double sim_dt, const ModelState& initial);

SicknessTrace simulate(const MotionProfile& profile, const VisualStimulus& stimulus,
                       const ModelParams& params, double sim_dt);

// Terminal MSI and per-step MSI sum without storing the trace; same stepping
// code as simulate. Used by the optimizers, where traces would dominate cost.
struct SimSummary {
    double terminal_msi = 0.0;
    double msi_sum = 0.0;
    double max_msi = 0.0;
};

SimSummary simulate_summary(const MotionProfile& profile, const VisualStimulus& stimulus,
                            const ModelParams& params, double sim_dt);

}  // namespace svcsim

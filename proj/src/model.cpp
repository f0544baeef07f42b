#include "svcsim/model.hpp"

#include <cmath>
#include <tuple>

#include "svcsim/errors.hpp"

namespace svcsim {

double hill_saturation(double conflict_norm, double b, double n) {
    if (conflict_norm < 0.0) throw ValidationError("hill_saturation: negative conflict norm");
    if (b <= 0.0) throw ValidationError("hill_saturation: b must be > 0");
    if (n < 1.0) throw ValidationError("hill_saturation: n must be >= 1");
    if (conflict_norm == 0.0) return 0.0;
    // Evaluate as 1 / (1 + (b/h)^n) so large conflicts cannot overflow.
    double r = std::pow(b / conflict_norm, n);
    return 1.0 / (1.0 + r);
}

std::pair<double, double> lag_rates(double phi, double m1, double m2, double tau_l) {
    return {(phi - m1) / tau_l, (m1 - m2) / tau_l};
}

ModelState equilibrium_state(const ModelParams& params) {
    params.validate();
    ModelState s;
    s.v_s = {0.0, 0.0, params.gravity};
    s.v_hat = {0.0, 0.0, params.gravity};
    return s;
}

AlgebraicSignals algebraic_layer(const ModelState& state, const Vec3& a, const Vec3& omega,
                                 const Vec3& omega_vis, const ModelParams& params) {
    AlgebraicSignals sig;
    const Vec3 f = Vec3{0.0, 0.0, params.gravity} + a;

    sig.omega_s = omega - state.x_scc;

    // Angular loop: omega_hat = k_omega*omega + k_omega_c*d_omega
    //                           + k_omega_vis*d_omega_vis, solved for omega_hat.
    sig.omega_hat = (params.k_omega * omega +
                     params.k_omega_c * (sig.omega_s + state.x_scc_hat) +
                     params.k_omega_vis * omega_vis) /
                    (1.0 + params.k_omega_c + params.k_omega_vis);
    sig.omega_s_hat = sig.omega_hat - state.x_scc_hat;
    sig.d_omega = sig.omega_s - sig.omega_s_hat;
    sig.d_omega_vis = omega_vis - sig.omega_hat;

    // Acceleration loop: f_hat = v_hat + k_a*a + k_a_c*d_a with d_a = f - f_hat.
    sig.d_a = (f - state.v_hat - params.k_a * a) / (1.0 + params.k_a_c);
    sig.f_hat = state.v_hat + params.k_a * a + params.k_a_c * sig.d_a;

    sig.d_v = state.v_s - state.v_hat;
    sig.phi = hill_saturation(sig.d_v.norm(), params.hill_b, params.hill_n);
    return sig;
}

ModelState state_derivative(const ModelState& state, const Vec3& a, const Vec3& omega,
                            const Vec3& omega_vis, const ModelParams& params) {
    const AlgebraicSignals sig = algebraic_layer(state, a, omega, omega_vis, params);
    const Vec3 f = Vec3{0.0, 0.0, params.gravity} + a;

    ModelState d;
    d.x_scc = (omega - state.x_scc) / params.tau_d;
    d.v_s = (f - state.v_s) / params.tau_v - sig.omega_s.cross(state.v_s);
    d.x_scc_hat = (sig.omega_hat - state.x_scc_hat) / params.tau_d;
    d.v_hat = (sig.f_hat - state.v_hat) / params.tau_v - sig.omega_s_hat.cross(state.v_hat) +
              params.k_v_c * sig.d_v;
    std::tie(d.m1, d.m2) = lag_rates(sig.phi, state.m1, state.m2, params.tau_l);
    return d;
}

namespace {

// Shared RK4 loop. `trace` may be null (summary-only runs).
SimSummary integrate(const MotionProfile& profile, const VisualStimulus& stimulus,
                     const ModelParams& params, double sim_dt, const ModelState& initial,
                     SicknessTrace* trace) {
    params.validate();
    profile.validate();
    if (sim_dt <= 0.0) throw ValidationError("simulate: sim_dt must be > 0");
    if (sim_dt > profile.dt + 1e-12)
        throw ValidationError("simulate: sim_dt must not exceed the profile sample interval");
    if (!initial.finite()) throw ValidationError("simulate: non-finite initial state");
    stimulus.check_coverage(profile.duration());

    const double duration = profile.duration();
    const auto n_steps = static_cast<std::size_t>(std::floor(duration / sim_dt + 1e-9));

    auto deriv = [&](const ModelState& s, double t, const Vec3& wvis) {
        return state_derivative(s, profile.accel_at(t), profile.ang_vel_at(t), wvis, params);
    };
    auto record = [&](double t, const ModelState& s) {
        const double msi = params.p_max * s.m2;
        if (trace) {
            const Vec3 a = profile.accel_at(t);
            const Vec3 wvis = stimulus.sample(t, a.x);
            const AlgebraicSignals sig =
                algebraic_layer(s, a, profile.ang_vel_at(t), wvis, params);
            trace->records.push_back({t, msi, sig.d_v.norm(), sig.phi, wvis, s});
        }
        return msi;
    };

    if (trace) {
        trace->dt = sim_dt;
        trace->records.reserve(n_steps + 1);
    }

    SimSummary summary;
    ModelState y = initial;
    double msi = record(0.0, y);
    summary.msi_sum = msi;
    summary.max_msi = msi;

    for (std::size_t k = 0; k < n_steps; ++k) {
        const double t = static_cast<double>(k) * sim_dt;
        const double h = sim_dt;
        const Vec3 w0 = stimulus.sample(t, profile.accel_at(t).x);
        const Vec3 wh = stimulus.sample(t + h / 2, profile.accel_at(t + h / 2).x);
        const Vec3 w1 = stimulus.sample(t + h, profile.accel_at(t + h).x);

        const ModelState k1 = deriv(y, t, w0);
        const ModelState k2 = deriv(y + k1 * (h / 2), t + h / 2, wh);
        const ModelState k3 = deriv(y + k2 * (h / 2), t + h / 2, wh);
        const ModelState k4 = deriv(y + k3 * h, t + h, w1);
        y = y + (k1 + (k2 + k3) * 2.0 + k4) * (h / 6.0);

        if (!y.finite())
            throw DivergenceError("simulate: non-finite state", static_cast<long>(k + 1));

        msi = record(static_cast<double>(k + 1) * sim_dt, y);
        summary.msi_sum += msi;
        if (msi > summary.max_msi) summary.max_msi = msi;
    }
    summary.terminal_msi = msi;
    return summary;
}

}  // namespace

SicknessTrace simulate(const MotionProfile& profile, const VisualStimulus& stimulus,
                       const ModelParams& params, double sim_dt, const ModelState& initial) {
    SicknessTrace trace;
    integrate(profile, stimulus, params, sim_dt, initial, &trace);
    return trace;
}

SicknessTrace simulate(const MotionProfile& profile, const VisualStimulus& stimulus,
                       const ModelParams& params, double sim_dt) {
    return simulate(profile, stimulus, params, sim_dt, equilibrium_state(params));
}

SimSummary simulate_summary(const MotionProfile& profile, const VisualStimulus& stimulus,
                            const ModelParams& params, double sim_dt) {
    return integrate(profile, stimulus, params, sim_dt, equilibrium_state(params), nullptr);
}

}  // namespace svcsim

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "svcsim/errors.hpp"

namespace svcsim {

struct MinimizeConfig {
    int max_evaluations = 2000;
    double x_tolerance = 1e-8;
    double f_tolerance = 1e-10;
    double simplex_scale = 0.1;  // initial per-coordinate step
    int restarts = 2;            // seeded restarts after the x0 run
    std::uint64_t seed = 0;

    void validate() const {
        if (max_evaluations < 1) throw ValidationError("minimize: max_evaluations must be >= 1");
        if (x_tolerance <= 0.0) throw ValidationError("minimize: x_tolerance must be > 0");
        if (f_tolerance <= 0.0) throw ValidationError("minimize: f_tolerance must be > 0");
        if (simplex_scale <= 0.0) throw ValidationError("minimize: simplex_scale must be > 0");
        if (restarts < 0) throw ValidationError("minimize: restarts must be >= 0");
    }
};

struct MinimizeResult {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
    bool budget_exhausted = false;
};

using Objective = std::function<double(const std::vector<double>&)>;

// Downhill-simplex local minimization with deterministic seeded restarts.
// Never returns f greater than objective(x0).
MinimizeResult simplex_minimize(const Objective& objective, const std::vector<double>& x0,
                                const MinimizeConfig& config);

}  // namespace svcsim

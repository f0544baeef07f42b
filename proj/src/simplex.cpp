#include "svcsim/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace svcsim {

namespace {

struct Budget {
    const Objective& objective;
    int limit;
    int used = 0;

    double eval(const std::vector<double>& x) {
        ++used;
        return objective(x);
    }
    bool spent() const { return used >= limit; }
};

// One Nelder-Mead run from `start`. Standard coefficients
// (reflect 1, expand 2, contract 0.5, shrink 0.5).
void nelder_mead(Budget& budget, const std::vector<double>& start, double f_start,
                 const MinimizeConfig& cfg, std::vector<double>& best_x, double& best_f) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> fv(n + 1);
    fv[0] = f_start;
    for (std::size_t i = 0; i < n; ++i) {
        if (budget.spent()) break;
        pts[i + 1][i] += cfg.simplex_scale;
        fv[i + 1] = budget.eval(pts[i + 1]);
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    std::vector<double> centroid(n), trial(n);
    while (!budget.spent()) {
        sort_simplex();
        const std::size_t lo = order[0], hi = order[n];
        const std::size_t next_hi = order[n - 1];

        if (fv[lo] < best_f) {
            best_f = fv[lo];
            best_x = pts[lo];
        }

        // Convergence: simplex diameter and value spread below tolerance.
        double spread = std::abs(fv[hi] - fv[lo]);
        double diam = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            diam = std::max(diam, std::abs(pts[hi][i] - pts[lo][i]));
        if (spread < cfg.f_tolerance && diam < cfg.x_tolerance) break;

        for (std::size_t i = 0; i < n; ++i) {
            double c = 0.0;
            for (std::size_t j = 0; j <= n; ++j)
                if (j != hi) c += pts[j][i];
            centroid[i] = c / static_cast<double>(n);
        }

        auto along = [&](double coeff) {
            for (std::size_t i = 0; i < n; ++i)
                trial[i] = centroid[i] + coeff * (pts[hi][i] - centroid[i]);
            return budget.eval(trial);
        };

        double f_refl = along(-1.0);
        if (f_refl < fv[lo]) {
            std::vector<double> refl = trial;
            double f_exp = budget.spent() ? f_refl : along(-2.0);
            if (f_exp < f_refl) {
                pts[hi] = trial;
                fv[hi] = f_exp;
            } else {
                pts[hi] = std::move(refl);
                fv[hi] = f_refl;
            }
        } else if (f_refl < fv[next_hi]) {
            pts[hi] = trial;
            fv[hi] = f_refl;
        } else {
            double f_con = along(0.5);
            if (f_con < std::min(f_refl, fv[hi])) {
                pts[hi] = trial;
                fv[hi] = f_con;
            } else {
                // Shrink toward the best vertex.
                for (std::size_t j = 0; j <= n; ++j) {
                    if (j == lo) continue;
                    for (std::size_t i = 0; i < n; ++i)
                        pts[j][i] = pts[lo][i] + 0.5 * (pts[j][i] - pts[lo][i]);
                    if (budget.spent()) return;
                    fv[j] = budget.eval(pts[j]);
                }
            }
        }
    }

    sort_simplex();
    if (fv[order[0]] < best_f) {
        best_f = fv[order[0]];
        best_x = pts[order[0]];
    }
}

}  // namespace

MinimizeResult simplex_minimize(const Objective& objective, const std::vector<double>& x0,
                                const MinimizeConfig& config) {
    config.validate();
    if (x0.empty()) throw ValidationError("minimize: empty start point");

    Budget budget{objective, config.max_evaluations};
    double f0 = budget.eval(x0);
    if (!std::isfinite(f0)) throw ValidationError("minimize: objective not finite at x0");

    std::vector<double> best_x = x0;
    double best_f = f0;

    if (!budget.spent()) nelder_mead(budget, x0, f0, config, best_x, best_f);

    std::mt19937_64 rng(config.seed);
    std::normal_distribution<double> noise(0.0, config.simplex_scale);
    for (int r = 0; r < config.restarts && !budget.spent(); ++r) {
        std::vector<double> start = best_x;
        for (double& v : start) v += noise(rng);
        double fs = budget.eval(start);
        if (!std::isfinite(fs) || budget.spent()) continue;
        nelder_mead(budget, start, fs, config, best_x, best_f);
    }

    return {std::move(best_x), best_f, budget.used, budget.spent()};
}

}  // namespace svcsim

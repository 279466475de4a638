#ifndef STA_OPTIMIZER_HPP
#define STA_OPTIMIZER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sta/engine.hpp"
#include "sta/types.hpp"

namespace sta {

/// Tunable constants of the algorithm. Defaults are the standard settings.
struct StaParams {
    double alpha_max = 1.0;   // initial / reset value of the rotation factor
    double alpha_min = 1e-4;  // below this the rotation factor resets
    double beta = 1.0;        // translation factor
    double gamma = 1.0;       // expansion factor
    double delta = 1.0;       // axesion factor
    int se = 30;              // samples per operator phase
    double fc = 2.0;          // lessening coefficient of the alpha decay
    std::int64_t max_iter = 1000;

    /// Throws std::invalid_argument on an inconsistent setting.
    void validate() const;
};

/// Rotation factor for one loop cycle: the value the phases use now and the
/// value carried into the next iteration.
struct AlphaStep {
    double current;  // after the reset check
    double next;     // current / fc
};

/// One step of the periodic exponential decay: reset to alpha_max once alpha
/// has fallen below alpha_min, then divide by fc for the next cycle.
AlphaStep alpha_schedule(double alpha, const StaParams& params);

/// Everything recorded about one seeded run.
struct RunTrace {
    std::vector<double> per_iteration_best;   // best fitness after each iteration
    std::vector<double> per_iteration_alpha;  // rotation factor used per iteration
    StateVector final_best;
    double final_fitness = 0.0;
    std::int64_t evaluations = 0;  // objective calls, including the initial point
    std::uint64_t seed = 0;
    double wall_time_seconds = 0.0;
};

/// Runs the full loop: random (or given) initial point, then max_iter
/// iterations of expansion, rotation and axesion phases with the alpha
/// schedule applied per cycle. With max_iter = 0 the trace holds only the
/// initial point's fitness. Deterministic given (obj, dom, params, seed, x0),
/// wall time aside.
RunTrace sta_minimize(const Objective& obj, const BoundedDomain& dom,
                      const StaParams& params, std::uint64_t seed,
                      const std::optional<StateVector>& x0 = std::nullopt);

}  // namespace sta

#endif  // STA_OPTIMIZER_HPP

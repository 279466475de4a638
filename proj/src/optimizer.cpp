#include "sta/optimizer.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

namespace sta {

void StaParams::validate() const {
    if (!(alpha_min > 0.0) || !(alpha_min < alpha_max)) {
        throw std::invalid_argument("StaParams: need 0 < alpha_min < alpha_max");
    }
    if (!(beta > 0.0) || !(gamma > 0.0) || !(delta > 0.0)) {
        throw std::invalid_argument("StaParams: beta, gamma, delta must be positive");
    }
    if (se < 1) throw std::invalid_argument("StaParams: se must be >= 1");
    if (!(fc > 1.0)) throw std::invalid_argument("StaParams: fc must be > 1");
    if (max_iter < 0) throw std::invalid_argument("StaParams: max_iter must be >= 0");
}

AlphaStep alpha_schedule(double alpha, const StaParams& params) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha_schedule: alpha must be positive");
    const double current = alpha < params.alpha_min ? params.alpha_max : alpha;
    return {current, current / params.fc};
}

RunTrace sta_minimize(const Objective& obj, const BoundedDomain& dom,
                      const StaParams& params, std::uint64_t seed,
                      const std::optional<StateVector>& x0) {
    params.validate();
    if (dom.dimension() == 0) {
        throw std::invalid_argument("sta_minimize: empty domain");
    }
    if (x0 && x0->size() != dom.dimension()) {
        throw std::invalid_argument("sta_minimize: x0/domain dimension mismatch");
    }

    const auto t0 = std::chrono::steady_clock::now();

    std::int64_t evaluations = 0;
    const Objective counted = [&](const StateVector& x) {
        ++evaluations;
        return obj(x);
    };

    RandomSource rng(seed);
    StateVector start;
    if (x0) {
        start = project(*x0, dom);
    } else {
        Rng g = rng.slot_rng(rng.open_batch(), 0);
        start = draw_uniform_point(dom, g);
    }

    Incumbent inc;
    inc.f_best = sanitize_fitness(counted(start));
    inc.prev_best = start;
    inc.best = std::move(start);

    RunTrace trace;
    trace.seed = seed;
    if (params.max_iter == 0) {
        trace.per_iteration_best.push_back(inc.f_best);
    } else {
        trace.per_iteration_best.reserve(params.max_iter);
        trace.per_iteration_alpha.reserve(params.max_iter);
    }

    double alpha = params.alpha_max;
    for (std::int64_t k = 0; k < params.max_iter; ++k) {
        const AlphaStep step = alpha_schedule(alpha, params);
        inc = run_phase(std::move(inc),
                        {OperatorKind::expansion, params.gamma, params.beta, params.se},
                        dom, rng, counted);
        inc = run_phase(std::move(inc),
                        {OperatorKind::rotation, step.current, params.beta, params.se},
                        dom, rng, counted);
        inc = run_phase(std::move(inc),
                        {OperatorKind::axesion, params.delta, params.beta, params.se},
                        dom, rng, counted);
        alpha = step.next;
        trace.per_iteration_best.push_back(inc.f_best);
        trace.per_iteration_alpha.push_back(step.current);
    }

    trace.final_best = std::move(inc.best);
    trace.final_fitness = inc.f_best;
    trace.evaluations = evaluations;
    trace.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return trace;
}

}  // namespace sta

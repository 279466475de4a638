#include "sta/engine.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_batch_args(const Incumbent& inc, double factor, int se,
                      const BoundedDomain& dom, const char* who) {
    if (se < 1) throw std::invalid_argument(std::string(who) + ": se must be >= 1");
    if (!(factor > 0.0)) throw std::invalid_argument(std::string(who) + ": factor must be positive");
    if (inc.best.size() != dom.dimension()) {
        throw std::invalid_argument(std::string(who) + ": state/domain dimension mismatch");
    }
}

void push_candidate(SampleBatch& out, StateVector cand, const BoundedDomain& dom,
                    const Objective& obj) {
    project_in_place(cand, dom);
    const double f = sanitize_fitness(obj(cand));
    out.candidates.push_back(std::move(cand));
    out.fitness.push_back(f);
}

}  // namespace

double sanitize_fitness(double f) {
    return std::isfinite(f) ? f : kInf;
}

void draw_rotation(RotationMatrix& r, Rng& g) {
    for (double& e : r.entries) e = g.next_symmetric();
}

DiagonalGaussian draw_diagonal_gaussian(std::size_t n, Rng& g) {
    DiagonalGaussian d;
    d.diag.resize(n);
    for (double& v : d.diag) v = g.next_gaussian();
    return d;
}

AxesionMask draw_axesion_mask(std::size_t n, Rng& g) {
    AxesionMask m;
    m.axis = static_cast<std::size_t>(g.next_index(n));
    m.value = g.next_gaussian();
    return m;
}

StateVector draw_uniform_point(const BoundedDomain& dom, Rng& g) {
    StateVector x(dom.dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = dom.lower[i] + g.next_unit() * (dom.upper[i] - dom.lower[i]);
    }
    return x;
}

SampleBatch sample_rotation(const Incumbent& inc, double alpha, int se,
                            const BoundedDomain& dom, RandomSource& rng,
                            const Objective& obj) {
    check_batch_args(inc, alpha, se, dom, "sample_rotation");
    const std::uint64_t batch = rng.open_batch();
    SampleBatch out;
    out.candidates.reserve(se);
    out.fitness.reserve(se);
    const std::size_t n = inc.best.size();
    const double nrm = norm2(inc.best);
    if (nrm < kDegenerateNorm) {
        RotationMatrix r(n);
        for (int i = 0; i < se; ++i) {
            Rng g = rng.slot_rng(batch, static_cast<std::uint64_t>(i));
            draw_rotation(r, g);
            push_candidate(out, rotate(inc.best, alpha, r), dom, obj);
        }
        return out;
    }
    // Hot path: stream the matrix rows straight out of the generator instead
    // of materializing n*n entries per candidate. Draw order and arithmetic
    // are identical to draw_rotation + rotate, so results match bit for bit.
    const double* x = inc.best.data();
    const double scale = alpha / (static_cast<double>(n) * nrm);
    for (int i = 0; i < se; ++i) {
        Rng g = rng.slot_rng(batch, static_cast<std::uint64_t>(i));
        StateVector cand(n);
        for (std::size_t row = 0; row < n; ++row) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += g.next_symmetric() * x[j];
            cand[row] = x[row] + scale * acc;
        }
        push_candidate(out, std::move(cand), dom, obj);
    }
    return out;
}

SampleBatch sample_expansion(const Incumbent& inc, double gamma, int se,
                             const BoundedDomain& dom, RandomSource& rng,
                             const Objective& obj) {
    check_batch_args(inc, gamma, se, dom, "sample_expansion");
    const std::uint64_t batch = rng.open_batch();
    SampleBatch out;
    out.candidates.reserve(se);
    out.fitness.reserve(se);
    for (int i = 0; i < se; ++i) {
        Rng g = rng.slot_rng(batch, static_cast<std::uint64_t>(i));
        const DiagonalGaussian d = draw_diagonal_gaussian(inc.best.size(), g);
        push_candidate(out, expand(inc.best, gamma, d), dom, obj);
    }
    return out;
}

SampleBatch sample_axesion(const Incumbent& inc, double delta, int se,
                           const BoundedDomain& dom, RandomSource& rng,
                           const Objective& obj) {
    check_batch_args(inc, delta, se, dom, "sample_axesion");
    const std::uint64_t batch = rng.open_batch();
    SampleBatch out;
    out.candidates.reserve(se);
    out.fitness.reserve(se);
    for (int i = 0; i < se; ++i) {
        Rng g = rng.slot_rng(batch, static_cast<std::uint64_t>(i));
        const AxesionMask m = draw_axesion_mask(inc.best.size(), g);
        push_candidate(out, axesion(inc.best, delta, m), dom, obj);
    }
    return out;
}

SampleBatch sample_translation(const Incumbent& inc, double beta, int se,
                               const BoundedDomain& dom, RandomSource& rng,
                               const Objective& obj) {
    check_batch_args(inc, beta, se, dom, "sample_translation");
    if (inc.prev_best.size() != inc.best.size()) {
        throw std::invalid_argument("sample_translation: prev_best dimension mismatch");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < inc.best.size(); ++i) {
        const double d = inc.best[i] - inc.prev_best[i];
        sq += d * d;
    }
    if (!(std::sqrt(sq) > kDegenerateNorm)) {
        return {};  // coincident endpoints: caller bypasses translation
    }
    const std::uint64_t batch = rng.open_batch();
    SampleBatch out;
    out.candidates.reserve(se);
    out.fitness.reserve(se);
    for (int i = 0; i < se; ++i) {
        Rng g = rng.slot_rng(batch, static_cast<std::uint64_t>(i));
        const double r_t = g.next_unit();
        push_candidate(out, translate(inc.best, inc.prev_best, beta, r_t), dom, obj);
    }
    return out;
}

std::pair<std::size_t, double> select_best(const SampleBatch& batch) {
    if (batch.empty()) throw std::invalid_argument("select_best: empty batch");
    std::size_t best = 0;
    for (std::size_t i = 1; i < batch.fitness.size(); ++i) {
        if (batch.fitness[i] < batch.fitness[best]) best = i;
    }
    return {best, batch.fitness[best]};
}

Incumbent greedy_update(Incumbent inc, const StateVector& cand, double f_cand) {
    if (f_cand < inc.f_best) {
        inc.prev_best = std::move(inc.best);
        inc.best = cand;
        inc.f_best = f_cand;
    }
    return inc;
}

Incumbent run_phase(Incumbent inc, const PhaseParams& phase,
                    const BoundedDomain& dom, RandomSource& rng,
                    const Objective& obj) {
    SampleBatch batch;
    switch (phase.kind) {
        case OperatorKind::rotation:
            batch = sample_rotation(inc, phase.factor, phase.se, dom, rng, obj);
            break;
        case OperatorKind::expansion:
            batch = sample_expansion(inc, phase.factor, phase.se, dom, rng, obj);
            break;
        case OperatorKind::axesion:
            batch = sample_axesion(inc, phase.factor, phase.se, dom, rng, obj);
            break;
    }
    const auto [idx, f] = select_best(batch);
    if (!(f < inc.f_best)) return inc;  // no improvement: no translation

    inc = greedy_update(std::move(inc), batch.candidates[idx], f);
    const SampleBatch along = sample_translation(inc, phase.beta, phase.se, dom, rng, obj);
    if (!along.empty()) {
        const auto [tidx, tf] = select_best(along);
        inc = greedy_update(std::move(inc), along.candidates[tidx], tf);
    }
    return inc;
}

}  // namespace sta

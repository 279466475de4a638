#ifndef STA_ENGINE_HPP
#define STA_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sta/operators.hpp"
#include "sta/rng.hpp"
#include "sta/types.hpp"

namespace sta {

/// One neighborhood sample set: projected candidates and their fitness
/// values, index-aligned.
struct SampleBatch {
    std::vector<StateVector> candidates;
    std::vector<double> fitness;

    std::size_t size() const { return candidates.size(); }
    bool empty() const { return candidates.empty(); }
};

/// Incumbent best solution, its fitness, and its most recent distinct
/// predecessor (the anchor for translation steps).
struct Incumbent {
    StateVector best;
    double f_best = 0.0;
    StateVector prev_best;
};

enum class OperatorKind { rotation, expansion, axesion };

/// Maps NaN/Inf objective values to +infinity so a poisoned candidate simply
/// loses selection.
double sanitize_fitness(double f);

// Draw helpers. Each consumes values from `g` in a fixed order; replaying the
// same generator reproduces the exact coefficients a sampler used.
void draw_rotation(RotationMatrix& r, Rng& g);                  // row-major, [-1, 1)
DiagonalGaussian draw_diagonal_gaussian(std::size_t n, Rng& g); // n normals
AxesionMask draw_axesion_mask(std::size_t n, Rng& g);           // axis, then value
StateVector draw_uniform_point(const BoundedDomain& dom, Rng& g);

// Neighborhood samplers. Each opens one batch on `rng`, draws `se`
// independent coefficient sets (slot i uses rng.slot_rng(batch, i)), applies
// the operator to inc.best, projects into `dom`, and evaluates `obj` once per
// candidate.
SampleBatch sample_rotation(const Incumbent& inc, double alpha, int se,
                            const BoundedDomain& dom, RandomSource& rng,
                            const Objective& obj);
SampleBatch sample_expansion(const Incumbent& inc, double gamma, int se,
                             const BoundedDomain& dom, RandomSource& rng,
                             const Objective& obj);
SampleBatch sample_axesion(const Incumbent& inc, double delta, int se,
                           const BoundedDomain& dom, RandomSource& rng,
                           const Objective& obj);

/// Samples along the ray from inc.prev_best through inc.best, one r_t in
/// [0, 1) per candidate. Returns an empty batch (consuming no evaluations)
/// when the endpoints coincide, signalling the caller to skip translation.
SampleBatch sample_translation(const Incumbent& inc, double beta, int se,
                               const BoundedDomain& dom, RandomSource& rng,
                               const Objective& obj);

/// Index and fitness of the best candidate; ties break to the lowest index.
/// Throws on an empty batch.
std::pair<std::size_t, double> select_best(const SampleBatch& batch);

/// Greedy criterion: replace the incumbent only on strict improvement, in
/// which case the old best becomes prev_best.
Incumbent greedy_update(Incumbent inc, const StateVector& cand, double f_cand);

/// Parameters for one operator phase. `factor` is alpha, gamma or delta
/// depending on `kind`; `beta` drives the nested translation.
struct PhaseParams {
    OperatorKind kind;
    double factor;
    double beta;
    int se;
};

/// One sampling phase: draw se candidates with the operator, greedily accept
/// the best, and on improvement run a single translation batch from the old
/// best through the new one (accepting again only on further improvement).
/// Consumes exactly se evaluations, or 2*se when the operator batch improved
/// and the endpoints are distinct.
Incumbent run_phase(Incumbent inc, const PhaseParams& phase,
                    const BoundedDomain& dom, RandomSource& rng,
                    const Objective& obj);

}  // namespace sta

#endif  // STA_ENGINE_HPP

#ifndef STA_TYPES_HPP
#define STA_TYPES_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace sta {

/// A candidate solution: one real value per decision variable.
using StateVector = std::vector<double>;

/// Objective to minimize; must be defined on the search domain.
using Objective = std::function<double(const StateVector&)>;

/// Per-dimension box constraints. lower[i] < upper[i] for every i.
struct BoundedDomain {
    StateVector lower;
    StateVector upper;

    BoundedDomain() = default;
    BoundedDomain(StateVector lo, StateVector hi);

    /// Same [lo, hi] interval in every dimension.
    static BoundedDomain cube(std::size_t dim, double lo, double hi);

    std::size_t dimension() const { return lower.size(); }
    bool contains(const StateVector& x) const;
};

/// Euclidean norm.
double norm2(const StateVector& x);

/// Below this 2-norm a direction is treated as numerically degenerate.
inline constexpr double kDegenerateNorm = 1e-12;

}  // namespace sta

#endif  // STA_TYPES_HPP

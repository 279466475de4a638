#ifndef STA_OPERATORS_HPP
#define STA_OPERATORS_HPP

#include <cstddef>
#include <vector>

#include "sta/types.hpp"

namespace sta {

/// Coefficients of a rotation step: an n x n matrix with entries in [-1, 1],
/// stored row-major.
struct RotationMatrix {
    std::size_t n = 0;
    std::vector<double> entries;

    explicit RotationMatrix(std::size_t dim) : n(dim), entries(dim * dim, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    const double* row(std::size_t i) const { return entries.data() + i * n; }
};

/// Coefficients of an expansion step: the diagonal of an n x n matrix,
/// entries standard-normal.
struct DiagonalGaussian {
    std::vector<double> diag;
};

/// Coefficients of an axesion step: a diagonal matrix with a single nonzero
/// entry `value` (standard-normal) at position `axis`.
struct AxesionMask {
    std::size_t axis = 0;
    double value = 0.0;
};

/// x + alpha * (1 / (n * ||x||)) * R * x. Every displacement stays within a
/// ball of radius alpha around x. When ||x|| < kDegenerateNorm the formula is
/// singular; the step falls back to alpha/n times the first column of R so a
/// near-origin incumbent still yields a usable neighborhood.
StateVector rotate(const StateVector& x, double alpha, const RotationMatrix& r);

/// x_new + beta * r_t * (x_new - x_old) / ||x_new - x_old||: a step of length
/// at most beta along the most recent improvement direction. Throws when the
/// endpoints coincide (||diff|| <= kDegenerateNorm); callers must guard.
StateVector translate(const StateVector& x_new, const StateVector& x_old,
                      double beta, double r_t);

/// Coordinate-wise rescale: x_i * (1 + gamma * diag_i). Zero coordinates
/// remain zero.
StateVector expand(const StateVector& x, double gamma, const DiagonalGaussian& r);

/// Single-coordinate rescale: coordinate `axis` becomes x_j * (1 + delta *
/// value); all others are copied bit-identically.
StateVector axesion(const StateVector& x, double delta, const AxesionMask& r);

/// Coordinate-wise clamp into the box.
StateVector project(StateVector x, const BoundedDomain& dom);
void project_in_place(StateVector& x, const BoundedDomain& dom);

}  // namespace sta

#endif  // STA_OPERATORS_HPP

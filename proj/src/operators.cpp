#include "sta/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sta {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

StateVector rotate(const StateVector& x, double alpha, const RotationMatrix& r) {
    const std::size_t n = x.size();
    require(n >= 1, "rotate: empty state");
    require(alpha > 0.0, "rotate: alpha must be positive");
    require(r.n == n, "rotate: matrix dimension mismatch");

    StateVector y(n);
    const double nrm = norm2(x);
    if (nrm < kDegenerateNorm) {
        // Formula is singular near the origin; step along the first column
        // of R instead (norm <= alpha * sqrt(n) / n <= alpha).
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = x[i] + alpha * r.at(i, 0) / static_cast<double>(n);
        }
        return y;
    }
    const double scale = alpha / (static_cast<double>(n) * nrm);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = r.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
        y[i] = x[i] + scale * acc;
    }
    return y;
}

StateVector translate(const StateVector& x_new, const StateVector& x_old,
                      double beta, double r_t) {
    const std::size_t n = x_new.size();
    require(x_old.size() == n, "translate: state dimension mismatch");
    require(beta > 0.0, "translate: beta must be positive");
    require(r_t >= 0.0 && r_t <= 1.0, "translate: r_t must lie in [0, 1]");

    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x_new[i] - x_old[i];
        sq += d * d;
    }
    const double nrm = std::sqrt(sq);
    require(nrm > kDegenerateNorm, "translate: coincident states give no direction");

    const double step = beta * r_t / nrm;
    StateVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = x_new[i] + step * (x_new[i] - x_old[i]);
    }
    return y;
}

StateVector expand(const StateVector& x, double gamma, const DiagonalGaussian& r) {
    const std::size_t n = x.size();
    require(r.diag.size() == n, "expand: diagonal dimension mismatch");
    require(gamma > 0.0, "expand: gamma must be positive");

    StateVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = x[i] + gamma * r.diag[i] * x[i];
    }
    return y;
}

StateVector axesion(const StateVector& x, double delta, const AxesionMask& r) {
    require(delta > 0.0, "axesion: delta must be positive");
    require(r.axis < x.size(), "axesion: axis out of range");

    StateVector y = x;
    y[r.axis] = x[r.axis] + delta * r.value * x[r.axis];
    return y;
}

void project_in_place(StateVector& x, const BoundedDomain& dom) {
    require(x.size() == dom.dimension(), "project: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], dom.lower[i], dom.upper[i]);
    }
}

StateVector project(StateVector x, const BoundedDomain& dom) {
    project_in_place(x, dom);
    return x;
}

}  // namespace sta

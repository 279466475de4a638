#include "sta/types.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sta {

BoundedDomain::BoundedDomain(StateVector lo, StateVector hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size()) {
        throw std::invalid_argument("BoundedDomain: bound vectors differ in length");
    }
    if (lower.empty()) {
        throw std::invalid_argument("BoundedDomain: dimension must be >= 1");
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] < upper[i])) {
            throw std::invalid_argument("BoundedDomain: lower bound must be < upper bound");
        }
    }
}

BoundedDomain BoundedDomain::cube(std::size_t dim, double lo, double hi) {
    return BoundedDomain(StateVector(dim, lo), StateVector(dim, hi));
}

bool BoundedDomain::contains(const StateVector& x) const {
    if (x.size() != lower.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    }
    return true;
}

double norm2(const StateVector& x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return std::sqrt(acc);
}

}  // namespace sta

#ifndef STA_BENCHMARKS_HPP
#define STA_BENCHMARKS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sta/types.hpp"

namespace sta {

// The classic test objectives. All have optimal value 0.
double sphere(const StateVector& x);      // sum x_i^2
double rosenbrock(const StateVector& x);  // valley; optimum at (1,...,1); needs n >= 2
double rastrigin(const StateVector& x);
double griewank(const StateVector& x);
double ackley(const StateVector& x);

/// A named objective with its domain and known optimum.
struct BenchmarkSpec {
    std::string name;       // canonical id: "f1".."f5"
    std::string long_name;  // "sphere".."ackley"
    int dimension = 0;
    BoundedDomain domain;
    StateVector optimum;
    double optimal_value = 0.0;
    Objective objective;
};

/// Looks up a benchmark by id ("f1".."f5") or long name ("sphere".."ackley")
/// and instantiates it at the given dimension. Throws std::invalid_argument
/// for unknown names or unsupported dimensions.
BenchmarkSpec make_benchmark(const std::string& name, int dimension);

bool is_known_benchmark(const std::string& name);

/// Canonical (id, long_name) pairs in registry order f1..f5.
const std::vector<std::pair<std::string, std::string>>& benchmark_names();

}  // namespace sta

#endif  // STA_BENCHMARKS_HPP

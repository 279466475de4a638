#include "sta/benchmarks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sta {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Entry {
    const char* id;
    const char* long_name;
    double lo;
    double hi;
    double (*fn)(const StateVector&);
    int min_dim;
    double optimum_coord;
};

const Entry kRegistry[] = {
    {"f1", "sphere", -100.0, 100.0, &sphere, 1, 0.0},
    {"f2", "rosenbrock", -30.0, 30.0, &rosenbrock, 2, 1.0},
    {"f3", "rastrigin", -5.12, 5.12, &rastrigin, 1, 0.0},
    {"f4", "griewank", -600.0, 600.0, &griewank, 1, 0.0},
    {"f5", "ackley", -32.0, 32.0, &ackley, 1, 0.0},
};

const Entry* find(const std::string& name) {
    for (const Entry& e : kRegistry) {
        if (name == e.id || name == e.long_name) return &e;
    }
    return nullptr;
}

}  // namespace

double sphere(const StateVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double rosenbrock(const StateVector& x) {
    if (x.size() < 2) {
        throw std::invalid_argument("rosenbrock: needs at least 2 dimensions");
    }
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin(const StateVector& x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
    }
    return s;
}

double griewank(const StateVector& x) {
    double s = 0.0;
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

double ackley(const StateVector& x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(kTwoPi * v);
    }
    // grouped so the optimum evaluates to exactly zero
    return (20.0 - 20.0 * std::exp(-0.2 * std::sqrt(sq / n))) +
           (std::numbers::e - std::exp(cs / n));
}

BenchmarkSpec make_benchmark(const std::string& name, int dimension) {
    const Entry* e = find(name);
    if (e == nullptr) {
        throw std::invalid_argument("unknown benchmark function: " + name);
    }
    if (dimension < e->min_dim) {
        throw std::invalid_argument(std::string(e->id) + " (" + e->long_name +
                                    ") requires dimension >= " +
                                    std::to_string(e->min_dim));
    }
    BenchmarkSpec spec;
    spec.name = e->id;
    spec.long_name = e->long_name;
    spec.dimension = dimension;
    spec.domain = BoundedDomain::cube(static_cast<std::size_t>(dimension), e->lo, e->hi);
    spec.optimum = StateVector(static_cast<std::size_t>(dimension), e->optimum_coord);
    spec.optimal_value = 0.0;
    spec.objective = e->fn;
    return spec;
}

bool is_known_benchmark(const std::string& name) {
    return find(name) != nullptr;
}

const std::vector<std::pair<std::string, std::string>>& benchmark_names() {
    static const std::vector<std::pair<std::string, std::string>> names = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const Entry& e : kRegistry) out.emplace_back(e.id, e.long_name);
        return out;
    }();
    return names;
}

}  // namespace sta

#include "sta/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sta/benchmarks.hpp"

namespace sta {

namespace fs = std::filesystem;

namespace {

std::string sci3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

SummaryFormat parse_format(const std::string& s) {
    if (s == "csv") return SummaryFormat::csv;
    if (s == "markdown") return SummaryFormat::markdown;
    throw std::invalid_argument("unknown summary format: " + s + " (expected csv or markdown)");
}

std::filesystem::path summary_filename(SummaryFormat format) {
    return format == SummaryFormat::csv ? "summary.csv" : "summary.md";
}

}  // namespace

std::int64_t ExperimentConfig::resolved_max_iter() const {
    return max_iter > 0 ? max_iter : 10 * static_cast<std::int64_t>(dimension);
}

void ExperimentConfig::validate() const {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (max_iter < 0) throw std::invalid_argument("max_iter must be >= 0");
    if (!is_known_benchmark(function)) {
        throw std::invalid_argument("unknown benchmark function: " + function);
    }
}

double sample_mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("sample_mean: empty sample");
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double sample_stddev(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double s = 0.0;
    for (double x : v) {
        const double d = x - mean;
        s += d * d;
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::string format_roundtrip(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

int resolve_thread_count(int runs) {
    if (runs <= 1) return 1;
    long cap = 0;
    if (const char* env = std::getenv("STA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) cap = v;
    }
    if (cap == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        cap = hw > 0 ? static_cast<long>(hw) : 1;
    }
    return static_cast<int>(std::min<long>(cap, runs));
}

fs::path trace_filename(const std::string& function, int dimension) {
    return function + "_" + std::to_string(dimension) + "D_trace.csv";
}

std::vector<GridCell> table1_grid() {
    std::vector<GridCell> cells;
    for (const auto& [id, long_name] : benchmark_names()) {
        cells.push_back({id, 100, 1000});
        cells.push_back({id, 200, 2000});
        cells.push_back({id, 500, 5000});
    }
    return cells;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const BenchmarkSpec bench = make_benchmark(cfg.function, cfg.dimension);
    StaParams params = cfg.params;
    params.max_iter = cfg.resolved_max_iter();
    params.validate();

    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " +
                                 cfg.output_dir.string() + ": " + ec.message());
    }
    const fs::path trace_path = cfg.output_dir / trace_filename(bench.name, cfg.dimension);
    {
        // fail before any run starts if the directory is not writable
        std::ofstream probe(trace_path, std::ios::binary | std::ios::trunc);
        if (!probe) {
            throw std::runtime_error("output path not writable: " + trace_path.string());
        }
    }

    std::vector<RunTrace> traces(cfg.runs);
    const int workers = resolve_thread_count(cfg.runs);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (int k = next.fetch_add(1); k < cfg.runs; k = next.fetch_add(1)) {
                traces[k] = sta_minimize(bench.objective, bench.domain, params,
                                         cfg.base_seed + static_cast<std::uint64_t>(k));
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<double> finals, evals, times;
    finals.reserve(traces.size());
    for (const RunTrace& t : traces) {
        finals.push_back(t.final_fitness);
        evals.push_back(static_cast<double>(t.evaluations));
        times.push_back(t.wall_time_seconds);
    }

    SummaryRow row;
    row.function = bench.name;
    row.dimension = cfg.dimension;
    row.mean_final = sample_mean(finals);
    row.std_final = sample_stddev(finals, row.mean_final);
    row.best_final = *std::min_element(finals.begin(), finals.end());
    row.worst_final = *std::max_element(finals.begin(), finals.end());
    row.mean_evaluations = sample_mean(evals);
    row.mean_wall_time_s = sample_mean(times);

    emit_trace_csv(traces, trace_path);
    return {row, traces};
}

void emit_trace_csv(const std::vector<RunTrace>& traces, const fs::path& path) {
    if (traces.empty()) {
        throw std::invalid_argument("emit_trace_csv: need at least one trace");
    }
    const std::size_t len = traces.front().per_iteration_best.size();
    for (const RunTrace& t : traces) {
        if (t.per_iteration_best.size() != len) {
            throw std::invalid_argument("emit_trace_csv: traces differ in length");
        }
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string());

    out << "iteration,mean_best";
    for (std::size_t k = 0; k < traces.size(); ++k) out << ",run_" << k;
    out << '\n';
    for (std::size_t i = 0; i < len; ++i) {
        double sum = 0.0;
        for (const RunTrace& t : traces) sum += t.per_iteration_best[i];
        out << i << ',' << format_roundtrip(sum / static_cast<double>(traces.size()));
        for (const RunTrace& t : traces) {
            out << ',' << format_roundtrip(t.per_iteration_best[i]);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_summary(const std::vector<SummaryRow>& rows, const fs::path& path,
                  SummaryFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string());

    if (format == SummaryFormat::csv) {
        out << "function,dimension,mean_final,std_final,best_final,worst_final,"
               "mean_evaluations,mean_wall_time_s\n";
        for (const SummaryRow& r : rows) {
            out << r.function << ',' << r.dimension << ','
                << format_roundtrip(r.mean_final) << ','
                << format_roundtrip(r.std_final) << ','
                << format_roundtrip(r.best_final) << ','
                << format_roundtrip(r.worst_final) << ','
                << format_roundtrip(r.mean_evaluations) << ','
                << format_roundtrip(r.mean_wall_time_s) << '\n';
        }
    } else {
        out << "| function | dim | final (mean \xC2\xB1 std) | best | worst "
               "| mean evals | mean time (s) |\n";
        out << "|---|---|---|---|---|---|---|\n";
        for (const SummaryRow& r : rows) {
            char evals[32], wall[32];
            std::snprintf(evals, sizeof evals, "%.0f", r.mean_evaluations);
            std::snprintf(wall, sizeof wall, "%.3f", r.mean_wall_time_s);
            out << "| " << r.function << " | " << r.dimension << " | "
                << sci3(r.mean_final) << " \xC2\xB1 " << sci3(r.std_final)
                << " | " << sci3(r.best_final) << " | " << sci3(r.worst_final)
                << " | " << evals << " | " << wall << " |\n";
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

ExperimentConfig load_config_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path.string());

    nlohmann::json j;
    ExperimentConfig cfg;
    try {
        in >> j;
        for (const auto& [key, value] : j.items()) {
            if (key == "function") {
                cfg.function = value.get<std::string>();
            } else if (key == "dimension") {
                cfg.dimension = value.get<int>();
            } else if (key == "runs") {
                cfg.runs = value.get<int>();
            } else if (key == "max_iter") {
                cfg.max_iter = value.get<std::int64_t>();
            } else if (key == "base_seed") {
                cfg.base_seed = value.get<std::uint64_t>();
            } else if (key == "output_dir") {
                cfg.output_dir = value.get<std::string>();
            } else if (key == "format") {
                cfg.format = parse_format(value.get<std::string>());
            } else if (key == "params") {
                for (const auto& [pkey, pvalue] : value.items()) {
                    if (pkey == "alpha_max") cfg.params.alpha_max = pvalue.get<double>();
                    else if (pkey == "alpha_min") cfg.params.alpha_min = pvalue.get<double>();
                    else if (pkey == "beta") cfg.params.beta = pvalue.get<double>();
                    else if (pkey == "gamma") cfg.params.gamma = pvalue.get<double>();
                    else if (pkey == "delta") cfg.params.delta = pvalue.get<double>();
                    else if (pkey == "se") cfg.params.se = pvalue.get<int>();
                    else if (pkey == "fc") cfg.params.fc = pvalue.get<double>();
                    else throw std::invalid_argument("unknown config key: params." + pkey);
                }
            } else {
                throw std::invalid_argument("unknown config key: " + key);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file " + path.string() + ": " + e.what());
    }
    return cfg;
}

void print_run_summary(const SummaryRow& r) {
    std::cout << r.function << " " << r.dimension << "D: final " << sci3(r.mean_final)
              << " \xC2\xB1 " << sci3(r.std_final) << " (best " << sci3(r.best_final)
              << ", worst " << sci3(r.worst_final) << "), mean evals "
              << static_cast<long long>(r.mean_evaluations) << ", mean time "
              << sci3(r.mean_wall_time_s) << " s\n";
}

int command_list() {
    for (const auto& [id, long_name] : benchmark_names()) {
        std::cout << id << "  " << long_name << '\n';
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Continuous state transition algorithm benchmark harness"};
    app.require_subcommand(1);

    // run
    ExperimentConfig defaults;
    std::string function;
    int dimension = defaults.dimension;
    std::int64_t max_iter = 0;
    int runs = defaults.runs;
    std::uint64_t seed = 0;
    StaParams p;
    std::string out_dir = defaults.output_dir.string();
    std::string format_str = "csv";
    std::string config_path;

    CLI::App* run = app.add_subcommand("run", "Run one (function, dimension) experiment");
    run->add_option("--function", function, "Benchmark id (f1..f5) or name (sphere..ackley)");
    run->add_option("--dim", dimension, "Problem dimension")->check(CLI::PositiveNumber);
    run->add_option("--max-iter", max_iter, "Outer iterations (default 10*dim)");
    run->add_option("--runs", runs, "Independent runs")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Base seed; run k uses seed+k");
    run->add_option("--se", p.se, "Samples per operator phase");
    run->add_option("--alpha-max", p.alpha_max, "Rotation factor maximum");
    run->add_option("--alpha-min", p.alpha_min, "Rotation factor reset threshold");
    run->add_option("--beta", p.beta, "Translation factor");
    run->add_option("--gamma", p.gamma, "Expansion factor");
    run->add_option("--delta", p.delta, "Axesion factor");
    run->add_option("--fc", p.fc, "Lessening coefficient of the alpha decay");
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--format", format_str, "Summary format: csv or markdown");
    run->add_option("--config", config_path, "JSON config file; flags override its values");

    // table1
    std::uint64_t t1_seed = 0;
    std::string t1_out = "results";
    std::string t1_format = "csv";
    int t1_runs = 10;
    CLI::App* table1 = app.add_subcommand(
        "table1", "Run the full grid: f1..f5 at 100/200/500D (1e3/2e3/5e3 iterations)");
    table1->add_option("--seed", t1_seed, "Base seed per cell; run k uses seed+k");
    table1->add_option("--out", t1_out, "Output directory");
    table1->add_option("--format", t1_format, "Summary format: csv or markdown");
    table1->add_option("--runs", t1_runs, "Runs per cell")->check(CLI::PositiveNumber);

    CLI::App* list = app.add_subcommand("list", "List registered benchmark functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            return command_list();
        }
        if (run->parsed()) {
            ExperimentConfig cfg;
            if (!config_path.empty()) cfg = load_config_file(config_path);
            if (run->count("--function")) cfg.function = function;
            if (run->count("--dim")) cfg.dimension = dimension;
            if (run->count("--max-iter")) cfg.max_iter = max_iter;
            if (run->count("--runs")) cfg.runs = runs;
            if (run->count("--seed")) cfg.base_seed = seed;
            if (run->count("--se")) cfg.params.se = p.se;
            if (run->count("--alpha-max")) cfg.params.alpha_max = p.alpha_max;
            if (run->count("--alpha-min")) cfg.params.alpha_min = p.alpha_min;
            if (run->count("--beta")) cfg.params.beta = p.beta;
            if (run->count("--gamma")) cfg.params.gamma = p.gamma;
            if (run->count("--delta")) cfg.params.delta = p.delta;
            if (run->count("--fc")) cfg.params.fc = p.fc;
            if (run->count("--out")) cfg.output_dir = out_dir;
            if (run->count("--format")) cfg.format = parse_format(format_str);
            if (cfg.function.empty()) {
                std::cerr << "error: --function is required (see `list`)\n";
                return 2;
            }

            const ExperimentResult res = run_experiment(cfg);
            emit_summary({res.summary}, cfg.output_dir / summary_filename(cfg.format),
                         cfg.format);
            print_run_summary(res.summary);
            return 0;
        }
        if (table1->parsed()) {
            const SummaryFormat fmt = parse_format(t1_format);
            std::vector<SummaryRow> rows;
            for (const GridCell& cell : table1_grid()) {
                ExperimentConfig cfg;
                cfg.function = cell.function;
                cfg.dimension = cell.dimension;
                cfg.max_iter = cell.max_iter;
                cfg.runs = t1_runs;
                cfg.base_seed = t1_seed;
                cfg.output_dir = t1_out;
                cfg.format = fmt;
                std::cout << cell.function << " " << cell.dimension << "D, "
                          << cell.max_iter << " iterations x " << t1_runs
                          << " runs... " << std::flush;
                const ExperimentResult res = run_experiment(cfg);
                std::cout << "final " << sci3(res.summary.mean_final) << " \xC2\xB1 "
                          << sci3(res.summary.std_final) << '\n';
                rows.push_back(res.summary);
            }
            emit_summary(rows, fs::path(t1_out) / summary_filename(fmt), fmt);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace sta

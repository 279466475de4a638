#ifndef STA_HARNESS_HPP
#define STA_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "sta/optimizer.hpp"

namespace sta {

enum class SummaryFormat { csv, markdown };

/// One (function, dimension) experiment: `runs` independent seeded runs.
struct ExperimentConfig {
    std::string function;
    int dimension = 100;
    int runs = 10;
    std::int64_t max_iter = 0;  // 0 -> 10 * dimension
    std::uint64_t base_seed = 0;
    StaParams params;  // max_iter inside is ignored; see resolved_max_iter()
    std::filesystem::path output_dir = "out";
    SummaryFormat format = SummaryFormat::csv;

    std::int64_t resolved_max_iter() const;
    void validate() const;  // throws std::invalid_argument
};

/// Aggregate of one experiment's final fitness values (sample std, n-1).
struct SummaryRow {
    std::string function;
    int dimension = 0;
    double mean_final = 0.0;
    double std_final = 0.0;
    double best_final = 0.0;
    double worst_final = 0.0;
    double mean_evaluations = 0.0;
    double mean_wall_time_s = 0.0;
};

struct ExperimentResult {
    SummaryRow summary;
    std::vector<RunTrace> traces;
};

/// Runs the experiment (run k seeded with base_seed + k, in parallel up to
/// the STA_THREADS cap) and writes the per-iteration trace CSV into
/// output_dir. The output directory is created and checked before any run
/// starts.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Trace file name used by run_experiment: "<id>_<dim>D_trace.csv".
std::filesystem::path trace_filename(const std::string& function, int dimension);

/// Writes `iteration,mean_best,run_0..run_{k-1}` rows, one per iteration,
/// every value in round-trip precision. All traces must have equal length.
void emit_trace_csv(const std::vector<RunTrace>& traces,
                    const std::filesystem::path& path);

/// Writes one row per (function, dimension). csv: raw SummaryRow columns;
/// markdown: a table with "mean +/- std" cells at 3 significant digits.
void emit_summary(const std::vector<SummaryRow>& rows,
                  const std::filesystem::path& path, SummaryFormat format);

double sample_mean(const std::vector<double>& v);
double sample_stddev(const std::vector<double>& v, double mean);  // 0 when n < 2

/// Shortest decimal form that round-trips to the same double.
std::string format_roundtrip(double v);

/// Number of worker threads for `runs` parallel runs, honoring STA_THREADS
/// (0 or unset means auto).
int resolve_thread_count(int runs);

/// One cell of the full benchmark grid.
struct GridCell {
    std::string function;
    int dimension;
    std::int64_t max_iter;
};

/// The table1 grid: f1..f5, each at 100/200/500 dimensions paired with
/// 1e3/2e3/5e3 iterations.
std::vector<GridCell> table1_grid();

/// Entry point behind the CLI binary: subcommands run, table1, list.
/// Returns 0 on success, 2 on usage/configuration errors, 1 on I/O failure.
int cli_main(int argc, const char* const* argv);

}  // namespace sta

#endif  // STA_HARNESS_HPP

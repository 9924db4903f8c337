#pragma once

// Experiment configuration, seeded run batteries, size sweeps and CSV
// reporting.
//
// Config files are INI-style:
//
//   [problem]   kind, n, order, overlap, seed, k, side, clause_ratio,
//               instance, fixture
//   [noise]     size_percent, level (number, "random-mean" or "midpoint"),
//               modulus, seed
//   [optimizer] name, ffe_limit, pair_budget
//   [run]       seeds, seed_list, base_seed, output, px_share
//   [sweep]     sizes, threshold
//
// `section.key=value` overrides are applied on top of the file.

#include "pxom/noise.hpp"
#include "pxom/optimizers.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace pxom {

struct ExperimentConfig {
    // problem
    std::string kind = "trap-concat";
    std::size_t n = 50;
    std::size_t order = 5;
    std::size_t overlap = 0;
    std::uint64_t instance_seed = 1;
    std::size_t nk_k = 4;
    double clause_ratio = 4.27;
    std::string instance_path;
    std::string fixture;

    // noise
    double noise_percent = 0.0;
    std::string noise_level = "random-mean";
    unsigned noise_modulus = 2;
    std::uint64_t noise_seed = 1;

    // optimizer
    std::string optimizer = "p3";
    std::uint64_t ffe_limit = 1'000'000;
    std::size_t pair_budget = 0;

    // run
    std::size_t seed_count = 30;
    std::vector<std::uint64_t> seed_list;
    std::uint64_t base_seed = 1;
    std::string output;
    bool px_share = true;

    // sweep
    std::vector<std::size_t> sweep_sizes;
    double threshold = 0.8;

    std::vector<std::uint64_t> seeds() const;

    static ExperimentConfig load(const std::filesystem::path& path);
    static ExperimentConfig parse(std::istream& in);
    /// Applies one `section.key=value` override.
    void apply(std::string_view assignment);
    /// Round-trips through parse().
    void write(std::ostream& out) const;
};

/// Builds the instance described by `config`, wrapped in noise when
/// noise_percent > 0. `size` replaces config.n for sweeps.
std::shared_ptr<const Problem> make_problem(const ExperimentConfig& config, std::optional<std::size_t> size = {});

struct RunRecord {
    std::string problem;
    std::size_t n = 0;
    std::string optimizer;
    double noise_percent = 0.0;
    std::uint64_t seed = 0;
    bool success = false;
    std::optional<std::uint64_t> ffe_at_success;
    std::uint64_t ffe_used = 0;
    double best_fitness = 0.0;
    /// Percentage of evaluated mixing masks whose exchanged genes form a PX
    /// mask; absent when the problem has no known interaction graph.
    std::optional<double> px_share;
    std::uint64_t masks = 0;
    /// Not written to CSV.
    double wall_seconds = 0.0;
};

/// Share of PX masks among mask applications.
class PxShareCounter {
public:
    explicit PxShareCounter(Vig vig) : vig_(std::move(vig)) {}

    void observe(const MaskApplication& application);
    std::uint64_t total() const { return total_; }
    std::uint64_t px() const { return px_; }
    /// Percentage, or nothing when no mask was observed.
    std::optional<double> share() const;

private:
    Vig vig_;
    std::uint64_t total_ = 0;
    std::uint64_t px_ = 0;
};

/// Genes a mask actually changes: positions inside it where donor and
/// source differ.
Mask exchanged_genes(const MaskApplication& application);

RunRecord run_single(const Problem& problem, const ExperimentConfig& config, std::uint64_t seed);

/// One record per seed, in seed order. Runs are spread over
/// worker_count() threads.
std::vector<RunRecord> run(const ExperimentConfig& config);
std::vector<RunRecord> run(const ExperimentConfig& config, const Problem& problem);

/// PXOM_WORKERS, else the hardware concurrency.
std::size_t worker_count();

void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& in);

struct SizeResult {
    std::size_t n = 0;
    double success_rate = 0.0;
    std::optional<double> median_ffe;
    std::vector<RunRecord> records;
};

struct SweepReport {
    std::vector<SizeResult> sizes;
    /// Largest size whose success rate reaches the threshold.
    std::optional<std::size_t> largest_passing;
};

SweepReport sweep(const ExperimentConfig& config, const std::vector<std::size_t>& sizes, double threshold = 0.8);

/// Median of the values; nothing for an empty input.
std::optional<double> median(std::vector<double> values);

/// Per (problem, n, optimizer, noise) rows: runs, success %, median FFE at
/// success, median PX share.
void summarize(std::ostream& out, const std::vector<RunRecord>& records);
/// Per (problem, optimizer, noise) rows: largest n with success >= threshold.
void summarize_scalability(std::ostream& out, const std::vector<RunRecord>& records, double threshold = 0.8);

} // namespace pxom

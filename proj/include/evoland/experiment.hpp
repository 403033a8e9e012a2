#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evoland/config.hpp"
#include "evoland/landscape.hpp"
#include "evoland/walks.hpp"

namespace evoland {

/// Raised before any computation when the output directory is not writable.
class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ProblemKind { MaxSat, Dimacs, Constant, Popcount };

struct SweepPoint {
    std::size_t num_vars = 0;
    std::size_t num_clauses = 0;

    friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct ExperimentConfig {
    ProblemKind problem = ProblemKind::MaxSat;
    /// Points of the sweep. For constant/popcount a single point (N, 0); for
    /// dimacs the point is taken from the file.
    std::vector<SweepPoint> sweep;
    std::size_t literals_per_clause = 3;
    std::string dimacs_path;
    std::size_t instances_per_point = 30;
    /// walk.seed is ignored; per-instance seeds are derived from master_seed.
    WalkConfig walk;
    std::size_t max_lag = 20;
    std::size_t neutral_degree_samples = 10000;
    std::filesystem::path output_dir = "results";
    std::uint64_t master_seed = 1;
    unsigned threads = 1;
    /// Adds a "# generated <UTC time>" line to each CSV.
    bool timestamp = true;

    /// Throws ConfigError on an empty sweep, zero counts or bad walk settings.
    void validate() const;
};

/// Keys accepted by experiment_config_from:
///   problem = maxsat | dimacs | constant | popcount
///   sweep = N:m1,m2,...        (repeatable; also accepts n + m lists)
///   n, m, k, dimacs, instances, walk_length, num_walks, min_usable_length,
///   max_lag, neutral_degree_samples, output_dir, master_seed (or seed),
///   threads, timestamp
ExperimentConfig experiment_config_from(const KeyValueConfig& kv);

/// Parses "16:39,59,64" into (16,39) (16,59) (16,64).
std::vector<SweepPoint> parse_sweep(const std::string& text);

/// instance seed = mix_seed(master, N, m, instance index).
std::uint64_t instance_seed(std::uint64_t master_seed, const SweepPoint& point,
                            std::size_t instance);
/// Walk batch seed of an instance; walk i then uses walk_seed(batch, i).
std::uint64_t walk_batch_seed(std::uint64_t instance_seed);
/// Stream for neutral-degree sampling of an instance.
std::uint64_t degree_seed(std::uint64_t instance_seed);

/// One instance of one sweep point.
struct ResultRow {
    std::size_t num_vars = 0;
    std::size_t num_clauses = 0;
    double alpha = 0.0;
    std::uint64_t instance_seed = 0;
    double mean_neutral_degree = 0.0;
    std::optional<double> rho_1;
    std::optional<double> tau;
    std::size_t num_walks_used = 0;
    std::size_t num_walks_discarded = 0;
    std::optional<double> tau_per_walk_mean;
    /// Averaged rho(k), k = 0..max_lag; empty when no walk was usable.
    std::vector<double> rho;
};

/// Aggregate over the instances of one sweep point.
struct PointSummary {
    SweepPoint point;
    double alpha = 0.0;
    std::size_t instances = 0;
    /// Instances with at least one usable walk.
    std::size_t instances_used = 0;
    double mean_neutral_degree = 0.0;
    /// Mean over used instances of their averaged rho(k).
    std::vector<double> rho;
    /// correlation_length(rho[1]) when defined.
    std::optional<double> tau;
    /// Mean of the per-instance tau values that are defined.
    std::optional<double> tau_instance_mean;
    std::size_t num_walks_used = 0;
    std::size_t num_walks_discarded = 0;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::vector<PointSummary> points;
    std::vector<std::string> warnings;
};

/// Builds the landscape of one instance.
std::unique_ptr<Landscape> make_instance(const ExperimentConfig& config, const SweepPoint& point,
                                         std::uint64_t seed);

/// Runs the sweep in memory. Deterministic in (config, master_seed) for any
/// thread count.
ExperimentResult compute_experiment(const ExperimentConfig& config);

/// Checks output_dir is writable (creating it), runs compute_experiment, then
/// writes instances.csv, summary.csv and lags.csv. Throws OutputError before
/// computing anything if the directory cannot be written.
ExperimentResult run_experiment(const ExperimentConfig& config);

void ensure_writable_directory(const std::filesystem::path& dir);

inline constexpr const char* kCsvSchemaVersion = "evoland-csv v1";

std::string instances_csv(const ExperimentResult& result, const ExperimentConfig& config);
std::string summary_csv(const ExperimentResult& result, const ExperimentConfig& config);
std::string lags_csv(const ExperimentResult& result, const ExperimentConfig& config);

/// Shortest round-trip decimal form, or "NA".
std::string format_number(std::optional<double> value);

}  // namespace evoland

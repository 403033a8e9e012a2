#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "evoland/landscape.hpp"
#include "evoland/rng.hpp"
#include "evoland/walks.hpp"

namespace evoland::stats {

/// Zero-variance series: the autocorrelation is undefined.
class DegenerateSeriesError : public std::domain_error {
public:
    DegenerateSeriesError() : std::domain_error("degenerate series: zero variance") {}
};

/// rho(1) outside (0, 1): no finite positive correlation length.
class UndefinedCorrelationLengthError : public std::domain_error {
public:
    explicit UndefinedCorrelationLengthError(double rho1);
    double rho1() const noexcept { return rho1_; }

private:
    double rho1_;
};

class NoUsableSeriesError : public std::runtime_error {
public:
    NoUsableSeriesError(std::size_t discarded, std::size_t degenerate);
    std::size_t discarded() const noexcept { return discarded_; }
    std::size_t degenerate() const noexcept { return degenerate_; }

private:
    std::size_t discarded_;
    std::size_t degenerate_;
};

/// Sample autocorrelation for lags 0..max_lag:
///
///   r(k) = sum_{t=0}^{L-1-k} (y_t - m)(y_{t+k} - m) / sum_{t=0}^{L-1} (y_t - m)^2
///
/// with m the whole-series mean. r(0) = 1 and |r(k)| <= 1.
/// Throws std::invalid_argument if L < 2 or max_lag >= L, and
/// DegenerateSeriesError for a constant series.
std::vector<double> autocorrelation(std::span<const double> series, std::size_t max_lag);

/// tau = -1 / ln(rho1). Throws UndefinedCorrelationLengthError unless 0 < rho1 < 1.
double correlation_length(double rho1);

struct AutocorrReport {
    /// Per-lag unweighted mean of per-series r(k), k = 0..max_lag.
    std::vector<double> rho;
    /// correlation_length(rho[1]) when rho[1] lies in (0, 1).
    std::optional<double> tau;
    std::size_t num_series_used = 0;
    /// Short plus degenerate series.
    std::size_t num_series_discarded = 0;
    /// The degenerate (constant) part of num_series_discarded.
    std::size_t num_series_degenerate = 0;
    /// Observations across the used series.
    std::size_t total_observations = 0;

    /// Alternative summary: mean of per-series tau, over the used series
    /// whose own r(1) lies in (0, 1).
    std::optional<double> tau_per_series_mean;
    std::size_t num_series_with_tau = 0;
};

/// Averages per-trace autocorrelations. A trace is used when it has at least
/// max(min_usable_length, max_lag + 1) observations and nonzero variance.
/// Throws NoUsableSeriesError when no trace qualifies.
AutocorrReport average_autocorrelation(std::span<const WalkTrace> traces, std::size_t max_lag,
                                       std::size_t min_usable_length);

struct NeutralDegreeSummary {
    double mean = 0.0;
    /// Population variance (divides by the sample count).
    double variance = 0.0;
    /// histogram[d] = number of samples with neutral degree d, d = 0..N.
    std::vector<std::size_t> histogram;
    std::size_t samples = 0;
};

/// Neutral degree over `samples` solutions drawn uniformly from {0,1}^N.
NeutralDegreeSummary neutral_degree_stats(const Landscape& landscape, std::size_t samples,
                                          Rng& rng);

// ---------------------------------------------------------------------------
// Exhaustive neutral-network enumeration

inline constexpr std::size_t kDefaultExhaustiveLimit = 20;

class EnumerationLimitError : public std::length_error {
public:
    EnumerationLimitError(std::size_t dimension, std::size_t limit);
};

struct NetworkInfo {
    double fitness = 0.0;
    std::size_t size = 0;
};

/// Partition of {0,1}^N into neutral networks. Solutions are indexed by
/// BitString::to_index(); network ids are numbered in order of their
/// smallest member, so equal partitions compare equal.
struct NetworkPartition {
    std::size_t dimension = 0;
    std::vector<std::uint32_t> assignment;
    std::vector<NetworkInfo> networks;

    std::size_t num_networks() const noexcept { return networks.size(); }

    friend bool operator==(const NetworkPartition& a, const NetworkPartition& b) {
        return a.dimension == b.dimension && a.assignment == b.assignment;
    }
};

/// Breadth-first traversal of neutral edges.
/// Throws EnumerationLimitError when N > limit.
NetworkPartition enumerate_networks(const Landscape& landscape,
                                    std::size_t limit = kDefaultExhaustiveLimit);

/// Same partition computed with union-find over neutral edges; kept as an
/// independent cross-check of enumerate_networks.
NetworkPartition enumerate_networks_union_find(const Landscape& landscape,
                                               std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace evoland::stats

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evoland/bitstring.hpp"
#include "evoland/landscape.hpp"
#include "evoland/rng.hpp"

namespace evoland {

struct WalkConfig {
    std::size_t walk_length = 100;
    std::size_t num_walks = 1000;
    std::size_t min_usable_length = 20;
    std::uint64_t seed = 0;
    EvolvabilityKind evolvability_kind = EvolvabilityKind::MaxNeighborFitness;

    /// Throws std::invalid_argument on zero counts or min_usable_length > walk_length.
    void validate() const;
};

/// Observations recorded along one walk.
struct WalkTrace {
    /// f(s_t) for fitness walks, ef(s_t) for evolvability walks.
    std::vector<double> observations;
    /// Bit flipped at each step; replaying them from `start` recovers s_t.
    std::vector<std::size_t> moves;
    bool terminated_early = false;
    BitString start{1};
    /// f(s_0); every solution of a neutral walk has exactly this fitness.
    double network_fitness = 0.0;

    /// Solutions s_0..s_T reconstructed from start and moves.
    std::vector<BitString> solutions() const;
};

/// Unconstrained walk: each step flips a uniformly chosen bit. Records
/// f(s_0)..f(s_length).
WalkTrace random_walk(const Landscape& landscape, const BitString& start, std::size_t length,
                      Rng& rng);

/// Walk restricted to neutral neighbors, chosen uniformly (revisits allowed).
/// Stops with terminated_early = true at a solution of neutral degree 0.
WalkTrace neutral_random_walk(const Landscape& landscape, const BitString& start,
                              std::size_t length, Rng& rng);

/// Neutral random walk recording ef(s_t) at every visited solution.
WalkTrace evolvability_walk(const Landscape& landscape, const BitString& start,
                            const WalkConfig& config, Rng& rng);

/// `count` solutions drawn uniformly and independently from {0,1}^N.
std::vector<BitString> sample_starts(const Landscape& landscape, std::size_t count, Rng& rng);

/// Seed of walk `index` under a batch seed.
std::uint64_t walk_seed(std::uint64_t batch_seed, std::size_t index);

/// config.num_walks evolvability walks. Walk i draws its start and its steps
/// from its own stream walk_seed(config.seed, i), so the result is the same
/// for any thread count. threads == 0 picks the hardware concurrency.
std::vector<WalkTrace> evolvability_walks(const Landscape& landscape, const WalkConfig& config,
                                          unsigned threads = 1);

}  // namespace evoland

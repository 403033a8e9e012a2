#include "evoland/walks.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace evoland {

void WalkConfig::validate() const {
    if (walk_length == 0) {
        throw std::invalid_argument("walk_length must be positive");
    }
    if (num_walks == 0) {
        throw std::invalid_argument("num_walks must be positive");
    }
    if (min_usable_length == 0) {
        throw std::invalid_argument("min_usable_length must be positive");
    }
    if (min_usable_length > walk_length) {
        throw std::invalid_argument("min_usable_length exceeds walk_length");
    }
}

std::vector<BitString> WalkTrace::solutions() const {
    std::vector<BitString> path;
    path.reserve(moves.size() + 1);
    path.push_back(start);
    for (const std::size_t bit : moves) {
        path.push_back(path.back().flipped(bit));
    }
    return path;
}

WalkTrace random_walk(const Landscape& landscape, const BitString& start, std::size_t length,
                      Rng& rng) {
    auto cursor = landscape.cursor(start);
    const std::size_t n = landscape.dimension();
    WalkTrace trace;
    trace.start = start;
    trace.network_fitness = cursor->fitness();
    trace.observations.reserve(length + 1);
    trace.moves.reserve(length);
    trace.observations.push_back(cursor->fitness());
    for (std::size_t t = 0; t < length; ++t) {
        const auto bit = static_cast<std::size_t>(rng.below(n));
        cursor->move(bit);
        trace.moves.push_back(bit);
        trace.observations.push_back(cursor->fitness());
    }
    return trace;
}

namespace {

// Shared loop of the neutral walks; `observe` maps a scan to the recorded value.
template <typename Observe>
WalkTrace neutral_walk_impl(const Landscape& landscape, const BitString& start,
                            std::size_t length, Rng& rng, Observe observe) {
    auto cursor = landscape.cursor(start);
    WalkTrace trace;
    trace.start = start;
    trace.network_fitness = cursor->fitness();
    trace.observations.reserve(length + 1);
    trace.moves.reserve(length);

    NeighborhoodScan scan;
    scan_neighborhood(*cursor, scan);
    trace.observations.push_back(observe(scan));
    for (std::size_t t = 0; t < length; ++t) {
        if (scan.neutral_bits.empty()) {
            trace.terminated_early = true;
            break;
        }
        const std::size_t bit = scan.neutral_bits[rng.below(scan.neutral_bits.size())];
        cursor->move(bit);
        trace.moves.push_back(bit);
        scan_neighborhood(*cursor, scan);
        trace.observations.push_back(observe(scan));
    }
    return trace;
}

}  // namespace

WalkTrace neutral_random_walk(const Landscape& landscape, const BitString& start,
                              std::size_t length, Rng& rng) {
    return neutral_walk_impl(landscape, start, length, rng,
                             [](const NeighborhoodScan& scan) { return scan.fitness; });
}

WalkTrace evolvability_walk(const Landscape& landscape, const BitString& start,
                            const WalkConfig& config, Rng& rng) {
    const EvolvabilityKind kind = config.evolvability_kind;
    return neutral_walk_impl(
        landscape, start, config.walk_length, rng,
        [kind](const NeighborhoodScan& scan) { return evolvability_of(scan, kind); });
}

std::vector<BitString> sample_starts(const Landscape& landscape, std::size_t count, Rng& rng) {
    if (count == 0) {
        throw std::invalid_argument("sample_starts: count must be at least 1");
    }
    const std::size_t n = landscape.dimension();
    std::vector<BitString> starts;
    starts.reserve(count);
    for (std::size_t w = 0; w < count; ++w) {
        BitString s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s.set(i, rng.coin());
        }
        starts.push_back(std::move(s));
    }
    return starts;
}

std::uint64_t walk_seed(std::uint64_t batch_seed, std::size_t index) {
    return mix_seed(batch_seed, static_cast<std::uint64_t>(index));
}

std::vector<WalkTrace> evolvability_walks(const Landscape& landscape, const WalkConfig& config,
                                          unsigned threads) {
    config.validate();
    std::vector<WalkTrace> traces(config.num_walks);

    auto run_one = [&](std::size_t index) {
        Rng rng(walk_seed(config.seed, index));
        const BitString start = sample_starts(landscape, 1, rng).front();
        traces[index] = evolvability_walk(landscape, start, config, rng);
    };

    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.num_walks));
    if (threads <= 1) {
        for (std::size_t i = 0; i < config.num_walks; ++i) {
            run_one(i);
        }
        return traces;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < config.num_walks; i = next++) {
                run_one(i);
            }
        });
    }
    workers.clear();
    return traces;
}

}  // namespace evoland

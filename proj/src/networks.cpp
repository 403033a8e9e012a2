#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "evoland/stats.hpp"

namespace evoland::stats {

EnumerationLimitError::EnumerationLimitError(std::size_t dimension, std::size_t limit)
    : std::length_error("exhaustive enumeration of 2^" + std::to_string(dimension) +
                        " solutions exceeds the limit of N = " + std::to_string(limit)) {}

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

std::vector<double> fitness_table(const Landscape& landscape, std::size_t limit) {
    const std::size_t n = landscape.dimension();
    if (n > limit || n >= 32) {
        throw EnumerationLimitError(n, limit);
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<double> table(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        table[idx] = landscape.fitness(BitString::from_index(idx, n));
    }
    return table;
}

// Fills per-network records from an assignment whose ids are already canonical.
void collect_networks(NetworkPartition& partition, const std::vector<double>& fitness) {
    for (std::size_t idx = 0; idx < partition.assignment.size(); ++idx) {
        const std::uint32_t id = partition.assignment[idx];
        if (id == partition.networks.size()) {
            partition.networks.push_back({fitness[idx], 0});
        }
        ++partition.networks[id].size;
    }
}

}  // namespace

NetworkPartition enumerate_networks(const Landscape& landscape, std::size_t limit) {
    const auto fitness = fitness_table(landscape, limit);
    const std::size_t n = landscape.dimension();
    NetworkPartition partition;
    partition.dimension = n;
    partition.assignment.assign(fitness.size(), kUnassigned);

    std::uint32_t next_id = 0;
    std::deque<std::uint64_t> queue;
    for (std::uint64_t seed = 0; seed < fitness.size(); ++seed) {
        if (partition.assignment[seed] != kUnassigned) {
            continue;
        }
        const std::uint32_t id = next_id++;
        partition.assignment[seed] = id;
        queue.push_back(seed);
        while (!queue.empty()) {
            const std::uint64_t u = queue.front();
            queue.pop_front();
            for (std::size_t bit = 0; bit < n; ++bit) {
                const std::uint64_t v = u ^ (std::uint64_t{1} << bit);
                if (partition.assignment[v] == kUnassigned && fitness[v] == fitness[u]) {
                    partition.assignment[v] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    collect_networks(partition, fitness);
    return partition;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t size) : parent_(size), rank_(size, 0) {
        std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return;
        }
        if (rank_[a] < rank_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        if (rank_[a] == rank_[b]) {
            ++rank_[a];
        }
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> rank_;
};

}  // namespace

NetworkPartition enumerate_networks_union_find(const Landscape& landscape, std::size_t limit) {
    const auto fitness = fitness_table(landscape, limit);
    const std::size_t n = landscape.dimension();
    const auto count = static_cast<std::uint32_t>(fitness.size());
    DisjointSets sets(count);
    for (std::uint32_t u = 0; u < count; ++u) {
        for (std::size_t bit = 0; bit < n; ++bit) {
            const std::uint32_t v = u ^ (std::uint32_t{1} << bit);
            if (v > u && fitness[u] == fitness[v]) {
                sets.unite(u, v);
            }
        }
    }

    NetworkPartition partition;
    partition.dimension = n;
    partition.assignment.assign(count, kUnassigned);
    std::vector<std::uint32_t> root_id(count, kUnassigned);
    std::uint32_t next_id = 0;
    for (std::uint32_t u = 0; u < count; ++u) {
        const std::uint32_t root = sets.find(u);
        if (root_id[root] == kUnassigned) {
            root_id[root] = next_id++;
        }
        partition.assignment[u] = root_id[root];
    }
    collect_networks(partition, fitness);
    return partition;
}

}  // namespace evoland::stats

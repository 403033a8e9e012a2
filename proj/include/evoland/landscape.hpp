#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "evoland/bitstring.hpp"

namespace evoland {

/// Walker-local view of a landscape positioned at one solution. Owns any
/// scratch state needed for incremental neighbor evaluation, so each
/// concurrent walker must hold its own cursor.
class Cursor {
public:
    virtual ~Cursor() = default;

    virtual const BitString& position() const = 0;
    virtual double fitness() const = 0;
    /// Fitness of position() with `bit` flipped.
    virtual double neighbor_fitness(std::size_t bit) const = 0;
    /// Moves to the Hamming-1 neighbor obtained by flipping `bit`.
    virtual void move(std::size_t bit) = 0;
};

/// Fitness landscape over {0,1}^N with the Hamming-1 neighborhood.
/// Implementations are immutable once built; fitness must be deterministic.
class Landscape {
public:
    virtual ~Landscape() = default;

    virtual std::size_t dimension() const = 0;
    /// Throws std::invalid_argument when s.size() != dimension().
    virtual double fitness(const BitString& s) const = 0;
    virtual std::string name() const = 0;

    /// The default cursor re-evaluates every neighbor from scratch.
    virtual std::unique_ptr<Cursor> cursor(const BitString& start) const;

protected:
    void check_length(const BitString& s) const;
};

enum class EvolvabilityKind {
    /// ef(s) = max fitness over the Hamming-1 neighbors of s.
    MaxNeighborFitness,
};

/// The N solutions at Hamming distance 1, i-th entry = bit i flipped.
std::vector<BitString> neighbors(const Landscape& landscape, const BitString& s);

/// Neighbors whose fitness equals f(s) exactly, ascending bit order.
std::vector<BitString> neutral_neighbors(const Landscape& landscape, const BitString& s);

std::size_t neutral_degree(const Landscape& landscape, const BitString& s);

double evolvability(const Landscape& landscape, const BitString& s,
                    EvolvabilityKind kind = EvolvabilityKind::MaxNeighborFitness);

/// One pass over a cursor's neighborhood.
struct NeighborhoodScan {
    double fitness = 0.0;
    std::vector<std::size_t> neutral_bits;
    double max_neighbor_fitness = 0.0;
};

/// Fills `out` (reused between calls to avoid reallocations).
void scan_neighborhood(const Cursor& cursor, NeighborhoodScan& out);

double evolvability_of(const NeighborhoodScan& scan, EvolvabilityKind kind);

// Synthetic landscapes with closed-form neutrality, used as oracles.

/// f(s) = value everywhere: one neutral network, neutral degree N.
class ConstantLandscape final : public Landscape {
public:
    ConstantLandscape(std::size_t dimension, double value = 0.0);

    std::size_t dimension() const override { return dimension_; }
    double fitness(const BitString& s) const override;
    std::string name() const override;

private:
    std::size_t dimension_;
    double value_;
};

/// f(s) = number of ones: every flip changes fitness, neutral degree 0.
class PopcountLandscape final : public Landscape {
public:
    explicit PopcountLandscape(std::size_t dimension);

    std::size_t dimension() const override { return dimension_; }
    double fitness(const BitString& s) const override;
    std::string name() const override;

private:
    std::size_t dimension_;
};

/// Adapts an arbitrary callable; mostly useful in tests.
class FunctionLandscape final : public Landscape {
public:
    using Fn = std::function<double(const BitString&)>;

    FunctionLandscape(std::size_t dimension, Fn fn, std::string name = "function");

    std::size_t dimension() const override { return dimension_; }
    double fitness(const BitString& s) const override;
    std::string name() const override { return name_; }

private:
    std::size_t dimension_;
    Fn fn_;
    std::string name_;
};

}  // namespace evoland

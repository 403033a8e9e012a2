#include "evoland/landscape.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace evoland {

namespace {

class ReevaluatingCursor final : public Cursor {
public:
    ReevaluatingCursor(const Landscape& landscape, BitString start)
        : landscape_(landscape), position_(std::move(start)),
          fitness_(landscape_.fitness(position_)) {}

    const BitString& position() const override { return position_; }
    double fitness() const override { return fitness_; }

    double neighbor_fitness(std::size_t bit) const override {
        scratch_ = position_;
        scratch_.flip(bit);
        return landscape_.fitness(scratch_);
    }

    void move(std::size_t bit) override {
        position_.flip(bit);
        fitness_ = landscape_.fitness(position_);
    }

private:
    const Landscape& landscape_;
    BitString position_;
    double fitness_;
    mutable BitString scratch_{1};
};

}  // namespace

std::unique_ptr<Cursor> Landscape::cursor(const BitString& start) const {
    check_length(start);
    return std::make_unique<ReevaluatingCursor>(*this, start);
}

void Landscape::check_length(const BitString& s) const {
    if (s.size() != dimension()) {
        throw std::invalid_argument("solution length " + std::to_string(s.size()) +
                                    " does not match landscape dimension " +
                                    std::to_string(dimension()));
    }
}

std::vector<BitString> neighbors(const Landscape& landscape, const BitString& s) {
    if (s.size() != landscape.dimension()) {
        throw std::invalid_argument("neighbors: solution length does not match landscape");
    }
    std::vector<BitString> result;
    result.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        result.push_back(s.flipped(i));
    }
    return result;
}

std::vector<BitString> neutral_neighbors(const Landscape& landscape, const BitString& s) {
    auto all = neighbors(landscape, s);
    const double f = landscape.fitness(s);
    std::erase_if(all, [&](const BitString& n) { return landscape.fitness(n) != f; });
    return all;
}

std::size_t neutral_degree(const Landscape& landscape, const BitString& s) {
    auto cursor = landscape.cursor(s);
    std::size_t degree = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (cursor->neighbor_fitness(i) == cursor->fitness()) {
            ++degree;
        }
    }
    return degree;
}

double evolvability(const Landscape& landscape, const BitString& s, EvolvabilityKind kind) {
    auto cursor = landscape.cursor(s);
    NeighborhoodScan scan;
    scan_neighborhood(*cursor, scan);
    return evolvability_of(scan, kind);
}

void scan_neighborhood(const Cursor& cursor, NeighborhoodScan& out) {
    const std::size_t n = cursor.position().size();
    out.fitness = cursor.fitness();
    out.neutral_bits.clear();
    for (std::size_t i = 0; i < n; ++i) {
        const double g = cursor.neighbor_fitness(i);
        if (i == 0 || g > out.max_neighbor_fitness) {
            out.max_neighbor_fitness = g;
        }
        if (g == out.fitness) {
            out.neutral_bits.push_back(i);
        }
    }
}

double evolvability_of(const NeighborhoodScan& scan, EvolvabilityKind kind) {
    switch (kind) {
    case EvolvabilityKind::MaxNeighborFitness:
        return scan.max_neighbor_fitness;
    }
    throw std::invalid_argument("unknown evolvability kind");
}

ConstantLandscape::ConstantLandscape(std::size_t dimension, double value)
    : dimension_(dimension), value_(value) {
    if (dimension == 0) {
        throw std::invalid_argument("landscape dimension must be at least 1");
    }
}

double ConstantLandscape::fitness(const BitString& s) const {
    check_length(s);
    return value_;
}

std::string ConstantLandscape::name() const {
    return "constant(" + std::to_string(dimension_) + ")";
}

PopcountLandscape::PopcountLandscape(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) {
        throw std::invalid_argument("landscape dimension must be at least 1");
    }
}

double PopcountLandscape::fitness(const BitString& s) const {
    check_length(s);
    return static_cast<double>(s.popcount());
}

std::string PopcountLandscape::name() const {
    return "popcount(" + std::to_string(dimension_) + ")";
}

FunctionLandscape::FunctionLandscape(std::size_t dimension, Fn fn, std::string name)
    : dimension_(dimension), fn_(std::move(fn)), name_(std::move(name)) {
    if (dimension == 0) {
        throw std::invalid_argument("landscape dimension must be at least 1");
    }
}

double FunctionLandscape::fitness(const BitString& s) const {
    check_length(s);
    return fn_(s);
}

}  // namespace evoland

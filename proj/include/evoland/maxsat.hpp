#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evoland/bitstring.hpp"
#include "evoland/landscape.hpp"

namespace evoland::maxsat {

/// Variable `var` (1-based) with a polarity. Variable i is bit i - 1.
struct Literal {
    std::uint32_t var = 0;
    bool positive = true;

    bool satisfied_by(const BitString& s) const noexcept { return s[var - 1] == positive; }
    int to_dimacs() const noexcept {
        return positive ? static_cast<int>(var) : -static_cast<int>(var);
    }

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// CNF formula stored as flattened clause ranges. Immutable after construction.
class CnfFormula {
public:
    explicit CnfFormula(std::size_t num_vars);

    /// Throws std::invalid_argument on an empty clause, a variable outside
    /// [1, N], or a variable repeated within the clause.
    void add_clause(std::span<const Literal> clause);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t num_clauses() const noexcept { return offsets_.size() - 1; }
    std::size_t num_literals() const noexcept { return literals_.size(); }
    double alpha() const noexcept {
        return static_cast<double>(num_clauses()) / static_cast<double>(num_vars_);
    }

    std::span<const Literal> clause(std::size_t index) const {
        return std::span<const Literal>(literals_).subspan(offsets_[index],
                                                          offsets_[index + 1] - offsets_[index]);
    }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    std::size_t num_vars_;
    std::vector<Literal> literals_;
    std::vector<std::size_t> offsets_{0};
};

/// Parameters of a uniform random k-SAT instance.
struct InstanceSpec {
    std::size_t num_vars = 0;
    std::size_t num_clauses = 0;
    std::size_t literals_per_clause = 3;
    std::uint64_t seed = 0;
};

/// Uniform random k-SAT. Draw order, per clause: k distinct variables by a
/// partial Fisher-Yates shuffle over a variable pool that persists across
/// clauses, then one fair coin per literal for its polarity. The stream is
/// evoland::Rng seeded with spec.seed.
/// Throws std::invalid_argument when k > N or k == 0.
CnfFormula generate(const InstanceSpec& spec);

/// Number of clauses with at least one satisfied literal.
std::size_t evaluate(const CnfFormula& formula, const BitString& s);

/// evaluate(formula, s with `bit` flipped) - current_fitness, computed from
/// the clauses that mention the flipped variable only. current_fitness must
/// equal evaluate(formula, s).
long evaluate_flip_delta(const CnfFormula& formula, const BitString& s, long current_fitness,
                         std::size_t bit);

/// MAX-SAT landscape with per-variable occurrence lists. Its cursors keep
/// per-clause satisfied-literal counts so a neighbor costs O(occurrences).
class MaxSatLandscape final : public Landscape {
public:
    explicit MaxSatLandscape(CnfFormula formula);

    std::size_t dimension() const override { return formula_.num_vars(); }
    double fitness(const BitString& s) const override;
    std::string name() const override;
    std::unique_ptr<Cursor> cursor(const BitString& start) const override;

    const CnfFormula& formula() const noexcept { return formula_; }

    /// Same contract as the free evaluate_flip_delta, using occurrence lists.
    long flip_delta(const BitString& s, long current_fitness, std::size_t bit) const;

    struct Occurrence {
        std::uint32_t clause;
        bool positive;
    };
    std::span<const Occurrence> occurrences(std::size_t bit) const {
        return std::span<const Occurrence>(occurrences_).subspan(
            occ_offsets_[bit], occ_offsets_[bit + 1] - occ_offsets_[bit]);
    }

private:
    CnfFormula formula_;
    std::vector<Occurrence> occurrences_;
    std::vector<std::size_t> occ_offsets_;
};

/// DIMACS parse failure; line() is 1-based.
class DimacsError : public std::runtime_error {
public:
    DimacsError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Reads DIMACS CNF: 'c' comment lines, exactly one "p cnf N m" header before
/// any clause, clauses as nonzero integers terminated by 0 (may span lines).
/// A line starting with '%' ends the input (SATLIB convention).
CnfFormula parse_dimacs(std::string_view text);

/// Header line then one clause per line, literals in stored order.
std::string write_dimacs(const CnfFormula& formula);

}  // namespace evoland::maxsat

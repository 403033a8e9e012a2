#include "evoland/maxsat.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "evoland/rng.hpp"

namespace evoland::maxsat {

CnfFormula::CnfFormula(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) {
        throw std::invalid_argument("formula must have at least one variable");
    }
}

void CnfFormula::add_clause(std::span<const Literal> clause) {
    if (clause.empty()) {
        throw std::invalid_argument("empty clause");
    }
    for (std::size_t i = 0; i < clause.size(); ++i) {
        const std::uint32_t var = clause[i].var;
        if (var == 0 || var > num_vars_) {
            throw std::invalid_argument("variable " + std::to_string(var) + " outside [1, " +
                                        std::to_string(num_vars_) + "]");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (clause[j].var == var) {
                throw std::invalid_argument("variable " + std::to_string(var) +
                                            " repeated within a clause");
            }
        }
    }
    literals_.insert(literals_.end(), clause.begin(), clause.end());
    offsets_.push_back(literals_.size());
}

CnfFormula generate(const InstanceSpec& spec) {
    const std::size_t n = spec.num_vars;
    const std::size_t k = spec.literals_per_clause;
    if (k == 0) {
        throw std::invalid_argument("literals per clause must be at least 1");
    }
    if (k > n) {
        throw std::invalid_argument("literals per clause (" + std::to_string(k) +
                                    ") exceeds number of variables (" + std::to_string(n) + ")");
    }

    CnfFormula formula(n);
    Rng rng(spec.seed);
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::uint32_t{1});
    std::vector<Literal> clause(k);

    for (std::size_t c = 0; c < spec.num_clauses; ++c) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t pick = j + static_cast<std::size_t>(rng.below(n - j));
            std::swap(pool[j], pool[pick]);
            clause[j].var = pool[j];
        }
        for (std::size_t j = 0; j < k; ++j) {
            clause[j].positive = rng.coin();
        }
        formula.add_clause(clause);
    }
    return formula;
}

namespace {

void check_assignment(const CnfFormula& formula, const BitString& s) {
    if (s.size() != formula.num_vars()) {
        throw std::invalid_argument("assignment length " + std::to_string(s.size()) +
                                    " does not match " + std::to_string(formula.num_vars()) +
                                    " variables");
    }
}

bool clause_satisfied(std::span<const Literal> clause, const BitString& s) {
    for (const Literal& lit : clause) {
        if (lit.satisfied_by(s)) {
            return true;
        }
    }
    return false;
}

// Satisfaction of `clause` if variable `var` were flipped.
bool clause_satisfied_flipped(std::span<const Literal> clause, const BitString& s,
                              std::uint32_t var) {
    for (const Literal& lit : clause) {
        const bool value = lit.var == var ? !s[var - 1] : s[lit.var - 1];
        if (value == lit.positive) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::size_t evaluate(const CnfFormula& formula, const BitString& s) {
    check_assignment(formula, s);
    std::size_t satisfied = 0;
    for (std::size_t c = 0; c < formula.num_clauses(); ++c) {
        if (clause_satisfied(formula.clause(c), s)) {
            ++satisfied;
        }
    }
    return satisfied;
}

long evaluate_flip_delta(const CnfFormula& formula, const BitString& s,
                         long /*current_fitness*/, std::size_t bit) {
    check_assignment(formula, s);
    if (bit >= formula.num_vars()) {
        throw std::invalid_argument("flip index " + std::to_string(bit) + " out of range");
    }
    const auto var = static_cast<std::uint32_t>(bit + 1);
    long delta = 0;
    for (std::size_t c = 0; c < formula.num_clauses(); ++c) {
        const auto clause = formula.clause(c);
        bool mentions = false;
        for (const Literal& lit : clause) {
            mentions = mentions || lit.var == var;
        }
        if (!mentions) {
            continue;
        }
        delta += static_cast<long>(clause_satisfied_flipped(clause, s, var)) -
                 static_cast<long>(clause_satisfied(clause, s));
    }
    return delta;
}

MaxSatLandscape::MaxSatLandscape(CnfFormula formula) : formula_(std::move(formula)) {
    const std::size_t n = formula_.num_vars();
    std::vector<std::size_t> counts(n, 0);
    for (std::size_t c = 0; c < formula_.num_clauses(); ++c) {
        for (const Literal& lit : formula_.clause(c)) {
            ++counts[lit.var - 1];
        }
    }
    occ_offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        occ_offsets_[v + 1] = occ_offsets_[v] + counts[v];
    }
    occurrences_.resize(occ_offsets_[n]);
    std::vector<std::size_t> fill(occ_offsets_.begin(), occ_offsets_.end() - 1);
    for (std::size_t c = 0; c < formula_.num_clauses(); ++c) {
        for (const Literal& lit : formula_.clause(c)) {
            occurrences_[fill[lit.var - 1]++] = {static_cast<std::uint32_t>(c), lit.positive};
        }
    }
}

double MaxSatLandscape::fitness(const BitString& s) const {
    return static_cast<double>(evaluate(formula_, s));
}

std::string MaxSatLandscape::name() const {
    return "maxsat(N=" + std::to_string(formula_.num_vars()) +
           ", m=" + std::to_string(formula_.num_clauses()) + ")";
}

long MaxSatLandscape::flip_delta(const BitString& s, long /*current_fitness*/,
                                 std::size_t bit) const {
    check_assignment(formula_, s);
    if (bit >= formula_.num_vars()) {
        throw std::invalid_argument("flip index " + std::to_string(bit) + " out of range");
    }
    const auto var = static_cast<std::uint32_t>(bit + 1);
    long delta = 0;
    for (const Occurrence& occ : occurrences(bit)) {
        const auto clause = formula_.clause(occ.clause);
        delta += static_cast<long>(clause_satisfied_flipped(clause, s, var)) -
                 static_cast<long>(clause_satisfied(clause, s));
    }
    return delta;
}

namespace {

class MaxSatCursor final : public Cursor {
public:
    MaxSatCursor(const MaxSatLandscape& landscape, BitString start)
        : landscape_(landscape), position_(std::move(start)),
          true_counts_(landscape.formula().num_clauses(), 0) {
        const CnfFormula& formula = landscape_.formula();
        for (std::size_t c = 0; c < formula.num_clauses(); ++c) {
            for (const Literal& lit : formula.clause(c)) {
                true_counts_[c] += lit.satisfied_by(position_) ? 1U : 0U;
            }
            satisfied_ += true_counts_[c] > 0 ? 1 : 0;
        }
    }

    const BitString& position() const override { return position_; }
    double fitness() const override { return static_cast<double>(satisfied_); }

    double neighbor_fitness(std::size_t bit) const override {
        const bool value = position_[bit];
        long delta = 0;
        for (const auto& occ : landscape_.occurrences(bit)) {
            const bool currently_true = value == occ.positive;
            const std::uint32_t count = true_counts_[occ.clause];
            if (currently_true) {
                delta -= count == 1 ? 1 : 0;
            } else {
                delta += count == 0 ? 1 : 0;
            }
        }
        return static_cast<double>(satisfied_ + delta);
    }

    void move(std::size_t bit) override {
        const bool value = position_[bit];
        for (const auto& occ : landscape_.occurrences(bit)) {
            std::uint32_t& count = true_counts_[occ.clause];
            if (value == occ.positive) {
                --count;
                satisfied_ -= count == 0 ? 1 : 0;
            } else {
                satisfied_ += count == 0 ? 1 : 0;
                ++count;
            }
        }
        position_.flip(bit);
    }

private:
    const MaxSatLandscape& landscape_;
    BitString position_;
    std::vector<std::uint32_t> true_counts_;
    long satisfied_ = 0;
};

}  // namespace

std::unique_ptr<Cursor> MaxSatLandscape::cursor(const BitString& start) const {
    check_length(start);
    return std::make_unique<MaxSatCursor>(*this, start);
}

}  // namespace evoland::maxsat

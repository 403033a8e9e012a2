#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "evoland/maxsat.hpp"

namespace evoland::maxsat {

DimacsError::DimacsError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
    T value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
    std::optional<CnfFormula> formula;
    std::size_t declared_clauses = 0;
    std::size_t header_line = 0;
    std::vector<Literal> pending;
    std::size_t pending_line = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0][0] == 'c') {
            continue;
        }
        if (tokens[0][0] == '%') {
            break;
        }
        if (tokens[0] == "p") {
            if (formula) {
                throw DimacsError(line_no, "duplicate header (first at line " +
                                               std::to_string(header_line) + ")");
            }
            if (tokens.size() != 4 || tokens[1] != "cnf") {
                throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            const auto vars = parse_number<std::size_t>(tokens[2]);
            const auto clauses = parse_number<std::size_t>(tokens[3]);
            if (!vars || !clauses || *vars == 0) {
                throw DimacsError(line_no, "malformed header counts");
            }
            formula.emplace(*vars);
            declared_clauses = *clauses;
            header_line = line_no;
            continue;
        }
        if (!formula) {
            throw DimacsError(line_no, "clause before 'p cnf' header");
        }

        for (const std::string_view token : tokens) {
            const auto value = parse_number<long>(token);
            if (!value) {
                throw DimacsError(line_no, "invalid literal '" + std::string(token) + "'");
            }
            if (*value == 0) {
                if (pending.empty()) {
                    throw DimacsError(line_no, "literal 0 with empty clause body");
                }
                if (formula->num_clauses() == declared_clauses) {
                    throw DimacsError(line_no, "more clauses than the " +
                                                   std::to_string(declared_clauses) +
                                                   " declared in the header");
                }
                try {
                    formula->add_clause(pending);
                } catch (const std::invalid_argument& e) {
                    throw DimacsError(pending_line, e.what());
                }
                pending.clear();
                continue;
            }
            const unsigned long var = static_cast<unsigned long>(*value < 0 ? -*value : *value);
            if (var > formula->num_vars()) {
                throw DimacsError(line_no, "variable " + std::to_string(var) + " exceeds " +
                                               std::to_string(formula->num_vars()));
            }
            if (pending.empty()) {
                pending_line = line_no;
            }
            pending.push_back({static_cast<std::uint32_t>(var), *value > 0});
        }
    }

    if (!formula) {
        throw DimacsError(line_no, "missing 'p cnf' header");
    }
    if (!pending.empty()) {
        throw DimacsError(pending_line, "clause not terminated by 0");
    }
    if (formula->num_clauses() != declared_clauses) {
        throw DimacsError(line_no, "found " + std::to_string(formula->num_clauses()) +
                                       " clauses, header declares " +
                                       std::to_string(declared_clauses));
    }
    return std::move(*formula);
}

std::string write_dimacs(const CnfFormula& formula) {
    std::string out = "p cnf " + std::to_string(formula.num_vars()) + " " +
                      std::to_string(formula.num_clauses()) + "\n";
    out.reserve(out.size() + formula.num_literals() * 4 + formula.num_clauses() * 2);
    for (std::size_t c = 0; c < formula.num_clauses(); ++c) {
        for (const Literal& lit : formula.clause(c)) {
            out += std::to_string(lit.to_dimacs());
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

}  // namespace evoland::maxsat

#include <doctest.h>

#include "evoland/maxsat.hpp"

using namespace evoland::maxsat;

namespace {

std::size_t error_line(const char* text) {
    try {
        (void)parse_dimacs(text);
    } catch (const DimacsError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("parse a minimal instance") {
    const auto f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    CHECK(f.num_vars() == 3);
    REQUIRE(f.num_clauses() == 1);
    const auto c = f.clause(0);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Literal{1, true});
    CHECK(c[1] == Literal{2, false});
    CHECK(c[2] == Literal{3, true});
}

TEST_CASE("comments, split clauses, CRLF and SATLIB trailer") {
    const auto f = parse_dimacs(
        "c a comment\r\n"
        "p cnf 4 2\r\n"
        "c another\r\n"
        "1 -2\r\n"
        "   3 0 -4 1 0\r\n"
        "%\n0\n");
    REQUIRE(f.num_clauses() == 2);
    CHECK(f.clause(0).size() == 3);
    CHECK(f.clause(1)[0] == Literal{4, false});
}

TEST_CASE("errors name the offending line") {
    CHECK(error_line("1 2 0\n") == 1);                                // clause before header
    CHECK(error_line("c\np cnf 3 1\np cnf 3 1\n1 0\n") == 3);         // duplicate header
    CHECK(error_line("p cnf 3 2\n1 2 0\n2 3 0\n1 3 0\n") == 4);       // more clauses than declared
    CHECK(error_line("p cnf 3 1\n0\n") == 2);                         // 0 with empty body
    CHECK(error_line("p cnf 3 1\n1 4 0\n") == 2);                     // variable above N
    CHECK(error_line("p cnf 3 1\n1 x 0\n") == 2);                     // junk token
    CHECK(error_line("p cnf 3 1\n1 2\n") == 2);                       // unterminated
    CHECK(error_line("p cnf 3 1\n1 -1 2 0\n") == 2);                  // repeated variable
    CHECK(error_line("p dnf 3 1\n") == 1);                            // wrong format
    CHECK(error_line("c only comments\n") == 1);                      // missing header
    CHECK(error_line("p cnf 3 3\n1 2 0\n2 3 0\n") == 3);              // fewer clauses than declared
}

TEST_CASE("write then parse is lossless and write is canonical") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto f = generate({64, 350, 3, seed});
        const auto text = write_dimacs(f);
        const auto g = parse_dimacs(text);
        CHECK(g == f);
        CHECK(write_dimacs(g) == text);
    }
    CHECK(write_dimacs(parse_dimacs("p cnf 3 1\n1 -2 3 0\n")) == "p cnf 3 1\n1 -2 3 0\n");
}

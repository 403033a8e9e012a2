#include <doctest.h>

#include <stdexcept>

#include "evoland/bitstring.hpp"
#include "evoland/rng.hpp"

using evoland::BitString;

TEST_CASE("BitString construction and text round trip") {
    const auto s = BitString::from_string("0110");
    CHECK(s.size() == 4);
    CHECK_FALSE(s[0]);
    CHECK(s[1]);
    CHECK(s.popcount() == 2);
    CHECK(s.to_string() == "0110");
    CHECK_THROWS_AS(BitString(0), std::invalid_argument);
    CHECK_THROWS_AS(BitString::from_string("01x"), std::invalid_argument);
    CHECK_THROWS_AS(s.at(4), std::out_of_range);
}

TEST_CASE("index encoding uses bit 0 as least significant") {
    const auto s = BitString::from_index(0b0110, 4);
    CHECK(s.to_string() == "0110");
    CHECK(BitString::from_string("1000").to_index() == 1);
    for (std::uint64_t v = 0; v < 256; ++v) {
        CHECK(BitString::from_index(v, 8).to_index() == v);
    }
}

TEST_CASE("flip is an involution") {
    evoland::Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        BitString s(37);
        for (std::size_t i = 0; i < s.size(); ++i) {
            s.set(i, rng.coin());
        }
        const std::size_t bit = rng.below(s.size());
        const BitString once = s.flipped(bit);
        CHECK(once.hamming_distance(s) == 1);
        CHECK(once.flipped(bit) == s);
    }
}

TEST_CASE("Rng::below stays in range and mix_seed separates streams") {
    evoland::Rng rng(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.below(7) < 7);
    }
    CHECK(rng.below(1) == 0);
    CHECK(evoland::mix_seed(1, 2) != evoland::mix_seed(2, 1));
    CHECK(evoland::mix_seed(1, 16, 39, 0) == evoland::mix_seed(1, 16, 39, 0));
    CHECK(evoland::mix_seed(1, 16, 39, 0) != evoland::mix_seed(1, 16, 39, 1));
}

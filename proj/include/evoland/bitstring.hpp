#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evoland {

/// Fixed-length binary genotype. Bit index 0 is the first position; for
/// MAX-SAT, variable i maps to bit index i - 1.
class BitString {
public:
    /// All-zero string of the given length. Length must be >= 1.
    explicit BitString(std::size_t length);

    /// Parses a string of '0'/'1' characters, first character = bit 0.
    static BitString from_string(std::string_view text);

    /// Bits 0..length-1 taken from the low bits of `value` (bit 0 = LSB).
    /// Requires length <= 64.
    static BitString from_index(std::uint64_t value, std::size_t length);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
    bool at(std::size_t i) const;

    void set(std::size_t i, bool value);
    void flip(std::size_t i);
    BitString flipped(std::size_t i) const;

    std::size_t popcount() const noexcept;
    std::size_t hamming_distance(const BitString& other) const;

    /// Inverse of from_index. Requires size() <= 64.
    std::uint64_t to_index() const;
    std::string to_string() const;

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace evoland

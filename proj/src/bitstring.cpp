#include "evoland/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace evoland {

BitString::BitString(std::size_t length) : bits_(length, 0) {
    if (length == 0) {
        throw std::invalid_argument("BitString length must be at least 1");
    }
}

BitString BitString::from_string(std::string_view text) {
    BitString s(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw std::invalid_argument("BitString text must contain only '0' and '1'");
        }
        s.bits_[i] = text[i] == '1' ? 1 : 0;
    }
    return s;
}

BitString BitString::from_index(std::uint64_t value, std::size_t length) {
    if (length > 64) {
        throw std::invalid_argument("BitString::from_index supports at most 64 bits");
    }
    BitString s(length);
    for (std::size_t i = 0; i < length; ++i) {
        s.bits_[i] = static_cast<std::uint8_t>((value >> i) & 1U);
    }
    return s;
}

bool BitString::at(std::size_t i) const {
    if (i >= bits_.size()) {
        throw std::out_of_range("BitString index out of range");
    }
    return bits_[i] != 0;
}

void BitString::set(std::size_t i, bool value) {
    if (i >= bits_.size()) {
        throw std::out_of_range("BitString index out of range");
    }
    bits_[i] = value ? 1 : 0;
}

void BitString::flip(std::size_t i) {
    if (i >= bits_.size()) {
        throw std::out_of_range("BitString index out of range");
    }
    bits_[i] ^= 1U;
}

BitString BitString::flipped(std::size_t i) const {
    BitString copy = *this;
    copy.flip(i);
    return copy;
}

std::size_t BitString::popcount() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::size_t BitString::hamming_distance(const BitString& other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("hamming_distance: length mismatch");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        d += bits_[i] != other.bits_[i] ? 1 : 0;
    }
    return d;
}

std::uint64_t BitString::to_index() const {
    if (bits_.size() > 64) {
        throw std::invalid_argument("BitString::to_index supports at most 64 bits");
    }
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        value |= static_cast<std::uint64_t>(bits_[i]) << i;
    }
    return value;
}

std::string BitString::to_string() const {
    std::string text(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] != 0) {
            text[i] = '1';
        }
    }
    return text;
}

}  // namespace evoland

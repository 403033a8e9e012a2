#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evoland {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Flat `key = value` text: one entry per line, '#' starts a comment, blank
/// lines ignored. Keys may repeat; lookups return the last occurrence except
/// all(), which returns every occurrence in file order.
class KeyValueConfig {
public:
    struct Entry {
        std::string key;
        std::string value;
        std::size_t line = 0;
    };

    static KeyValueConfig parse(std::string_view text);
    /// Throws std::runtime_error if the file cannot be read.
    static KeyValueConfig load(const std::string& path);

    bool has(std::string_view key) const;
    std::optional<std::string> get(std::string_view key) const;
    std::vector<std::string> all(std::string_view key) const;

    std::optional<std::uint64_t> get_u64(std::string_view key) const;
    std::optional<bool> get_bool(std::string_view key) const;

    /// Throws ConfigError naming the first key not in `known`.
    void require_known(const std::vector<std::string_view>& known) const;

    const std::vector<Entry>& entries() const noexcept { return entries_; }

private:
    const Entry* last(std::string_view key) const;

    std::vector<Entry> entries_;
};

}  // namespace evoland

#include "evoland/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace evoland {

ConfigError::ConfigError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
    KeyValueConfig config;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(line_no, "expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(line_no, "empty key");
        }
        config.entries_.push_back({std::string(key), std::string(value), line_no});
    }
    return config;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

const KeyValueConfig::Entry* KeyValueConfig::last(std::string_view key) const {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (it->key == key) {
            return &*it;
        }
    }
    return nullptr;
}

bool KeyValueConfig::has(std::string_view key) const { return last(key) != nullptr; }

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
    if (const Entry* e = last(key)) {
        return e->value;
    }
    return std::nullopt;
}

std::vector<std::string> KeyValueConfig::all(std::string_view key) const {
    std::vector<std::string> values;
    for (const Entry& e : entries_) {
        if (e.key == key) {
            values.push_back(e.value);
        }
    }
    return values;
}

std::optional<std::uint64_t> KeyValueConfig::get_u64(std::string_view key) const {
    const Entry* e = last(key);
    if (e == nullptr) {
        return std::nullopt;
    }
    std::uint64_t value = 0;
    const char* end = e->value.data() + e->value.size();
    const auto [ptr, ec] = std::from_chars(e->value.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(e->line, "'" + e->key + "' expects a non-negative integer, got '" +
                                       e->value + "'");
    }
    return value;
}

std::optional<bool> KeyValueConfig::get_bool(std::string_view key) const {
    const Entry* e = last(key);
    if (e == nullptr) {
        return std::nullopt;
    }
    if (e->value == "true" || e->value == "1" || e->value == "yes") {
        return true;
    }
    if (e->value == "false" || e->value == "0" || e->value == "no") {
        return false;
    }
    throw ConfigError(e->line, "'" + e->key + "' expects true/false, got '" + e->value + "'");
}

void KeyValueConfig::require_known(const std::vector<std::string_view>& known) const {
    for (const Entry& e : entries_) {
        if (std::find(known.begin(), known.end(), e.key) == known.end()) {
            throw ConfigError(e.line, "unknown key '" + e.key + "'");
        }
    }
}

}  // namespace evoland

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hoids {

// Line-oriented "key = value" configuration reader used for schema
// descriptors, server/client configs and simulation scenarios.
// '#' starts a comment; keys may repeat (order preserved).
class Config {
public:
    static Config parse(const std::string& text);
    static Config from_file(const std::string& path);  // throws on unreadable file

    // all values for a key, in file order
    std::vector<std::string> all(const std::string& key) const;
    // last value, or nullopt
    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key, double def) const;
    long get_long(const std::string& key, long def) const;
    bool get_bool(const std::string& key, bool def) const;
    bool has(const std::string& key) const;

    // keys with a given prefix, e.g. prefix "client." -> {"client.c1.level", ...}
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace hoids

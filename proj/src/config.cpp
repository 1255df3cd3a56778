#include "hoids/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hoids/textio.hpp"

namespace hoids {

Config Config::parse(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) + ": empty key");
        cfg.entries_.emplace_back(std::move(key), std::move(value));
    }
    return cfg;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::vector<std::string> Config::all(const std::string& key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
        if (k == key) out.push_back(v);
    return out;
}

std::optional<std::string> Config::get(const std::string& key) const {
    std::optional<std::string> out;
    for (const auto& [k, v] : entries_)
        if (k == key) out = v;
    return out;
}

std::string Config::get_or(const std::string& key, const std::string& def) const {
    auto v = get(key);
    return v ? *v : def;
}

double Config::get_double(const std::string& key, double def) const {
    auto v = get(key);
    if (!v) return def;
    auto d = parse_double(*v);
    if (!d) throw std::runtime_error("config key '" + key + "': not a number: " + *v);
    return *d;
}

long Config::get_long(const std::string& key, long def) const {
    return static_cast<long>(get_double(key, static_cast<double>(def)));
}

bool Config::get_bool(const std::string& key, bool def) const {
    auto v = get(key);
    if (!v) return def;
    if (*v == "on" || *v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "off" || *v == "false" || *v == "0" || *v == "no") return false;
    throw std::runtime_error("config key '" + key + "': expected on/off, got " + *v);
}

bool Config::has(const std::string& key) const { return get(key).has_value(); }

std::vector<std::string> Config::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
        if (k.rfind(prefix, 0) == 0) out.push_back(k);
    return out;
}

}  // namespace hoids

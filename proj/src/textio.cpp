#include "hoids/textio.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hoids {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::optional<double> parse_double(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::string tmp(s);
    const char* begin = tmp.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + tmp.size()) return std::nullopt;
    return v;
}

std::string escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case ',': out += "\\c"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (i + 1 >= s.size()) throw std::runtime_error("dangling escape");
        switch (s[++i]) {
            case '\\': out += '\\'; break;
            case 'n': out += '\n'; break;
            case 'r': out += '\r'; break;
            case 'c': out += ','; break;
            default: throw std::runtime_error("bad escape sequence");
        }
    }
    return out;
}

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += format_double(v[i]);
    }
    return out;
}

std::vector<double> split_doubles(std::string_view s) {
    std::vector<double> out;
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(',', start);
        std::string_view item =
            pos == std::string_view::npos ? s.substr(start) : s.substr(start, pos - start);
        auto v = parse_double(item);
        if (!v) throw std::runtime_error("bad float in list: '" + std::string(item) + "'");
        out.push_back(*v);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string join_strings(const std::vector<std::string>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += escape(v[i]);
    }
    return out;
}

std::vector<std::string> split_strings(std::string_view s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    size_t start = 0;
    size_t i = 0;
    for (; i < s.size(); ++i) {
        if (s[i] == '\\') {
            ++i;  // escaped char, never a separator
            continue;
        }
        if (s[i] == ',') {
            out.push_back(unescape(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(unescape(s.substr(start)));
    return out;
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            break;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

}  // namespace hoids

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hoids {

// Text helpers shared by the model file format, the wire protocol and the
// CSV readers. Floats are written with %.17g so that every finite double
// round-trips to the identical bit pattern.

std::string format_double(double v);
std::optional<double> parse_double(std::string_view s);

// escapes '\\', '\n', '\r' and ',' (so escaped items can be comma-joined)
std::string escape(std::string_view s);
std::string unescape(std::string_view s);  // throws std::runtime_error on bad escape

std::string join_doubles(const std::vector<double>& v);
std::vector<double> split_doubles(std::string_view s);  // throws on parse failure

std::string join_strings(const std::vector<std::string>& v);  // escapes items
std::vector<std::string> split_strings(std::string_view s);

// splits one CSV line on commas; no quoting (the target datasets use none)
std::vector<std::string> split_csv(std::string_view line);

std::string trim(std::string_view s);

}  // namespace hoids

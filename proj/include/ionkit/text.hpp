#ifndef IONKIT_TEXT_HPP
#define IONKIT_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ionkit {

/// Shortest round-trip decimal representation of a double.
/// All report writers use this so that repeated runs are byte-identical.
std::string format_double(double value);

/// Strict double parser: the whole token must be consumed and the value
/// must be finite. Throws ParseError with `context` on failure.
double parse_double(std::string_view token, const std::string& context);

/// Split one CSV line on commas. No quoting: the formats used here never
/// emit commas inside fields.
std::vector<std::string> split_csv_line(std::string_view line);

/// Split text into lines, accepting both \n and \r\n endings.
/// A trailing final newline does not produce an empty last line.
std::vector<std::string> split_lines(std::string_view text);

std::string join(const std::vector<std::string>& parts, char sep);

} // namespace ionkit

#endif

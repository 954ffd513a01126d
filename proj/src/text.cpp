#include "ionkit/text.hpp"
#include "ionkit/errors.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace ionkit {

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token, const std::string& context) {
    // from_chars does not skip leading whitespace, which is what we want.
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || token.empty())
        throw ParseError(context + ": not a number: '" + std::string(token) + "'");
    if (!std::isfinite(value))
        throw ParseError(context + ": non-finite value: '" + std::string(token) + "'");
    return value;
}

std::vector<std::string> split_csv_line(std::string_view line) {
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

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t pos = text.find('\n', start);
        std::string_view line;
        if (pos == std::string_view::npos) {
            if (start == text.size()) break; // no trailing fragment
            line = text.substr(start);
            start = text.size() + 1;
        } else {
            line = text.substr(start, pos - start);
            start = pos + 1;
        }
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.emplace_back(line);
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

} // namespace ionkit

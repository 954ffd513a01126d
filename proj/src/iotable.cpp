#include "ionkit/iotable.hpp"
#include "ionkit/errors.hpp"
#include "ionkit/registry.hpp"
#include "ionkit/text.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace ionkit {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string cell_ref(size_t line_no, size_t col_no) {
    return "line " + std::to_string(line_no) + ", column " + std::to_string(col_no);
}

void check_registry(const std::vector<std::string>& sectors, const ParseOptions& options) {
    if (!options.strict_registry) return;
    for (const auto& code : sectors)
        if (!stan_registry().contains(code))
            throw RegistryError("sector code not in registry: " + code);
}

void check_sectors(const std::vector<std::string>& sectors) {
    for (size_t i = 0; i < sectors.size(); ++i) {
        if (sectors[i].empty())
            throw ParseError("empty sector code at position " + std::to_string(i + 1));
        for (size_t j = i + 1; j < sectors.size(); ++j)
            if (sectors[i] == sectors[j])
                throw ParseError("duplicate sector code: " + sectors[i]);
    }
}

IOTable parse_csv(const std::string& text, const ParseOptions& options) {
    const auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError("empty table: no header row");

    // Header: sector,<codes...>,final_use,total_output[,aux:<name>...]
    const auto header = split_csv_line(lines[0]);
    if (header.empty() || header[0] != "sector")
        throw ParseError("malformed header: first field must be 'sector'");
    size_t fu_pos = 0;
    for (size_t c = 1; c < header.size(); ++c) {
        if (header[c] == "final_use") {
            fu_pos = c;
            break;
        }
    }
    if (fu_pos == 0)
        throw ParseError("malformed header: missing 'final_use' column");
    if (fu_pos + 1 >= header.size() || header[fu_pos + 1] != "total_output")
        throw ParseError("malformed header: 'total_output' must follow 'final_use'");

    IOTable t;
    t.sectors.assign(header.begin() + 1, header.begin() + static_cast<long>(fu_pos));
    const size_t n = t.sectors.size();
    if (n == 0)
        throw ParseError("empty table: no sector columns");
    check_sectors(t.sectors);
    check_registry(t.sectors, options);

    std::vector<std::string> aux_names;
    for (size_t c = fu_pos + 2; c < header.size(); ++c) {
        if (header[c].rfind("aux:", 0) != 0 || header[c].size() == 4)
            throw ParseError("malformed header: expected 'aux:<name>' at column " +
                             std::to_string(c + 1));
        aux_names.push_back(header[c].substr(4));
        if (t.aux.count(aux_names.back()))
            throw ParseError("duplicate aux column: " + aux_names.back());
        t.aux[aux_names.back()] = {};
    }
    const size_t width = header.size();

    if (lines.size() < n + 3)
        throw ParseError("truncated table: expected " + std::to_string(n + 3) +
                         " rows, found " + std::to_string(lines.size()));

    t.intermediate.assign(n, std::vector<double>(n, 0.0));
    t.final_use.resize(n);
    t.total_output.resize(n);
    t.value_added.resize(n);

    for (size_t i = 0; i < n; ++i) {
        const size_t line_no = i + 2;
        const auto row = split_csv_line(lines[i + 1]);
        if (row.size() != width)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(width) + " fields, found " +
                             std::to_string(row.size()));
        if (row[0] != t.sectors[i])
            throw ParseError("line " + std::to_string(line_no) + ": sector code '" +
                             row[0] + "' does not match header order ('" +
                             t.sectors[i] + "')");
        for (size_t j = 0; j < n; ++j) {
            double w = parse_double(row[j + 1], cell_ref(line_no, j + 2));
            if (w < 0.0)
                throw ParseError(cell_ref(line_no, j + 2) +
                                 ": negative intermediate flow " + row[j + 1]);
            t.intermediate[i][j] = w;
        }
        t.final_use[i] = parse_double(row[n + 1], cell_ref(line_no, n + 2));
        t.total_output[i] = parse_double(row[n + 2], cell_ref(line_no, n + 3));
        if (t.total_output[i] < 0.0)
            throw ParseError(cell_ref(line_no, n + 3) + ": negative total output");
        for (size_t a = 0; a < aux_names.size(); ++a)
            t.aux[aux_names[a]].push_back(
                parse_double(row[n + 3 + a], cell_ref(line_no, n + 4 + a)));
    }

    // Footer rows carry n values; any further fields must be empty padding.
    auto parse_footer = [&](size_t idx, const std::string& label, std::vector<double>& out) {
        const size_t line_no = idx + 1;
        const auto row = split_csv_line(lines[idx]);
        if (row.empty() || row[0] != label)
            throw ParseError("line " + std::to_string(line_no) + ": expected '" +
                             label + "' row");
        if (row.size() < n + 1)
            throw ParseError("line " + std::to_string(line_no) + ": '" + label +
                             "' row too short");
        for (size_t j = 0; j < n; ++j)
            out[j] = parse_double(row[j + 1], cell_ref(line_no, j + 2));
        for (size_t c = n + 1; c < row.size(); ++c)
            if (!row[c].empty())
                throw ParseError(cell_ref(line_no, c + 1) +
                                 ": unexpected value in '" + label + "' row");
    };
    parse_footer(n + 1, "value_added", t.value_added);
    std::vector<double> total_input(n);
    parse_footer(n + 2, "total_input", total_input);
    for (size_t j = 0; j < n; ++j) {
        if (total_input[j] != t.total_output[j])
            throw ParseError("total_input for sector " + t.sectors[j] + " (" +
                             format_double(total_input[j]) +
                             ") does not match total_output (" +
                             format_double(t.total_output[j]) + ")");
    }
    for (size_t k = n + 3; k < lines.size(); ++k)
        if (!lines[k].empty())
            throw ParseError("line " + std::to_string(k + 1) + ": unexpected content");
    return t;
}

std::vector<double> json_vector(const nlohmann::json& j, const std::string& key, size_t n) {
    if (!j.contains(key) || !j[key].is_array())
        throw ParseError("missing or non-array key '" + key + "'");
    if (j[key].size() != n)
        throw ParseError("key '" + key + "': expected " + std::to_string(n) +
                         " entries, found " + std::to_string(j[key].size()));
    std::vector<double> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& v = j[key][i];
        if (!v.is_number())
            throw ParseError("key '" + key + "', entry " + std::to_string(i + 1) +
                             ": not a number");
        double d = v.get<double>();
        if (!std::isfinite(d))
            throw ParseError("key '" + key + "', entry " + std::to_string(i + 1) +
                             ": non-finite value");
        out.push_back(d);
    }
    return out;
}

IOTable parse_json(const std::string& text, const ParseOptions& options) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("table JSON must be an object");
    if (!j.contains("sectors") || !j["sectors"].is_array())
        throw ParseError("missing or non-array key 'sectors'");

    IOTable t;
    for (const auto& s : j["sectors"]) {
        if (!s.is_string())
            throw ParseError("sector codes must be strings");
        t.sectors.push_back(s.get<std::string>());
    }
    const size_t n = t.sectors.size();
    if (n == 0)
        throw ParseError("empty table: no sectors");
    check_sectors(t.sectors);
    check_registry(t.sectors, options);

    if (!j.contains("W") || !j["W"].is_array() || j["W"].size() != n)
        throw ParseError("key 'W' must be an array of " + std::to_string(n) + " rows");
    for (size_t i = 0; i < n; ++i) {
        if (!j["W"][i].is_array() || j["W"][i].size() != n)
            throw ParseError("W row " + std::to_string(i + 1) + ": expected " +
                             std::to_string(n) + " entries");
        std::vector<double> row;
        row.reserve(n);
        for (size_t c = 0; c < n; ++c) {
            const auto& v = j["W"][i][c];
            if (!v.is_number())
                throw ParseError("W row " + std::to_string(i + 1) + ", column " +
                                 std::to_string(c + 1) + ": not a number");
            double w = v.get<double>();
            if (!std::isfinite(w))
                throw ParseError("W row " + std::to_string(i + 1) + ", column " +
                                 std::to_string(c + 1) + ": non-finite value");
            if (w < 0.0)
                throw ParseError("W row " + std::to_string(i + 1) + ", column " +
                                 std::to_string(c + 1) + ": negative intermediate flow");
            row.push_back(w);
        }
        t.intermediate.push_back(std::move(row));
    }
    t.final_use = json_vector(j, "F", n);
    t.value_added = json_vector(j, "X", n);
    t.total_output = json_vector(j, "Y", n);
    for (size_t i = 0; i < n; ++i)
        if (t.total_output[i] < 0.0)
            throw ParseError("Y entry " + std::to_string(i + 1) + ": negative total output");
    if (j.contains("aux")) {
        if (!j["aux"].is_object())
            throw ParseError("key 'aux' must be an object of arrays");
        for (const auto& [name, _] : j["aux"].items())
            t.aux[name] = json_vector(j["aux"], name, n);
    }
    return t;
}

} // namespace

TableFormat format_from_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".csv") return TableFormat::csv;
    if (ext == ".json") return TableFormat::json;
    throw ParseError("cannot deduce table format from '" + path.string() +
                     "' (expected .csv or .json)");
}

IOTable parse_iot(const std::filesystem::path& path, TableFormat format,
                  const ParseOptions& options) {
    try {
        return parse_iot_text(read_file(path), format, options);
    } catch (const RegistryError& e) {
        throw RegistryError(path.string() + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

IOTable parse_iot_text(const std::string& text, TableFormat format,
                       const ParseOptions& options) {
    return format == TableFormat::csv ? parse_csv(text, options)
                                      : parse_json(text, options);
}

std::string serialize_iot(const IOTable& t, TableFormat format) {
    const size_t n = static_cast<size_t>(t.size());
    if (format == TableFormat::json) {
        nlohmann::json j;
        j["sectors"] = t.sectors;
        j["W"] = t.intermediate;
        j["F"] = t.final_use;
        j["X"] = t.value_added;
        j["Y"] = t.total_output;
        j["aux"] = nlohmann::json::object();
        for (const auto& [name, values] : t.aux)
            j["aux"][name] = values;
        return j.dump(2) + "\n";
    }
    std::string out = "sector";
    for (const auto& s : t.sectors) out += "," + s;
    out += ",final_use,total_output";
    for (const auto& [name, _] : t.aux) out += ",aux:" + name;
    out += "\n";
    for (size_t i = 0; i < n; ++i) {
        out += t.sectors[i];
        for (size_t j = 0; j < n; ++j) out += "," + format_double(t.intermediate[i][j]);
        out += "," + format_double(t.final_use[i]);
        out += "," + format_double(t.total_output[i]);
        for (const auto& [_, values] : t.aux) out += "," + format_double(values[i]);
        out += "\n";
    }
    out += "value_added";
    for (size_t j = 0; j < n; ++j) out += "," + format_double(t.value_added[j]);
    out += ",,\n";
    out += "total_input";
    for (size_t j = 0; j < n; ++j) out += "," + format_double(t.total_output[j]);
    out += ",,\n";
    return out;
}

void write_iot(const IOTable& table, const std::filesystem::path& path,
               TableFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path.string());
    out << serialize_iot(table, format);
}

BalanceReport validate_balance(const IOTable& t, double tol_balance) {
    if (!(tol_balance > 0.0))
        throw DomainError("tol_balance must be positive");
    BalanceReport report;
    const size_t n = static_cast<size_t>(t.size());
    for (size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (size_t j = 0; j < n; ++j) row_sum += t.intermediate[i][j];
        double resid = std::abs(t.total_output[i] - (row_sum + t.final_use[i])) /
                       std::max(1.0, std::abs(t.total_output[i]));
        report.max_row_residual = std::max(report.max_row_residual, resid);
        if (resid > tol_balance)
            report.failing_sectors.push_back({t.sectors[i], "row", resid});
    }
    for (size_t j = 0; j < n; ++j) {
        double col_sum = 0.0;
        for (size_t i = 0; i < n; ++i) col_sum += t.intermediate[i][j];
        double resid = std::abs(t.total_output[j] - (col_sum + t.value_added[j])) /
                       std::max(1.0, std::abs(t.total_output[j]));
        report.max_col_residual = std::max(report.max_col_residual, resid);
        if (resid > tol_balance)
            report.failing_sectors.push_back({t.sectors[j], "col", resid});
    }
    report.passed = report.max_row_residual <= tol_balance &&
                    report.max_col_residual <= tol_balance;
    return report;
}

IONetwork to_network(const IOTable& t) {
    const int n = t.size();
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double w = t.intermediate[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (w > 0.0) edges.push_back({i, j, w});
        }
    if (edges.empty())
        throw DomainError("empty network: intermediate matrix has no positive flows");
    return IONetwork(t.sectors, std::move(edges), t.aux);
}

} // namespace ionkit

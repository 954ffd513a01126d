#include "ionkit/report.hpp"
#include "ionkit/errors.hpp"
#include "ionkit/text.hpp"

#include <json.hpp>

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

nlohmann::json log_stats_json(const LogStats& st) {
    nlohmann::json j;
    j["positive_count"] = st.positive_count;
    j["zero_count"] = st.zero_count;
    if (st.positive_count > 0) {
        j["log10_min"] = st.min;
        j["log10_q1"] = st.q1;
        j["log10_median"] = st.median;
        j["log10_q3"] = st.q3;
        j["log10_max"] = st.max;
    }
    return j;
}

} // namespace

std::string edge_list_csv(const IONetwork& g) {
    std::string out = "source,target,weight\n";
    for (const Edge& e : g.edges())
        out += g.node(e.source) + "," + g.node(e.target) + "," +
               format_double(e.weight) + "\n";
    return out;
}

std::string strength_summary_csv(const StrengthSummary& s) {
    std::string out = "node,s_in,s_out,s_total\n";
    for (size_t i = 0; i < s.nodes.size(); ++i)
        out += s.nodes[i] + "," + format_double(s.s_in[i]) + "," +
               format_double(s.s_out[i]) + "," + format_double(s.s_total[i]) + "\n";
    return out;
}

std::string strength_summary_json(const StrengthSummary& s) {
    nlohmann::json j;
    j["nodes"] = s.nodes;
    j["s_in"] = s.s_in;
    j["s_out"] = s.s_out;
    j["s_total"] = s.s_total;
    j["log_stats"]["in"] = log_stats_json(s.in_stats);
    j["log_stats"]["out"] = log_stats_json(s.out_stats);
    j["log_stats"]["total"] = log_stats_json(s.total_stats);
    return j.dump(2) + "\n";
}

std::string balance_report_csv(const BalanceReport& r) {
    std::string out = "sector,axis,residual\n";
    for (const auto& f : r.failing_sectors)
        out += f.sector + "," + f.axis + "," + format_double(f.residual) + "\n";
    out += "max_row,," + format_double(r.max_row_residual) + "\n";
    out += "max_col,," + format_double(r.max_col_residual) + "\n";
    out += std::string("passed,,") + (r.passed ? "true" : "false") + "\n";
    return out;
}

std::string balance_report_json(const BalanceReport& r) {
    nlohmann::json j;
    j["max_row_residual"] = r.max_row_residual;
    j["max_col_residual"] = r.max_col_residual;
    j["passed"] = r.passed;
    j["failing_sectors"] = nlohmann::json::array();
    for (const auto& f : r.failing_sectors)
        j["failing_sectors"].push_back(
            {{"sector", f.sector}, {"axis", f.axis}, {"residual", f.residual}});
    return j.dump(2) + "\n";
}

std::string assort_profile_csv(const std::vector<AssortativityProfileEntry>& entries) {
    // Degenerate types keep their row with empty value/se cells; the JSON
    // rendering carries the error text.
    std::string out = "type,value,se,n\n";
    for (const auto& e : entries) {
        out += to_string(e.type) + ",";
        if (e.estimate) {
            out += format_double(e.estimate->value) + ",";
            out += e.estimate->jackknife_se ? format_double(*e.estimate->jackknife_se) : "";
            out += "," + std::to_string(e.estimate->n_nodes);
        } else {
            out += ",,";
        }
        out += "\n";
    }
    return out;
}

std::string assort_profile_json(const std::vector<AssortativityProfileEntry>& entries) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json row;
        row["type"] = to_string(e.type);
        if (e.estimate) {
            row["value"] = e.estimate->value;
            if (e.estimate->jackknife_se) {
                row["se"] = *e.estimate->jackknife_se;
                nlohmann::json loo = nlohmann::json::array();
                for (const auto& [node, value] : e.estimate->leave_one_out)
                    loo.push_back({{"removed", node}, {"value", value}});
                row["leave_one_out"] = loo;
            }
            row["n"] = e.estimate->n_nodes;
        } else {
            row["error"] = e.error;
        }
        j.push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string assort_leave_one_out_csv(const std::vector<AssortativityProfileEntry>& entries) {
    std::string out = "type,removed_node,value\n";
    for (const auto& e : entries) {
        if (!e.estimate) continue;
        for (const auto& [node, value] : e.estimate->leave_one_out)
            out += to_string(e.type) + "," + node + "," + format_double(value) + "\n";
    }
    return out;
}

std::string rank_table_csv(const RankTable& t) {
    std::string out = "node,score,rank\n";
    for (const auto& row : t.rows)
        out += row.node + "," + format_double(row.score) + "," +
               std::to_string(row.rank) + "\n";
    return out;
}

namespace {

nlohmann::json metadata_json(const ScoreVector& s, const std::string& lambda_source) {
    nlohmann::json j;
    j["kind"] = to_string(s.kind);
    if (s.gamma) j["gamma"] = *s.gamma;
    j["iterations"] = s.iterations;
    j["residual"] = s.residual;
    if (!lambda_source.empty()) j["lambda_source"] = lambda_source;
    return j;
}

} // namespace

std::string score_metadata_json(const ScoreVector& s, const std::string& lambda_source) {
    return metadata_json(s, lambda_source).dump(2) + "\n";
}

std::string rank_table_json(const ScoreVector& s, const RankTable& t,
                            const std::string& lambda_source) {
    nlohmann::json j;
    j["meta"] = metadata_json(s, lambda_source);
    j["k"] = t.k;
    j["ranks"] = nlohmann::json::array();
    for (const auto& row : t.rows)
        j["ranks"].push_back({{"rank", row.rank}, {"node", row.node}, {"score", row.score}});
    return j.dump(2) + "\n";
}

std::string partition_csv(const Partition& p) {
    std::string out = "node,community\n";
    for (size_t i = 0; i < p.nodes.size(); ++i)
        out += p.nodes[i] + "," + std::to_string(p.labels[i]) + "\n";
    return out;
}

std::string partition_json(const Partition& p, ModularityVariant variant) {
    nlohmann::json j;
    j["k"] = p.k;
    j["variant"] = to_string(variant);
    if (p.modularity) j["modularity"] = *p.modularity;
    j["assignment"] = nlohmann::json::array();
    for (size_t i = 0; i < p.nodes.size(); ++i)
        j["assignment"].push_back({{"node", p.nodes[i]}, {"community", p.labels[i]}});
    return j.dump(2) + "\n";
}

Partition parse_partition_csv(const std::filesystem::path& path) {
    const auto lines = split_lines(read_file(path));
    if (lines.empty() || split_csv_line(lines[0]) != std::vector<std::string>{"node", "community"})
        throw ParseError(path.string() + ": expected 'node,community' header");
    std::vector<std::string> nodes;
    std::vector<int> raw;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto cells = split_csv_line(lines[i]);
        if (cells.size() != 2)
            throw ParseError(path.string() + ": line " + std::to_string(i + 1) +
                             ": expected 2 fields");
        nodes.push_back(cells[0]);
        const double label = parse_double(cells[1], path.string() + ": line " +
                                                        std::to_string(i + 1));
        if (label != static_cast<int>(label))
            throw ParseError(path.string() + ": line " + std::to_string(i + 1) +
                             ": community label must be an integer");
        raw.push_back(static_cast<int>(label));
    }
    if (nodes.empty())
        throw ParseError(path.string() + ": empty partition");
    return Partition::from_labels(std::move(nodes), raw);
}

std::string ami_matrix_csv(const AmiMatrix& m) {
    std::string out = "id";
    for (const auto& c : m.col_labels) out += "," + c;
    out += "\n";
    for (size_t i = 0; i < m.row_labels.size(); ++i) {
        out += m.row_labels[i];
        for (double v : m.values[i]) out += "," + format_double(v);
        out += "\n";
    }
    return out;
}

std::string ami_matrix_json(const AmiMatrix& m) {
    nlohmann::json j;
    j["row_labels"] = m.row_labels;
    j["col_labels"] = m.col_labels;
    j["values"] = m.values;
    return j.dump(2) + "\n";
}

AuxiliaryVector parse_aux_csv(const std::filesystem::path& path, const IONetwork& g) {
    const auto lines = split_lines(read_file(path));
    if (lines.empty() || split_csv_line(lines[0]) != std::vector<std::string>{"node", "value"})
        throw ParseError(path.string() + ": expected 'node,value' header");
    std::map<std::string, double> by_node;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const auto cells = split_csv_line(lines[i]);
        if (cells.size() != 2)
            throw ParseError(path.string() + ": line " + std::to_string(i + 1) +
                             ": expected 2 fields");
        if (!by_node.emplace(cells[0], parse_double(cells[1], path.string() + ": line " +
                                                                  std::to_string(i + 1)))
                 .second)
            throw ParseError(path.string() + ": duplicate node " + cells[0]);
    }
    AuxiliaryVector aux;
    aux.values.reserve(static_cast<size_t>(g.node_count()));
    for (const auto& id : g.nodes()) {
        auto it = by_node.find(id);
        if (it == by_node.end())
            throw ParseError(path.string() + ": no value for node " + id);
        aux.values.push_back(it->second);
    }
    return aux;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << content;
    if (!out)
        throw Error("write failed: " + path.string());
}

} // namespace ionkit

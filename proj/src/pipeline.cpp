#include "ionkit/pipeline.hpp"
#include "ionkit/errors.hpp"
#include "ionkit/report.hpp"
#include "ionkit/text.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

namespace ionkit {

namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kAllMeasures = {"strengths", "assort", "pagerank",
                                               "hits", "communities"};

bool is_table_file(const fs::path& p) {
    const auto ext = p.extension().string();
    return ext == ".csv" || ext == ".json";
}

std::string stem_of(const fs::path& p) { return p.stem().string(); }

struct StatusTracker {
    int code = kExitOk;
    void record(int c) { code = std::max(code, c); }
};

void check_config(const RunConfig& cfg) {
    if (cfg.format != "csv" && cfg.format != "json")
        throw DomainError("format must be csv or json, got '" + cfg.format + "'");
    if (!(cfg.tol > 0.0)) throw DomainError("tol must be positive");
    if (!(cfg.tol_balance > 0.0)) throw DomainError("tol-balance must be positive");
    if (cfg.max_iter < 1) throw DomainError("max-iter must be at least 1");
    if (cfg.top_k < 1) throw DomainError("top-k must be at least 1");
    for (double g : cfg.gammas)
        if (!(g >= 0.0 && g <= 1.0))
            throw DomainError("gamma must be in [0, 1], got " + format_double(g));
    for (const auto& m : cfg.measures)
        if (std::find(kAllMeasures.begin(), kAllMeasures.end(), m) == kAllMeasures.end())
            throw DomainError("unknown measure: " + m);
    if (cfg.inputs.empty()) throw DomainError("no inputs given");
}

} // namespace

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<fs::path> files;
    for (const auto& raw : inputs) {
        const fs::path p(raw);
        if (fs::is_directory(p)) {
            std::vector<fs::path> dir_files;
            for (const auto& entry : fs::directory_iterator(p))
                if (entry.is_regular_file() && is_table_file(entry.path()))
                    dir_files.push_back(entry.path());
            std::sort(dir_files.begin(), dir_files.end());
            files.insert(files.end(), dir_files.begin(), dir_files.end());
        } else if (fs::is_regular_file(p)) {
            files.push_back(p);
        } else {
            throw ParseError("no such input: " + raw);
        }
    }
    if (files.empty())
        throw ParseError("inputs matched no table files");
    return files;
}

std::vector<SeriesEntry> discover_series(const std::vector<fs::path>& files) {
    std::vector<SeriesEntry> out;
    for (const auto& f : files) {
        const std::string stem = stem_of(f);
        const auto pos = stem.rfind('_');
        if (pos == std::string::npos || pos == 0 || pos + 1 >= stem.size()) continue;
        const std::string year_text = stem.substr(pos + 1);
        if (!std::all_of(year_text.begin(), year_text.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            continue;
        out.push_back({stem.substr(0, pos), std::stoi(year_text), f});
    }
    std::sort(out.begin(), out.end(), [](const SeriesEntry& a, const SeriesEntry& b) {
        return a.series != b.series ? a.series < b.series : a.year < b.year;
    });
    return out;
}

AuxiliaryVector resolve_aux(const std::string& source, const IOTable& table,
                            const IONetwork& g) {
    if (source == "uniform") return AuxiliaryVector::uniform(g.node_count());
    if (source == "value_added") return AuxiliaryVector{table.value_added};
    if (source.rfind("aux:", 0) == 0) {
        const std::string name = source.substr(4);
        auto it = table.aux.find(name);
        if (it == table.aux.end())
            throw DomainError("table has no auxiliary column '" + name + "'");
        return AuxiliaryVector{it->second};
    }
    if (source.rfind("file:", 0) == 0)
        return parse_aux_csv(source.substr(5), g);
    throw DomainError("unknown aux source '" + source +
                      "' (expected uniform, value_added, aux:<name> or file:<path>)");
}

namespace {

struct OutputWriter {
    const RunConfig& cfg;

    fs::path path(const std::string& name) const { return cfg.out_dir / name; }

    void emit(const std::string& name, const std::string& content) const {
        write_text_file(path(name), content);
    }
};

void run_strengths(const OutputWriter& w, const IONetwork& g, const std::string& id) {
    const auto summary = strength_summary(g);
    if (w.cfg.format == "json")
        w.emit(id + "_strengths.json", strength_summary_json(summary));
    else
        w.emit(id + "_strengths.csv", strength_summary_csv(summary));
    // Chord-diagram tooling consumes the raw edge list; always CSV.
    w.emit(id + "_edges.csv", edge_list_csv(g));
}

void run_assort(const OutputWriter& w, const IONetwork& g, const std::string& id) {
    const auto profile = assortativity_profile(g, w.cfg.with_jackknife);
    if (w.cfg.format == "json") {
        w.emit(id + "_assort.json", assort_profile_json(profile));
    } else {
        w.emit(id + "_assort.csv", assort_profile_csv(profile));
        if (w.cfg.with_jackknife)
            w.emit(id + "_assort_loo.csv", assort_leave_one_out_csv(profile));
    }
}

void run_pagerank(const OutputWriter& w, const IOTable& table, const IONetwork& g,
                  const std::string& id) {
    const auto lambda = resolve_aux(w.cfg.aux_source, table, g);
    const int k = std::min(w.cfg.top_k, g.node_count());
    for (double gamma : w.cfg.gammas) {
        const auto scores = extended_pagerank(g, gamma, lambda,
                                              {w.cfg.tol, w.cfg.max_iter});
        const auto ranks = top_k(scores, k);
        const std::string base = id + "_pagerank_gamma" + format_double(gamma);
        if (w.cfg.format == "json") {
            w.emit(base + ".json", rank_table_json(scores, ranks, w.cfg.aux_source));
        } else {
            w.emit(base + ".csv", rank_table_csv(ranks));
            w.emit(base + "_meta.json", score_metadata_json(scores, w.cfg.aux_source));
        }
    }
}

void run_hits(const OutputWriter& w, const IONetwork& g, const std::string& id) {
    const auto [hub, authority] = weighted_hits(g, {w.cfg.tol, w.cfg.max_iter});
    const int k = std::min(w.cfg.top_k, g.node_count());
    const auto hub_ranks = top_k(hub, k);
    const auto auth_ranks = top_k(authority, k);
    if (w.cfg.format == "json") {
        w.emit(id + "_hub.json", rank_table_json(hub, hub_ranks, ""));
        w.emit(id + "_authority.json", rank_table_json(authority, auth_ranks, ""));
    } else {
        w.emit(id + "_hub.csv", rank_table_csv(hub_ranks));
        w.emit(id + "_authority.csv", rank_table_csv(auth_ranks));
        w.emit(id + "_hits_meta.json", score_metadata_json(hub, ""));
    }
}

void run_communities(const OutputWriter& w, const IONetwork& g, const std::string& id) {
    const auto partition = greedy_communities(g, w.cfg.variant);
    if (w.cfg.format == "json")
        w.emit(id + "_communities.json", partition_json(partition, w.cfg.variant));
    else
        w.emit(id + "_communities.csv", partition_csv(partition));
}

int run_measures_batch(const RunConfig& cfg, const std::vector<std::string>& measures,
                       std::ostream& diag) {
    const auto files = expand_inputs(cfg.inputs);
    const OutputWriter writer{cfg};
    StatusTracker status;
    for (const auto& file : files) {
        const std::string id = stem_of(file);
        IOTable table;
        try {
            table = parse_iot(file, format_from_path(file), {cfg.strict_registry});
        } catch (const ParseError& e) {
            diag << "error: " << e.what() << "\n";
            status.record(kExitUsage);
            continue;
        }
        for (const auto& measure : measures) {
            try {
                const IONetwork g = to_network(table);
                if (measure == "strengths") run_strengths(writer, g, id);
                else if (measure == "assort") run_assort(writer, g, id);
                else if (measure == "pagerank") run_pagerank(writer, table, g, id);
                else if (measure == "hits") run_hits(writer, g, id);
                else if (measure == "communities") run_communities(writer, g, id);
            } catch (const Error& e) {
                diag << "error: " << id << " (" << measure << "): " << e.what() << "\n";
                status.record(kExitFailure);
            }
        }
    }
    return status.code;
}

int run_validate(const RunConfig& cfg, std::ostream& diag) {
    const auto files = expand_inputs(cfg.inputs);
    const OutputWriter writer{cfg};
    StatusTracker status;
    for (const auto& file : files) {
        const std::string id = stem_of(file);
        try {
            const IOTable table = parse_iot(file, format_from_path(file),
                                            {cfg.strict_registry});
            const BalanceReport report = validate_balance(table, cfg.tol_balance);
            writer.emit(id + "_balance." + cfg.format,
                        cfg.format == "json" ? balance_report_json(report)
                                             : balance_report_csv(report));
            if (!report.passed) {
                diag << id << ": balance check failed";
                for (const auto& f : report.failing_sectors)
                    diag << " [" << f.sector << " " << f.axis << " "
                         << format_double(f.residual) << "]";
                diag << "\n";
                status.record(kExitFailure);
            }
        } catch (const ParseError& e) {
            diag << "error: " << e.what() << "\n";
            status.record(kExitUsage);
        }
    }
    return status.code;
}

int run_ami(const RunConfig& cfg, std::ostream& diag) {
    std::vector<std::pair<std::string, Partition>> partitions;
    for (const auto& raw : cfg.inputs) {
        const fs::path p(raw);
        if (!fs::is_regular_file(p))
            throw ParseError("no such input: " + raw);
        partitions.emplace_back(stem_of(p), parse_partition_csv(p));
    }
    if (partitions.empty())
        throw ParseError("ami needs at least one partition file");
    try {
        const AmiMatrix m = ami_matrix(partitions);
        const OutputWriter writer{cfg};
        writer.emit(std::string("ami_matrix.") + cfg.format,
                    cfg.format == "json" ? ami_matrix_json(m) : ami_matrix_csv(m));
    } catch (const DomainError& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_compare(const RunConfig& cfg, std::ostream& diag) {
    if (cfg.series_a.empty() || cfg.series_b.empty())
        throw DomainError("compare needs --series-a and --series-b");
    const auto files = expand_inputs(cfg.inputs);
    const auto entries = discover_series(files);

    const auto collect = [&entries](const std::string& series) {
        std::map<int, fs::path> years;
        for (const auto& e : entries)
            if (e.series == series && !years.emplace(e.year, e.path).second)
                throw ParseError("duplicate table for " + series + " year " +
                                 std::to_string(e.year));
        return years;
    };
    const std::map<int, fs::path> years_a = collect(cfg.series_a);
    const std::map<int, fs::path> years_b =
        cfg.series_b == cfg.series_a ? years_a : collect(cfg.series_b);
    if (years_a.empty())
        throw ParseError("no tables found for series " + cfg.series_a);
    if (years_b.empty())
        throw ParseError("no tables found for series " + cfg.series_b);

    std::string missing;
    for (const auto& [year, _] : years_a)
        if (!years_b.count(year))
            missing += " " + cfg.series_b + "_" + std::to_string(year);
    for (const auto& [year, _] : years_b)
        if (!years_a.count(year))
            missing += " " + cfg.series_a + "_" + std::to_string(year);
    if (!missing.empty())
        throw ParseError("series are not aligned on years; missing:" + missing);

    std::vector<std::pair<std::string, Partition>> parts_a, parts_b;
    for (const auto& [year, path_a] : years_a) {
        const auto detect = [&](const fs::path& path) {
            const IOTable table = parse_iot(path, format_from_path(path),
                                            {cfg.strict_registry});
            return greedy_communities(to_network(table), cfg.variant);
        };
        try {
            parts_a.emplace_back(std::to_string(year), detect(path_a));
            parts_b.emplace_back(std::to_string(year), detect(years_b.at(year)));
        } catch (const Error& e) {
            diag << "error: year " << year << ": " << e.what() << "\n";
            return kExitFailure;
        }
    }
    try {
        const AmiMatrix m = two_series_ami(parts_a, parts_b);
        const OutputWriter writer{cfg};
        writer.emit("compare_" + cfg.series_a + "_" + cfg.series_b + "_ami." + cfg.format,
                    cfg.format == "json" ? ami_matrix_json(m) : ami_matrix_csv(m));
    } catch (const DomainError& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& diag) {
    try {
        check_config(cfg);
        if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir);

        if (cfg.command == "validate") return run_validate(cfg, diag);
        if (cfg.command == "ami") return run_ami(cfg, diag);
        if (cfg.command == "compare") return run_compare(cfg, diag);
        if (cfg.command == "analyze")
            return run_measures_batch(cfg, cfg.measures.empty() ? kAllMeasures
                                                                : cfg.measures,
                                      diag);
        const auto it = std::find(kAllMeasures.begin(), kAllMeasures.end(), cfg.command);
        if (it != kAllMeasures.end())
            return run_measures_batch(cfg, {cfg.command}, diag);
        throw DomainError("unknown command: " + cfg.command);
    } catch (const ParseError& e) {
        diag << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        diag << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace ionkit

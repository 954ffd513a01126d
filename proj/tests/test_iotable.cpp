#include "ionkit/errors.hpp"
#include "ionkit/iotable.hpp"
#include "ionkit/registry.hpp"

#include <doctest.h>

#include <cmath>

using namespace ionkit;

namespace {

const char* kTwoSectorCsv =
    "sector,01,02,final_use,total_output\n"
    "01,0,1,3,4\n"
    "02,2,0,2,4\n"
    "value_added,1,3,,\n"
    "total_input,4,4,,\n";

IOTable balanced_table(std::vector<std::string> sectors,
                       std::vector<std::vector<double>> w,
                       std::vector<double> f) {
    // Y and X derived from the identities, so the table balances exactly.
    IOTable t;
    t.sectors = std::move(sectors);
    t.intermediate = std::move(w);
    t.final_use = std::move(f);
    const size_t n = t.sectors.size();
    t.total_output.assign(n, 0.0);
    t.value_added.assign(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (size_t j = 0; j < n; ++j) row += t.intermediate[i][j];
        t.total_output[i] = row + t.final_use[i];
    }
    for (size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (size_t i = 0; i < n; ++i) col += t.intermediate[i][j];
        t.value_added[j] = t.total_output[j] - col;
    }
    return t;
}

IOTable scaled(const IOTable& t, double c) {
    IOTable s = t;
    for (auto& row : s.intermediate)
        for (double& v : row) v *= c;
    for (double& v : s.final_use) v *= c;
    for (double& v : s.value_added) v *= c;
    for (double& v : s.total_output) v *= c;
    return s;
}

} // namespace

TEST_SUITE("iotable") {

TEST_CASE("parses the two-sector csv example") {
    const IOTable t = parse_iot_text(kTwoSectorCsv, TableFormat::csv);
    CHECK(t.size() == 2);
    CHECK(t.sectors == std::vector<std::string>{"01", "02"});
    CHECK(t.intermediate == std::vector<std::vector<double>>{{0, 1}, {2, 0}});
    CHECK(t.final_use == std::vector<double>{3, 2});
    CHECK(t.value_added == std::vector<double>{1, 3});
    CHECK(t.total_output == std::vector<double>{4, 4});
    CHECK(t.aux.empty());
}

TEST_CASE("csv round-trip reproduces every field") {
    IOTable t = parse_iot_text(kTwoSectorCsv, TableFormat::csv);
    t.aux["export"] = {7.25, 9.5};
    const std::string text = serialize_iot(t, TableFormat::csv);
    const IOTable back = parse_iot_text(text, TableFormat::csv);
    CHECK(back.sectors == t.sectors);
    CHECK(back.intermediate == t.intermediate);
    CHECK(back.final_use == t.final_use);
    CHECK(back.value_added == t.value_added);
    CHECK(back.total_output == t.total_output);
    CHECK(back.aux == t.aux);
    // Serialized text is a fixed point.
    CHECK(serialize_iot(back, TableFormat::csv) == text);
}

TEST_CASE("file write and parse round-trip") {
    namespace fs = std::filesystem;
    IOTable t = parse_iot_text(kTwoSectorCsv, TableFormat::csv);
    t.aux["export"] = {1.5, 2.25};
    for (TableFormat fmt : {TableFormat::csv, TableFormat::json}) {
        const fs::path path = fs::temp_directory_path() /
                              (fmt == TableFormat::csv ? "ionkit_rt.csv" : "ionkit_rt.json");
        write_iot(t, path, fmt);
        const IOTable back = parse_iot(path, fmt);
        CHECK(back.sectors == t.sectors);
        CHECK(back.intermediate == t.intermediate);
        CHECK(back.aux == t.aux);
        fs::remove(path);
    }
    CHECK(format_from_path("x/CHN_1995.csv") == TableFormat::csv);
    CHECK(format_from_path("x/CHN_1995.json") == TableFormat::json);
    CHECK_THROWS_AS(format_from_path("x/CHN_1995.xlsx"), ParseError);
}

TEST_CASE("json round-trip reproduces every field") {
    IOTable t = parse_iot_text(kTwoSectorCsv, TableFormat::csv);
    t.aux["export"] = {0.1, 123456.789};
    const std::string text = serialize_iot(t, TableFormat::json);
    const IOTable back = parse_iot_text(text, TableFormat::json);
    CHECK(back.sectors == t.sectors);
    CHECK(back.intermediate == t.intermediate);
    CHECK(back.final_use == t.final_use);
    CHECK(back.value_added == t.value_added);
    CHECK(back.total_output == t.total_output);
    CHECK(back.aux == t.aux);
}

TEST_CASE("negative intermediate entry is rejected with its position") {
    const char* text =
        "sector,01,02,final_use,total_output\n"
        "01,0,-1,3,2\n"
        "02,2,0,2,4\n"
        "value_added,1,3,,\n"
        "total_input,2,4,,\n";
    CHECK_THROWS_WITH_AS(parse_iot_text(text, TableFormat::csv),
                         doctest::Contains("line 2, column 3"), ParseError);
}

TEST_CASE("empty intermediate block is rejected") {
    CHECK_THROWS_WITH_AS(
        parse_iot_text("sector,final_use,total_output\n", TableFormat::csv),
        doctest::Contains("empty table"), ParseError);
}

TEST_CASE("malformed inputs name the offending cell") {
    SUBCASE("missing final_use column") {
        CHECK_THROWS_AS(parse_iot_text("sector,01,total_output\n01,1,2\n",
                                       TableFormat::csv),
                        ParseError);
    }
    SUBCASE("non-numeric cell") {
        const char* text =
            "sector,01,02,final_use,total_output\n"
            "01,0,abc,3,4\n"
            "02,2,0,2,4\n"
            "value_added,1,3,,\n"
            "total_input,4,4,,\n";
        CHECK_THROWS_WITH_AS(parse_iot_text(text, TableFormat::csv),
                             doctest::Contains("line 2, column 3"), ParseError);
    }
    SUBCASE("row width mismatch (non-square block)") {
        const char* text =
            "sector,01,02,final_use,total_output\n"
            "01,0,1,3,4\n"
            "02,2,0,2\n"
            "value_added,1,3,,\n"
            "total_input,4,4,,\n";
        CHECK_THROWS_WITH_AS(parse_iot_text(text, TableFormat::csv),
                             doctest::Contains("line 3"), ParseError);
    }
    SUBCASE("data row out of header order") {
        const char* text =
            "sector,01,02,final_use,total_output\n"
            "02,0,1,3,4\n"
            "01,2,0,2,4\n"
            "value_added,1,3,,\n"
            "total_input,4,4,,\n";
        CHECK_THROWS_AS(parse_iot_text(text, TableFormat::csv), ParseError);
    }
    SUBCASE("duplicate sector code") {
        const char* text =
            "sector,01,01,final_use,total_output\n"
            "01,0,1,3,4\n"
            "01,2,0,2,4\n"
            "value_added,1,3,,\n"
            "total_input,4,4,,\n";
        CHECK_THROWS_WITH_AS(parse_iot_text(text, TableFormat::csv),
                             doctest::Contains("duplicate sector"), ParseError);
    }
    SUBCASE("total_input row disagrees with total_output") {
        const char* text =
            "sector,01,02,final_use,total_output\n"
            "01,0,1,3,4\n"
            "02,2,0,2,4\n"
            "value_added,1,3,,\n"
            "total_input,4,5,,\n";
        CHECK_THROWS_WITH_AS(parse_iot_text(text, TableFormat::csv),
                             doctest::Contains("total_input"), ParseError);
    }
    SUBCASE("non-finite cells are rejected") {
        const char* text =
            "sector,01,02,final_use,total_output\n"
            "01,0,inf,3,4\n"
            "02,2,0,2,4\n"
            "value_added,1,3,,\n"
            "total_input,4,4,,\n";
        CHECK_THROWS_WITH_AS(parse_iot_text(text, TableFormat::csv),
                             doctest::Contains("non-finite"), ParseError);
    }
    SUBCASE("json with non-square W") {
        CHECK_THROWS_AS(parse_iot_text(R"({"sectors":["01","02"],
            "W":[[0,1]],"F":[1,1],"X":[1,1],"Y":[2,2]})", TableFormat::json),
                        ParseError);
    }
    SUBCASE("json with negative W entry") {
        CHECK_THROWS_WITH_AS(parse_iot_text(R"({"sectors":["01","02"],
            "W":[[0,1],[-2,0]],"F":[1,1],"X":[1,1],"Y":[2,2]})", TableFormat::json),
                             doctest::Contains("row 2, column 1"), ParseError);
    }
}

TEST_CASE("strict registry rejects unknown codes and accepts catalog codes") {
    const char* unknown =
        "sector,ZZ,02,final_use,total_output\n"
        "ZZ,0,1,3,4\n"
        "02,2,0,2,4\n"
        "value_added,1,3,,\n"
        "total_input,4,4,,\n";
    CHECK_THROWS_AS(parse_iot_text(unknown, TableFormat::csv, {true}), RegistryError);
    CHECK_NOTHROW(parse_iot_text(unknown, TableFormat::csv, {false}));
    CHECK_NOTHROW(parse_iot_text(kTwoSectorCsv, TableFormat::csv, {true}));
}

TEST_CASE("registry catalogs the 44 sectors") {
    const auto& reg = stan_registry();
    CHECK(reg.size() == 44);
    CHECK(reg.contains("01"));
    CHECK(reg.contains("44"));
    CHECK_FALSE(reg.contains("45"));
    CHECK(reg.name_of("25") == "Construction");
    CHECK(reg.name_of("26") == "Wholesale and retail trade; repair of motor vehicles");
    CHECK(reg.at(0).first == "01");
    CHECK(reg.at(43).first == "44");
    CHECK_THROWS_AS(reg.name_of("99"), LookupError);
    CHECK_THROWS_AS(reg.at(44), LookupError);
}

TEST_CASE("balance validation accepts tables balanced by construction") {
    const IOTable t = balanced_table({"01", "02"}, {{0, 1}, {2, 0}}, {3, 2});
    CHECK(t.total_output == std::vector<double>{4, 4});
    CHECK(t.value_added == std::vector<double>{2, 3});
    const BalanceReport r = validate_balance(t, 1e-6);
    CHECK(r.passed);
    CHECK(r.failing_sectors.empty());
    CHECK(r.max_row_residual == 0.0);
    CHECK(r.max_col_residual == 0.0);
}

TEST_CASE("balance validation reports a perturbed sector on the row axis") {
    IOTable t = balanced_table({"01", "02"}, {{0, 1}, {2, 0}}, {3, 2});
    t.total_output[0] += 10.0;
    const BalanceReport r = validate_balance(t, 1e-6);
    CHECK_FALSE(r.passed);
    REQUIRE(!r.failing_sectors.empty());
    CHECK(r.failing_sectors[0].sector == "01");
    CHECK(r.failing_sectors[0].axis == "row");
    // The same perturbation breaks the column identity for sector 01 too.
    bool col_hit = false;
    for (const auto& f : r.failing_sectors)
        col_hit = col_hit || (f.sector == "01" && f.axis == "col");
    CHECK(col_hit);
}

TEST_CASE("all-zero table passes balance") {
    IOTable t;
    t.sectors = {"01", "02"};
    t.intermediate = {{0, 0}, {0, 0}};
    t.final_use = {0, 0};
    t.value_added = {0, 0};
    t.total_output = {0, 0};
    CHECK(validate_balance(t, 1e-6).passed);
}

TEST_CASE("balance flag is preserved under positive rescaling") {
    const IOTable good = balanced_table({"01", "02", "03"},
                                        {{0, 5, 2}, {1, 0, 4}, {3, 2, 0}},
                                        {10, 20, 30});
    IOTable bad = good;
    bad.total_output[1] += 0.5;
    for (double c : {1.0, 7.0, 1e6}) {
        CHECK(validate_balance(scaled(good, c), 1e-6).passed);
        CHECK_FALSE(validate_balance(scaled(bad, c), 1e-6).passed);
    }
    // Shrinking keeps balanced tables balanced as well.
    CHECK(validate_balance(scaled(good, 1e-3), 1e-6).passed);
}

TEST_CASE("to_network reads edges off the intermediate matrix") {
    IOTable t = balanced_table({"01", "02"}, {{0, 1}, {2, 0}}, {3, 2});
    t.aux["export"] = {5, 6};
    const IONetwork g = to_network(t);
    CHECK(g.node_count() == 2);
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0].source == 0);
    CHECK(g.edges()[0].target == 1);
    CHECK(g.edges()[0].weight == 1.0);
    CHECK(g.edges()[1].source == 1);
    CHECK(g.edges()[1].target == 0);
    CHECK(g.edges()[1].weight == 2.0);
    CHECK(g.node_attrs().at("export") == std::vector<double>{5, 6});
}

TEST_CASE("to_network keeps self-loops and isolated nodes") {
    const IOTable t = balanced_table({"01", "02"}, {{5, 0}, {0, 0}}, {1, 1});
    const IONetwork g = to_network(t);
    CHECK(g.node_count() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].source == 0);
    CHECK(g.edges()[0].target == 0);
    CHECK(g.total_strength("02") == 0.0);
}

TEST_CASE("to_network rejects an all-zero matrix") {
    const IOTable t = balanced_table({"01", "02"}, {{0, 0}, {0, 0}}, {1, 1});
    CHECK_THROWS_WITH_AS(to_network(t), doctest::Contains("empty network"), DomainError);
}

TEST_CASE("to_network preserves total flow") {
    const IOTable t = balanced_table({"01", "02", "03"},
                                     {{1.5, 2, 0}, {0, 0, 3.25}, {4, 0, 0.5}},
                                     {1, 2, 3});
    double flow = 0.0;
    for (const auto& row : t.intermediate)
        for (double w : row) flow += w;
    CHECK(to_network(t).total_weight() == doctest::Approx(flow).epsilon(1e-15));
}

} // TEST_SUITE

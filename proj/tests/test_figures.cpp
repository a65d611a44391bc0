#include "bohr/figures.hpp"

#include "bohr/problems.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

fs::path out_dir() {
    const fs::path dir = fs::temp_directory_path() / "bohr_figures_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t col(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        REQUIRE_MESSAGE(false, ("missing column " + name));
        return 0;
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) csv.header.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        REQUIRE(row.size() == csv.header.size());
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

} // namespace

TEST_CASE("figure id catalog") {
    const auto& ids = bohr::figure_ids();
    REQUIRE(ids.size() == 8);
    CHECK(bohr::is_root_figure("roots-2.13"));
    CHECK_FALSE(bohr::is_root_figure("disk-wedge"));
    CHECK(bohr::default_r_max("roots-2.13") == 0.999);
    CHECK(bohr::default_r_max("disk-koebe-f0") == 0.7);
    CHECK(bohr::default_r_max("disk-wedge") == 0.95);
}

TEST_CASE("root curve CSV has the sample-count contract and embedded roots") {
    const fs::path path = out_dir() / "roots213.csv";
    bohr::FigureSpec spec;
    spec.figure_id = "roots-2.13";
    spec.samples = 16;
    bohr::emit_root_curve(spec, path.string());

    const Csv csv = parse_csv(slurp(path));
    REQUIRE(csv.rows.size() == 16);
    const double root = bohr::solve_radius("thm2_7", bohr::ProblemParams{}).computed_root;
    const std::size_t root_col = csv.col("root_1");
    const std::size_t target_col = csv.col("target_1");
    const std::size_t lhs_col = csv.col("lhs_1");
    for (const auto& row : csv.rows) {
        CHECK(std::abs(row[root_col] - root) <= 1e-10);
        CHECK(row[target_col] == bohr::problem("thm2_7").target);
    }
    // CSV round-trip: 17-significant-digit decimals reparse to the same double
    const double r3 = csv.rows[2][csv.col("r")];
    CHECK(csv.rows[2][lhs_col] == bohr::defining_lhs("thm2_7", bohr::ProblemParams{}, r3));
}

TEST_CASE("two-curve figure carries both problems") {
    const fs::path path = out_dir() / "roots1415.csv";
    bohr::FigureSpec spec;
    spec.figure_id = "roots-2.14-2.15";
    spec.samples = 32;
    bohr::emit_root_curve(spec, path.string());
    const Csv csv = parse_csv(slurp(path));
    REQUIRE(csv.rows.size() == 32);
    const double root1 = bohr::solve_radius("thm2_8_H", bohr::ProblemParams{}).computed_root;
    const double root2 = bohr::solve_radius("thm2_8_G", bohr::ProblemParams{}).computed_root;
    CHECK(std::abs(csv.rows[0][csv.col("root_1")] - root1) <= 1e-10);
    CHECK(std::abs(csv.rows[0][csv.col("root_2")] - root2) <= 1e-10);
}

TEST_CASE("figure emission is deterministic") {
    for (const std::string& id : bohr::figure_ids()) {
        bohr::FigureSpec spec;
        spec.figure_id = id;
        spec.samples = 48;
        const fs::path a = out_dir() / (id + "_a.csv");
        const fs::path b = out_dir() / (id + "_b.csv");
        bohr::emit_figure(spec, a.string());
        bohr::emit_figure(spec, b.string());
        CHECK(slurp(a) == slurp(b));
        spec.format = bohr::FigureFormat::Svg;
        const fs::path sa = out_dir() / (id + "_a.svg");
        const fs::path sb = out_dir() / (id + "_b.svg");
        bohr::emit_figure(spec, sa.string());
        bohr::emit_figure(spec, sb.string());
        CHECK(slurp(sa) == slurp(sb));
        const std::string svg = slurp(sa);
        CHECK(svg.rfind("<?xml", 0) == 0);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
}

TEST_CASE("disk image grid centers and Koebe extreme points") {
    const fs::path path = out_dir() / "disk_koebe.csv";
    bohr::FigureSpec spec;
    spec.figure_id = "disk-koebe-f0";
    const bohr::DiskGrid grid = bohr::make_disk_grid(0.7, 16, 4);
    bohr::emit_disk_image(spec, grid, path.string());
    const Csv csv = parse_csv(slurp(path));
    REQUIRE(csv.rows.size() == 1 + 4 * 16);

    // center row: z = 0 maps to 0 for both maps
    CHECK(csv.rows[0][csv.col("r")] == 0.0);
    CHECK(csv.rows[0][csv.col("re_koebe")] == 0.0);
    CHECK(csv.rows[0][csv.col("im_koebe")] == 0.0);
    CHECK(csv.rows[0][csv.col("re_f0")] == 0.0);

    const std::size_t rc = csv.col("r");
    const std::size_t tc = csv.col("theta");
    const std::size_t re = csv.col("re_koebe");
    const std::size_t im = csv.col("im_koebe");
    int checked = 0;
    for (const auto& row : csv.rows) {
        const double r = row[rc];
        if (r == 0.0) continue;
        if (row[tc] == 0.0) {
            CHECK(std::abs(row[re] - r / ((1.0 - r) * (1.0 - r))) <= 1e-12);
            CHECK(std::abs(row[im]) <= 1e-12);
            ++checked;
        } else if (std::abs(row[tc] - M_PI) < 1e-9) {
            CHECK(std::abs(row[re] + r / ((1.0 + r) * (1.0 + r))) <= 1e-12);
            CHECK(std::abs(row[im]) <= 1e-12);
            ++checked;
        }
    }
    CHECK(checked == 8); // theta = 0 and pi on each of the 4 circles
}

TEST_CASE("wedge disk centers carry the t parameters") {
    const fs::path path = out_dir() / "disk_wedge.csv";
    bohr::FigureSpec spec;
    spec.figure_id = "disk-wedge";
    bohr::emit_disk_image(spec, bohr::make_disk_grid(0.95, 8, 2), path.string());
    const Csv csv = parse_csv(slurp(path));
    CHECK(csv.rows[0][csv.col("re_F_1_1")] == 1.0);
    CHECK(csv.rows[0][csv.col("re_F_1.5_20")] == 20.0);
    CHECK(csv.rows[0][csv.col("re_F_2_3")] == 3.0);
}

TEST_CASE("log-modulus scaling keeps disk images bounded") {
    bohr::FigureSpec spec;
    spec.figure_id = "disk-h0-g0";
    spec.log_modulus = true;
    const fs::path path = out_dir() / "disk_h0_log.csv";
    bohr::emit_disk_image(spec, bohr::make_disk_grid(0.9, 8, 3), path.string());
    const Csv csv = parse_csv(slurp(path));
    for (const auto& row : csv.rows) {
        for (std::size_t i = 2; i < row.size(); ++i) CHECK(std::abs(row[i]) < 50.0);
    }
}

TEST_CASE("emit rejects unknown ids and unwritable paths") {
    bohr::FigureSpec spec;
    spec.figure_id = "roots-9.99";
    CHECK_THROWS_AS(bohr::emit_root_curve(spec, (out_dir() / "x.csv").string()),
                    std::invalid_argument);
    spec.figure_id = "roots-2.13";
    CHECK_THROWS_AS(bohr::emit_root_curve(spec, "/nonexistent-dir/x.csv"), bohr::IoError);
    spec.samples = 8; // below the contract minimum
    CHECK_THROWS_AS(bohr::emit_root_curve(spec, (out_dir() / "x.csv").string()),
                    std::invalid_argument);
}

TEST_CASE("summary rows cover the catalog with deviations recorded") {
    const auto rows = bohr::summary_rows();
    REQUIRE(rows.size() == 27);

    std::map<std::string, const bohr::SummaryRow*> by_key;
    for (const auto& r : rows) by_key[r.id + "|" + r.params] = &r;

    const auto* thm27 = by_key.at("thm2_7|");
    CHECK(std::abs(thm27->root - 0.08526609071383986) <= 1e-10);
    REQUIRE(thm27->deviation.has_value());
    CHECK(*thm27->deviation < 1e-4);
    CHECK(thm27->sharpness_passed);

    const auto* sub316 = by_key.at("subord_beta|beta=0.1875");
    REQUIRE(sub316->closed_form.has_value());
    CHECK(*sub316->closed_form == doctest::Approx(9.0 - 4.0 * std::sqrt(5.0)).epsilon(1e-13));

    const auto* t12g = by_key.at("thm2_12_G|");
    REQUIRE(t12g->deviation.has_value());
    CHECK(*t12g->deviation == doctest::Approx(0.0137597).epsilon(1e-3));
    CHECK_FALSE(t12g->notes.empty());

    const auto* degenerate = by_key.at("wedge_improved|alpha=2,beta=1");
    CHECK(std::isnan(degenerate->root));
    REQUIRE(degenerate->closed_form.has_value());

    for (const auto& r : rows) CHECK_MESSAGE(r.sharpness_passed, (r.id + "|" + r.params));
}

TEST_CASE("summary table emits all three formats deterministically") {
    const fs::path j1 = out_dir() / "table1.json";
    const fs::path j2 = out_dir() / "table2.json";
    bohr::emit_summary_table(bohr::TableFormat::Json, j1.string());
    bohr::emit_summary_table(bohr::TableFormat::Json, j2.string());
    const std::string json_text = slurp(j1);
    CHECK(json_text == slurp(j2));
    CHECK(json_text.find("\"schema\": \"bohr-report/1\"") != std::string::npos);
    CHECK(json_text.find("thm2_12_G") != std::string::npos);

    const fs::path c = out_dir() / "table.csv";
    bohr::emit_summary_table(bohr::TableFormat::Csv, c.string());
    const std::string csv_text = slurp(c);
    CHECK(csv_text.rfind("id,params,root,", 0) == 0);

    const fs::path m = out_dir() / "table.md";
    bohr::emit_summary_table(bohr::TableFormat::Md, m.string());
    CHECK(slurp(m).rfind("| id |", 0) == 0);
}

#include "bohr/figures.hpp"

#include "bohr/catalog.hpp"
#include "bohr/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace bohr {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

std::string num(double x, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, x);
    return buf;
}

struct CurveFigure {
    const char* figure_id;
    std::vector<std::string> problems;
};

const std::vector<CurveFigure>& curve_figures() {
    static const std::vector<CurveFigure> figs = {
        {"roots-2.13", {"thm2_7"}},
        {"roots-2.14-2.15", {"thm2_8_H", "thm2_8_G"}},
        {"roots-2.20-2.21", {"thm2_12_H", "thm2_12_G"}},
        {"roots-2.16-2.17", {"thm2_9_H", "thm2_9_G"}},
        {"roots-2.19", {"thm2_11"}},
    };
    return figs;
}

struct DiskMapEntry {
    std::string name;
    ExtremalMap map;
};

std::vector<DiskMapEntry> disk_maps(const std::string& figure_id) {
    if (figure_id == "disk-koebe-f0") {
        return {{"koebe", ExtremalMap::koebe()}, {"f0", ExtremalMap::f0()}};
    }
    if (figure_id == "disk-h0-g0") {
        return {{"h0", ExtremalMap::h0_factor()}, {"g0", ExtremalMap::g0_factor()}};
    }
    if (figure_id == "disk-wedge") {
        return {{"F_1_1", ExtremalMap::wedge(1.0, 1.0)},
                {"F_1.5_20", ExtremalMap::wedge(1.5, 20.0)},
                {"F_2_3", ExtremalMap::wedge(2.0, 3.0)}};
    }
    throw std::invalid_argument("unknown disk figure id: " + figure_id);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

Complex scaled_image(const ExtremalMap& m, Complex z, bool log_modulus) {
    const Complex w = m.eval(z);
    if (!log_modulus) return w;
    const double mod = std::abs(w);
    if (mod == 0.0) return w;
    return w * (std::log1p(mod) / mod);
}

// --- SVG helpers -----------------------------------------------------------

struct SvgCanvas {
    std::ostringstream body;
    double width;
    double height;

    SvgCanvas(double w, double h) : width(w), height(h) {}

    void line(double x1, double y1, double x2, double y2, const char* stroke,
              const char* extra = "") {
        body << "  <line x1=\"" << num(x1, "%.4f") << "\" y1=\"" << num(y1, "%.4f")
             << "\" x2=\"" << num(x2, "%.4f") << "\" y2=\"" << num(y2, "%.4f")
             << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"" << extra << "/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const char* stroke) {
        if (pts.size() < 2) return;
        body << "  <polyline fill=\"none\" stroke=\"" << stroke
             << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) {
            body << num(x, "%.4f") << "," << num(y, "%.4f") << " ";
        }
        body << "\"/>\n";
    }

    void circle(double cx, double cy, double r, const char* fill) {
        body << "  <circle cx=\"" << num(cx, "%.4f") << "\" cy=\"" << num(cy, "%.4f")
             << "\" r=\"" << num(r, "%.4f") << "\" fill=\"" << fill << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, int size = 12) {
        body << "  <text x=\"" << num(x, "%.4f") << "\" y=\"" << num(y, "%.4f")
             << "\" font-family=\"monospace\" font-size=\"" << size << "\">" << s
             << "</text>\n";
    }

    std::string render() const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
            << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
            << "\">\n"
            << "  <rect width=\"" << width << "\" height=\"" << height
            << "\" fill=\"white\"/>\n"
            << body.str() << "</svg>\n";
        return out.str();
    }
};

const char* kCurveColors[] = {"#1f77b4", "#d62728"};

} // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {
        "roots-2.13", "roots-2.14-2.15", "roots-2.20-2.21", "roots-2.16-2.17",
        "roots-2.19", "disk-koebe-f0",   "disk-h0-g0",      "disk-wedge",
    };
    return ids;
}

bool is_root_figure(const std::string& figure_id) {
    return figure_id.rfind("roots-", 0) == 0;
}

double default_r_max(const std::string& figure_id) {
    if (is_root_figure(figure_id)) return 0.999;
    // The Koebe-type images grow like exp(4r/(1-r)); past r ~ 0.7 the outer
    // circles dwarf everything else.
    if (figure_id == "disk-wedge") return 0.95;
    return 0.7;
}

DiskGrid make_disk_grid(double r_max, int angles, int circles) {
    if (!(r_max > 0.0) || !(r_max < 1.0)) {
        throw std::invalid_argument("make_disk_grid: r_max must lie in (0,1)");
    }
    if (angles < 4 || circles < 1) {
        throw std::invalid_argument("make_disk_grid: need angles >= 4 and circles >= 1");
    }
    DiskGrid grid;
    grid.radii.reserve(static_cast<std::size_t>(circles));
    for (int k = 1; k <= circles; ++k) {
        grid.radii.push_back(r_max * static_cast<double>(k) / circles);
    }
    grid.angles.reserve(static_cast<std::size_t>(angles));
    for (int j = 0; j < angles; ++j) {
        grid.angles.push_back(kTwoPi * static_cast<double>(j) / angles);
    }
    return grid;
}

void emit_root_curve(const FigureSpec& spec, const std::string& output_path) {
    const CurveFigure* fig = nullptr;
    for (const CurveFigure& f : curve_figures()) {
        if (spec.figure_id == f.figure_id) {
            fig = &f;
            break;
        }
    }
    if (fig == nullptr) throw std::invalid_argument("unknown root figure id: " + spec.figure_id);
    if (spec.samples < 16) throw std::invalid_argument("emit_root_curve: samples must be >= 16");
    const double r_max = spec.r_max > 0.0 ? spec.r_max : default_r_max(spec.figure_id);
    if (!(r_max < 1.0)) throw std::invalid_argument("emit_root_curve: r_max must be < 1");

    const ProblemParams params;
    std::vector<double> targets;
    std::vector<double> roots;
    for (const std::string& id : fig->problems) {
        targets.push_back(problem(id).target);
        roots.push_back(solve_radius(id, params).computed_root);
    }

    if (spec.format == FigureFormat::Csv) {
        std::ofstream out = open_out(output_path);
        out << "r";
        for (std::size_t k = 1; k <= fig->problems.size(); ++k) out << ",lhs_" << k;
        for (std::size_t k = 1; k <= fig->problems.size(); ++k) out << ",target_" << k;
        for (std::size_t k = 1; k <= fig->problems.size(); ++k) out << ",root_" << k;
        out << "\n";
        for (int i = 1; i <= spec.samples; ++i) {
            const double r = r_max * static_cast<double>(i) / spec.samples;
            out << num(r);
            for (const std::string& id : fig->problems) {
                out << "," << num(defining_lhs(id, params, r));
            }
            for (double t : targets) out << "," << num(t);
            for (double root : roots) out << "," << num(root);
            out << "\n";
        }
        finish_out(out, output_path);
        return;
    }

    // SVG: clip the y-range to a few multiples of the largest target so the
    // crossings stay visible against the boundary blow-up.
    const double x0 = 60, y0 = 30, plot_w = 620, plot_h = 400;
    const double y_max = 3.0 * *std::max_element(targets.begin(), targets.end());
    SvgCanvas svg(x0 + plot_w + 40, y0 + plot_h + 50);
    const auto to_x = [&](double r) { return x0 + plot_w * r / r_max; };
    const auto to_y = [&](double v) { return y0 + plot_h * (1.0 - v / y_max); };

    svg.line(x0, y0 + plot_h, x0 + plot_w, y0 + plot_h, "#000000"); // x axis
    svg.line(x0, y0, x0, y0 + plot_h, "#000000");                   // y axis
    for (int t = 0; t <= 4; ++t) {
        const double r = r_max * t / 4.0;
        svg.line(to_x(r), y0 + plot_h, to_x(r), y0 + plot_h + 5, "#000000");
        svg.text(to_x(r) - 12, y0 + plot_h + 20, num(r, "%.3g"), 11);
        const double v = y_max * t / 4.0;
        svg.line(x0 - 5, to_y(v), x0, to_y(v), "#000000");
        svg.text(8, to_y(v) + 4, num(v, "%.3g"), 11);
    }
    for (std::size_t k = 0; k < fig->problems.size(); ++k) {
        const std::string& id = fig->problems[k];
        std::vector<std::pair<double, double>> run;
        for (int i = 1; i <= spec.samples; ++i) {
            const double r = r_max * static_cast<double>(i) / spec.samples;
            const double v = defining_lhs(id, params, r);
            if (std::isfinite(v) && v <= y_max) {
                run.emplace_back(to_x(r), to_y(v));
            } else {
                svg.polyline(run, kCurveColors[k % 2]);
                run.clear();
            }
        }
        svg.polyline(run, kCurveColors[k % 2]);
        svg.line(x0, to_y(targets[k]), x0 + plot_w, to_y(targets[k]), "#555555",
                 " stroke-dasharray=\"4 3\"");
        svg.circle(to_x(roots[k]), to_y(targets[k]), 4.0, kCurveColors[k % 2]);
        svg.text(to_x(roots[k]) + 6, to_y(targets[k]) - 6,
                 id + ": r=" + num(roots[k], "%.5g"), 11);
    }
    svg.text(x0, y0 + plot_h + 40, spec.figure_id + "  (lhs curves, targets, roots)", 12);

    std::ofstream out = open_out(output_path);
    out << svg.render();
    finish_out(out, output_path);
}

void emit_disk_image(const FigureSpec& spec, const DiskGrid& grid,
                     const std::string& output_path) {
    const auto maps = disk_maps(spec.figure_id);
    if (grid.radii.empty() || grid.angles.empty()) {
        throw std::invalid_argument("emit_disk_image: empty grid");
    }
    for (std::size_t k = 1; k < grid.radii.size(); ++k) {
        if (!(grid.radii[k] > grid.radii[k - 1])) {
            throw std::invalid_argument("emit_disk_image: radii must be strictly increasing");
        }
    }
    if (!(grid.radii.back() < 1.0) || !(grid.radii.front() > 0.0)) {
        throw std::invalid_argument("emit_disk_image: radii must lie in (0,1)");
    }

    if (spec.format == FigureFormat::Csv) {
        std::ofstream out = open_out(output_path);
        out << "r,theta";
        for (const auto& m : maps) out << ",re_" << m.name << ",im_" << m.name;
        out << "\n";
        const auto row = [&](double r, double theta) {
            const Complex z = std::polar(r, theta);
            out << num(r) << "," << num(theta);
            for (const auto& m : maps) {
                const Complex w = scaled_image(m.map, z, spec.log_modulus);
                out << "," << num(w.real()) << "," << num(w.imag());
            }
            out << "\n";
        };
        row(0.0, 0.0); // grid center
        for (double r : grid.radii) {
            for (double theta : grid.angles) row(r, theta);
        }
        finish_out(out, output_path);
        return;
    }

    // SVG: one panel per map, each auto-scaled to its own data.
    const double panel = 320.0, pad = 10.0;
    SvgCanvas svg(maps.size() * (panel + pad) + pad, panel + 2 * pad + 20);
    for (std::size_t mi = 0; mi < maps.size(); ++mi) {
        double max_mod = 0.0;
        for (double r : grid.radii) {
            for (double theta : grid.angles) {
                const Complex w =
                    scaled_image(maps[mi].map, std::polar(r, theta), spec.log_modulus);
                max_mod = std::max(max_mod, std::abs(w));
            }
        }
        if (max_mod == 0.0) max_mod = 1.0;
        const double cx = pad + mi * (panel + pad) + panel / 2.0;
        const double cy = pad + panel / 2.0;
        const double scale = (panel / 2.0 - 10.0) / max_mod;
        for (double r : grid.radii) {
            std::vector<std::pair<double, double>> pts;
            pts.reserve(grid.angles.size() + 1);
            for (double theta : grid.angles) {
                const Complex w =
                    scaled_image(maps[mi].map, std::polar(r, theta), spec.log_modulus);
                pts.emplace_back(cx + scale * w.real(), cy - scale * w.imag());
            }
            pts.push_back(pts.front()); // close the circle image
            svg.polyline(pts, kCurveColors[0]);
        }
        const Complex w0 = scaled_image(maps[mi].map, Complex(0.0), spec.log_modulus);
        svg.circle(cx + scale * w0.real(), cy - scale * w0.imag(), 2.5, "#d62728");
        svg.text(pad + mi * (panel + pad) + 4, panel + 2 * pad + 12, maps[mi].name, 12);
    }
    std::ofstream out = open_out(output_path);
    out << svg.render();
    finish_out(out, output_path);
}

void emit_figure(const FigureSpec& spec, const std::string& output_path) {
    if (is_root_figure(spec.figure_id)) {
        emit_root_curve(spec, output_path);
        return;
    }
    const double r_max = spec.r_max > 0.0 ? spec.r_max : default_r_max(spec.figure_id);
    const int angles = std::max(spec.samples, 16);
    emit_disk_image(spec, make_disk_grid(r_max, angles), output_path);
}

std::vector<SummaryRow> summary_rows(std::size_t order) {
    struct Instance {
        std::string id;
        ProblemParams params;
        std::string desc;
    };
    std::vector<Instance> instances;
    for (const std::string& id : list_problems()) {
        ProblemParams p;
        if (id == "classical_phi") {
            for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                p.a = a;
                instances.push_back({id, p, "a=" + num(a, "%.6g")});
            }
        } else if (id == "subord_beta") {
            for (double beta : {0.0, 0.125, 0.1875, 0.21875}) {
                p.beta = beta;
                instances.push_back({id, p, "beta=" + num(beta, "%.6g")});
            }
        } else if (id == "wedge") {
            for (double alpha : {1.0, 1.5, 2.0}) {
                p.alpha = alpha;
                instances.push_back({id, p, "alpha=" + num(alpha, "%.6g")});
            }
        } else if (id == "wedge_improved") {
            const double cases[][2] = {{1.0, 0.0}, {1.5, 0.5}, {2.0, 1.0}};
            for (const auto& c : cases) {
                p.alpha = c[0];
                p.wedge_beta = c[1];
                instances.push_back(
                    {id, p, "alpha=" + num(c[0], "%.6g") + ",beta=" + num(c[1], "%.6g")});
            }
        } else {
            instances.push_back({id, p, ""});
        }
    }

    std::vector<SummaryRow> rows;
    rows.reserve(instances.size());
    for (const Instance& inst : instances) {
        const RadiusProblem& prob = problem(inst.id);
        SummaryRow row;
        row.id = inst.id;
        row.params = inst.desc;
        try {
            const RadiusResult rr = solve_radius(inst.id, inst.params);
            row.root = rr.computed_root;
            row.paper_value = rr.paper_value;
            row.deviation = rr.deviation;
        } catch (const SolverError&) {
            row.root = std::numeric_limits<double>::quiet_NaN();
            row.notes.push_back("radius degenerates to <= 0");
        }
        if (prob.has_closed_form) {
            row.closed_form = closed_form_radius(inst.id, inst.params);
        }
        row.sharpness_passed = check_sharpness(inst.id, inst.params, 1e-9, order).passed;
        if (row.deviation && *row.deviation > 1e-4) {
            row.notes.push_back("computed root deviates from printed value by " +
                                num(*row.deviation, "%.6g"));
        }
        if (!prob.note.empty()) row.notes.push_back(prob.note);
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_summary_table(TableFormat format, const std::string& output_path) {
    const std::vector<SummaryRow> rows = summary_rows();
    std::ofstream out = open_out(output_path);

    const auto opt_str = [](const std::optional<double>& v, const char* spec) {
        return v ? num(*v, spec) : std::string();
    };

    if (format == TableFormat::Json) {
        nlohmann::json doc;
        doc["schema"] = "bohr-report/1";
        nlohmann::json arr = nlohmann::json::array();
        for (const SummaryRow& r : rows) {
            nlohmann::json j;
            j["id"] = r.id;
            j["params"] = r.params;
            if (std::isnan(r.root)) {
                j["root"] = nullptr;
            } else {
                j["root"] = r.root;
            }
            j["closed_form"] = r.closed_form ? nlohmann::json(*r.closed_form)
                                             : nlohmann::json(nullptr);
            j["paper_value"] = r.paper_value ? nlohmann::json(*r.paper_value)
                                             : nlohmann::json(nullptr);
            j["deviation"] = r.deviation ? nlohmann::json(*r.deviation)
                                         : nlohmann::json(nullptr);
            j["sharpness_passed"] = r.sharpness_passed;
            j["notes"] = r.notes;
            arr.push_back(std::move(j));
        }
        doc["rows"] = std::move(arr);
        out << doc.dump(2) << "\n";
    } else if (format == TableFormat::Csv) {
        out << "id,params,root,closed_form,paper_value,deviation,sharpness_passed,notes\n";
        for (const SummaryRow& r : rows) {
            std::string notes;
            for (const std::string& n : r.notes) {
                if (!notes.empty()) notes += "; ";
                notes += n;
            }
            out << r.id << ",\"" << r.params << "\","
                << (std::isnan(r.root) ? std::string() : num(r.root)) << ","
                << opt_str(r.closed_form, "%.17g") << "," << opt_str(r.paper_value, "%.17g")
                << "," << opt_str(r.deviation, "%.17g") << ","
                << (r.sharpness_passed ? "true" : "false") << ",\"" << notes << "\"\n";
        }
    } else {
        out << "| id | params | root | closed_form | paper_value | deviation | sharpness |\n";
        out << "|----|--------|------|-------------|-------------|-----------|----------|\n";
        for (const SummaryRow& r : rows) {
            out << "| " << r.id << " | " << r.params << " | "
                << (std::isnan(r.root) ? std::string("-") : num(r.root, "%.10g")) << " | "
                << (r.closed_form ? num(*r.closed_form, "%.10g") : std::string("-")) << " | "
                << (r.paper_value ? num(*r.paper_value, "%.6g") : std::string("-")) << " | "
                << (r.deviation ? num(*r.deviation, "%.3g") : std::string("-")) << " | "
                << (r.sharpness_passed ? "pass" : "FAIL") << " |\n";
        }
    }
    finish_out(out, output_path);
}

} // namespace bohr

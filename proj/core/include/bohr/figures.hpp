#ifndef BOHR_FIGURES_HPP
#define BOHR_FIGURES_HPP

#include "bohr/problems.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohr {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FigureFormat { Csv, Svg };
enum class TableFormat { Json, Md, Csv };

/// Declarative figure request. samples counts data rows for root curves and
/// angular resolution for disk images; r_max = 0 picks the per-figure
/// default (0.999 for curves, 0.7 for the exp-blow-up disks, 0.95 for the
/// wedge disk).
struct FigureSpec {
    std::string figure_id;
    int samples = 256;
    double r_max = 0.0;
    FigureFormat format = FigureFormat::Csv;
    bool log_modulus = false; // disk images: plot w * log1p(|w|)/|w|
};

/// Polar evaluation grid for disk images.
struct DiskGrid {
    std::vector<double> radii;  // strictly increasing, in (0, r_max]
    std::vector<double> angles; // uniform in [0, 2*pi)
};

/// The eight figure ids, in canonical order.
const std::vector<std::string>& figure_ids();

bool is_root_figure(const std::string& figure_id);

double default_r_max(const std::string& figure_id);

/// `circles` nested radii r_max*k/circles and `angles` uniform angles
/// (even counts hit both theta = 0 and theta = pi).
DiskGrid make_disk_grid(double r_max, int angles, int circles = 8);

/// Root-locating curve: LHS value(s), constant target(s) and solver root(s)
/// on a uniform grid of (0, r_max]. CSV columns:
/// r, lhs_1[, lhs_2], target_1[, target_2], root_1[, root_2].
void emit_root_curve(const FigureSpec& spec, const std::string& output_path);

/// Images of the nested circles |z| = r_k under the figure's maps.
/// CSV columns: r, theta, then re/im per map; the z = 0 image is the first
/// data row.
void emit_disk_image(const FigureSpec& spec, const DiskGrid& grid,
                     const std::string& output_path);

/// Dispatch on figure id (root curves get the sample grid, disk images the
/// default grid built from spec.samples).
void emit_figure(const FigureSpec& spec, const std::string& output_path);

/// One summary row per catalog instance.
struct SummaryRow {
    std::string id;
    std::string params; // e.g. "beta=0.1875"; empty for fixed problems
    double root = 0.0;  // NaN when the radius degenerates to <= 0
    std::optional<double> closed_form;
    std::optional<double> paper_value;
    std::optional<double> deviation;
    bool sharpness_passed = false;
    std::vector<std::string> notes;
};

/// The canonical table: every fixed catalog problem plus representative
/// parameter choices for the parametrized families.
std::vector<SummaryRow> summary_rows(std::size_t order = 64);

void emit_summary_table(TableFormat format, const std::string& output_path);

} // namespace bohr

#endif // BOHR_FIGURES_HPP

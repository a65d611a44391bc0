#ifndef BOHR_PROBLEMS_HPP
#define BOHR_PROBLEMS_HPP

#include "bohr/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bohr {

/// Parameters for the parametrized catalog entries. Each problem reads only
/// the fields it declares; the rest are ignored.
struct ProblemParams {
    double a = 0.5;          // classical_phi: a in [0,1)
    double beta = 0.0;       // subord_beta: beta in [0,1/4)
    double alpha = 1.0;      // wedge, wedge_improved: alpha in [1,2]
    double wedge_beta = 0.0; // wedge_improved: beta in [0,2)
};

/// One catalog entry: a strictly increasing left-hand side on (0,1) whose
/// crossing of `target` defines the radius.
struct RadiusProblem {
    std::string id;
    double target = 0.0;
    bool has_closed_form = false;
    bool parametrized = false;
    /// Printed approximation of the root, where one exists. Metadata only,
    /// never used as an oracle: a few printed values disagree with the root
    /// of their own defining equation, and the equation wins.
    std::optional<double> paper_value;
    /// Free-form caveat carried into reports and the summary table.
    std::string note;
};

struct RadiusResult {
    std::string id;
    double computed_root = 0.0;
    double bracket_width = 0.0;
    Bracket bracket;
    std::optional<double> paper_value;
    std::optional<double> deviation; // |computed_root - paper_value|
};

/// Catalog ids, in canonical order.
const std::vector<std::string>& list_problems();

bool is_problem(const std::string& id);

/// Catalog lookup; throws std::invalid_argument for unknown ids.
const RadiusProblem& problem(const std::string& id);

/// The defining left-hand side at r in (0,1). Parameters are validated
/// (a in [0,1), beta in [0,1/4), alpha in [1,2], wedge_beta in [0,2)).
double defining_lhs(const std::string& id, const ProblemParams& params, double r);

/// Same formula evaluated in extended precision. exp(4r/(1-r)) overflows
/// double for r > ~0.9944; the 80-bit range keeps every catalog LHS finite
/// through r = 0.999, which the monotonicity sweep needs.
long double defining_lhs_ext(const std::string& id, const ProblemParams& params, long double r);

/// Closed-form radius for classical_phi, subord_beta, wedge, wedge_improved.
/// Throws std::invalid_argument for ids without one. For wedge_improved the
/// formula value is returned even when it is <= 0 (beta >= 1 degenerates the
/// disk of validity to a point).
double closed_form_radius(const std::string& id, const ProblemParams& params);

/// Root of the defining equation by bisection on the default bracket.
RadiusResult solve_radius(const std::string& id, const ProblemParams& params,
                          double tol = kDefaultSolverTol);

} // namespace bohr

#endif // BOHR_PROBLEMS_HPP

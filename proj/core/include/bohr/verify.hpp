#ifndef BOHR_VERIFY_HPP
#define BOHR_VERIFY_HPP

#include "bohr/problems.hpp"
#include "bohr/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bohr {

/// Outcome of one executable check. `worst_margin` is the smallest slack
/// observed: target - lhs on grids where the inequality must hold, lhs -
/// target where it must fail, bound - value for coefficient checks. A check
/// passes iff every point satisfies its inequality within `tolerance`.
struct VerificationReport {
    std::string check_id;
    bool passed = false;
    int grid_size = 0;
    double worst_margin = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    int grid_points = 1000;
    std::size_t order = 64;
    double tolerance = 1e-12;  // slack allowed on non-strict inequalities
    double solver_tol = kDefaultSolverTol;
    std::uint64_t seed = 1;
    int fuzz_count = 200;
};

/// A Schwarz function phi(z) = z (c+z)/(1 + conj(c) z) with |c| < 1
/// (or the identity phi(z) = z, the forced extremal case).
struct SchwarzSample {
    Complex c;
    bool identity = false;
    std::string description;
};

/// Coefficients of the sample up to `order`: [0, c, (1-|c|^2), -(1-|c|^2)
/// conj(c), ...]; the identity sample yields [0, 1, 0, ...].
CoeffSeries schwarz_series(const SchwarzSample& s, std::size_t order);

/// Deterministic sample set: forced edge cases (identity, c = 0, boundary
/// magnitudes) followed by seeded area-uniform draws with |c| <= 0.95.
std::vector<SchwarzSample> schwarz_samples(std::uint64_t seed, int count);

/// The left-hand side rebuilt through series-core from the extremal
/// function's coefficients (exponent coefficients -> truncated power sums ->
/// exp), independent of the closed forms in defining_lhs.
double series_lhs(const std::string& id, const ProblemParams& params, std::size_t order,
                  double r);

/// Inequality sweep: lhs <= target on a uniform grid of (0, r*], lhs > target
/// on a grid of (r* + 10 solver_tol, 0.999].
VerificationReport sweep_inequality(const std::string& id, const ProblemParams& params,
                                    int grid_points, const VerifyOptions& opts = {});

/// Sharpness identity at the computed root: the series-rebuilt LHS equals the
/// target within `tol`, and exceeds it at root + 1e-3.
VerificationReport check_sharpness(const std::string& id, const ProblemParams& params,
                                   double tol, std::size_t order = 64);

/// Strict monotonicity of the defining LHS on a uniform grid of (0, 0.999].
VerificationReport check_monotone(const std::string& id, const ProblemParams& params,
                                  int grid_points);

/// Extremal exponent coefficients equal 2 +- 1/n and Koebe coefficients
/// equal n, exactly, for n <= order.
VerificationReport check_coefficient_bounds(std::size_t order);

/// Seeded subordination fuzz: for g = Koebe o phi with phi a Schwarz sample,
/// checks |b_n| <= 4 n d (d = 1/4) for n <= order, and
/// beta + sum |b_n| r_beta^n <= 1/4 + tail at r_beta = closed_form_radius.
VerificationReport subordination_fuzz(std::uint64_t seed, int count, double beta,
                                      std::size_t order, double tolerance = 1e-12);

/// Wedge checks: A_n > 0 for n <= order; beta + sum A_n r^n <= 1 on
/// (0, r_{alpha,beta}] and > 1 just above; series sum agrees with the
/// closed form ((1+r)/(1-r))^alpha - 1.
VerificationReport check_wedge(double alpha, double beta, std::size_t order,
                               int grid_points = 200, double tolerance = 1e-10);

/// thm2_9 only: the bound on the extra factor is exp(1) for every exponent
/// m >= 1, so sweeps at m in {1,2,5} must return identical verdicts.
VerificationReport check_m_independence(const std::string& id, const VerifyOptions& opts = {});

/// The standard battery for one problem id (monotone, sweep, sharpness,
/// plus the id-specific checks).
std::vector<VerificationReport> verify_problem(const std::string& id,
                                               const ProblemParams& params,
                                               const VerifyOptions& opts = {});

/// The full battery over the whole catalog at the default parameter sets,
/// in deterministic order.
std::vector<VerificationReport> verify_all(const VerifyOptions& opts = {});

} // namespace bohr

#endif // BOHR_VERIFY_HPP

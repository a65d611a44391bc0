#ifndef BOHR_SOLVER_HPP
#define BOHR_SOLVER_HPP

#include <functional>
#include <stdexcept>

namespace bohr {

/// Raised on bracketing failures and non-finite function values.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A refined bracket with f(lo) < target <= f(hi).
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

struct RootResult {
    double root = 0.0;          // midpoint of the final bracket
    double bracket_width = 0.0; // hi - lo of the final bracket
    Bracket bracket;            // certified: f(lo) < target <= f(hi)
    int iterations = 0;
};

inline constexpr double kDefaultSolverTol = 1e-12;
inline constexpr double kDefaultBracketLo = 1e-9;
inline constexpr double kDefaultBracketHi = 1.0 - 1e-6;

/// Bisection for a strictly increasing f on [lo, hi]: returns the unique r
/// with f(r) = target. Requires f(lo) < target and f(hi) >= target, tol > 0.
/// Pure and deterministic: identical inputs give bit-identical output.
RootResult solve_increasing(const std::function<double(double)>& f, double target,
                            double lo = kDefaultBracketLo, double hi = kDefaultBracketHi,
                            double tol = kDefaultSolverTol);

/// Illinois-damped secant variant. Faster, never normative: the bisection
/// route above is authoritative, this one exists as a cross-check.
RootResult solve_increasing_illinois(const std::function<double(double)>& f, double target,
                                     double lo = kDefaultBracketLo,
                                     double hi = kDefaultBracketHi,
                                     double tol = kDefaultSolverTol);

} // namespace bohr

#endif // BOHR_SOLVER_HPP

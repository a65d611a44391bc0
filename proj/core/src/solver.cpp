#include "bohr/solver.hpp"

#include <cmath>
#include <string>

namespace bohr {

namespace {

double checked_eval(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    // +inf near the top of the bracket just means "above target" for an
    // increasing LHS (exp(4r/(1-r)) leaves double range well before r = 1);
    // only NaN is unusable.
    if (std::isnan(v)) {
        throw SolverError("solve_increasing: NaN value at f(" + std::to_string(x) + ")");
    }
    return v;
}

Bracket initial_bracket(const std::function<double(double)>& f, double target, double lo,
                        double hi, double tol) {
    if (!(tol > 0.0)) {
        throw SolverError("solve_increasing: tol must be positive");
    }
    if (!(lo < hi)) {
        throw SolverError("solve_increasing: requires lo < hi");
    }
    const double f_lo = checked_eval(f, lo);
    const double f_hi = checked_eval(f, hi);
    if (!(f_lo < target)) {
        throw SolverError("solve_increasing: no sign change, f(lo) = " + std::to_string(f_lo) +
                          " >= target " + std::to_string(target));
    }
    if (!(f_hi >= target)) {
        throw SolverError("solve_increasing: no sign change, f(hi) = " + std::to_string(f_hi) +
                          " < target " + std::to_string(target));
    }
    return Bracket{lo, hi, f_lo, f_hi};
}

} // namespace

RootResult solve_increasing(const std::function<double(double)>& f, double target, double lo,
                            double hi, double tol) {
    Bracket b = initial_bracket(f, target, lo, hi, tol);
    int iterations = 0;
    while (b.hi - b.lo > tol) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break; // bracket at floating-point resolution
        const double fm = checked_eval(f, mid);
        if (fm < target) {
            b.lo = mid;
            b.f_lo = fm;
        } else {
            b.hi = mid;
            b.f_hi = fm;
        }
        ++iterations;
    }
    return RootResult{0.5 * (b.lo + b.hi), b.hi - b.lo, b, iterations};
}

RootResult solve_increasing_illinois(const std::function<double(double)>& f, double target,
                                     double lo, double hi, double tol) {
    Bracket b = initial_bracket(f, target, lo, hi, tol);
    // g_lo/g_hi carry the (possibly damped) secant values; b.f_* stay truthful.
    double g_lo = b.f_lo - target;
    double g_hi = b.f_hi - target;
    int iterations = 0;
    int last_side = 0; // -1 kept lo, +1 kept hi
    while (b.hi - b.lo > tol && iterations < 200) {
        double x = b.lo - g_lo * (b.hi - b.lo) / (g_hi - g_lo);
        // Keep the step strictly interior; fall back to bisection otherwise.
        if (!(x > b.lo) || !(x < b.hi)) x = 0.5 * (b.lo + b.hi);
        const double fx = checked_eval(f, x);
        const double gx = fx - target;
        if (gx < 0.0) {
            b.lo = x;
            b.f_lo = fx;
            g_lo = gx;
            if (last_side == -1) g_hi *= 0.5; // Illinois damping
            last_side = -1;
        } else {
            b.hi = x;
            b.f_hi = fx;
            g_hi = gx;
            if (last_side == +1) g_lo *= 0.5;
            last_side = +1;
        }
        ++iterations;
    }
    return RootResult{0.5 * (b.lo + b.hi), b.hi - b.lo, b, iterations};
}

} // namespace bohr

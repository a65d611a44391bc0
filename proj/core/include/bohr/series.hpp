#ifndef BOHR_SERIES_HPP
#define BOHR_SERIES_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

/// Dense truncated power series. coeff(n) is the coefficient of z^n for
/// 0 <= n <= order(); the truncation degree is fixed at construction.
/// Binary operations require operands of equal order and return a series
/// of that same order (the degree-N truncation of the exact result).
class CoeffSeries {
public:
    /// Zero series of the given truncation degree (order+1 coefficients).
    explicit CoeffSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Takes ownership of a coefficient vector; order = size - 1.
    /// The vector must be non-empty.
    explicit CoeffSeries(std::vector<Complex> coeffs);

    static CoeffSeries from_real(const std::vector<double>& coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }

    Complex& operator[](std::size_t n) { return coeffs_[n]; }
    const Complex& operator[](std::size_t n) const { return coeffs_[n]; }

    std::span<const Complex> coeffs() const { return coeffs_; }

private:
    std::vector<Complex> coeffs_;
};

/// Certificate that the discarded tail of a truncated series is small:
/// if |c_n| <= coefficient_cap for all n > order, then
/// sum_{n > order} |c_n| r^n <= value = coefficient_cap * r^(order+1) / (1 - r).
struct TailBound {
    double coefficient_cap = 0.0;
    double radius = 0.0;
    std::size_t order = 0;
    double value = 0.0;
};

/// Coefficientwise sum. Orders must match.
CoeffSeries add_series(const CoeffSeries& a, const CoeffSeries& b);

/// Cauchy product truncated at the common order. Orders must match.
CoeffSeries mul_series(const CoeffSeries& a, const CoeffSeries& b);

/// Taylor coefficients of exp(c(z)) for a series with c(0) = 0, via the
/// recurrence m b_m = sum_{k=1..m} k c_k b_{m-k}, b_0 = 1.
/// Throws std::invalid_argument if the constant term is nonzero.
CoeffSeries exp_series(const CoeffSeries& c);

/// Degree-N truncation of f(phi(z)). Requires phi(0) = 0 (so the truncated
/// product rule is exact) and equal orders.
CoeffSeries compose_series(const CoeffSeries& f, const CoeffSeries& phi);

/// Truncated majorant sum  sum_{n=0..N} |c_n| r^n  for r in (0,1).
double majorant_sum(const CoeffSeries& c, double r);

/// Horner evaluation of the truncated series at a complex point.
Complex eval_series(const CoeffSeries& c, Complex z);

/// Geometric tail certificate; requires coefficient_cap >= 0 and r in (0,1).
TailBound tail_bound(double coefficient_cap, double r, std::size_t order);

} // namespace bohr

#endif // BOHR_SERIES_HPP

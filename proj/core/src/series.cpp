#include "bohr/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bohr {

namespace {

void require_equal_order(const CoeffSeries& a, const CoeffSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

void require_unit_interval(double r, const char* op) {
    if (!(r > 0.0) || !(r < 1.0)) {
        throw std::domain_error(std::string(op) + ": r must lie in (0,1), got " +
                                std::to_string(r));
    }
}

} // namespace

CoeffSeries::CoeffSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("CoeffSeries: coefficient vector must be non-empty");
    }
}

CoeffSeries CoeffSeries::from_real(const std::vector<double>& coeffs) {
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    return CoeffSeries(std::move(c));
}

CoeffSeries add_series(const CoeffSeries& a, const CoeffSeries& b) {
    require_equal_order(a, b, "add_series");
    CoeffSeries out(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) out[n] = a[n] + b[n];
    return out;
}

CoeffSeries mul_series(const CoeffSeries& a, const CoeffSeries& b) {
    require_equal_order(a, b, "mul_series");
    const std::size_t n = a.order();
    CoeffSeries out(n);
    for (std::size_t m = 0; m <= n; ++m) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k <= m; ++k) acc += a[k] * b[m - k];
        out[m] = acc;
    }
    return out;
}

CoeffSeries exp_series(const CoeffSeries& c) {
    if (c[0] != Complex(0.0)) {
        throw std::invalid_argument("exp_series: constant term must be zero");
    }
    const std::size_t n = c.order();
    CoeffSeries b(n);
    b[0] = 1.0;
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) acc += static_cast<double>(k) * c[k] * b[m - k];
        b[m] = acc / static_cast<double>(m);
    }
    return b;
}

CoeffSeries compose_series(const CoeffSeries& f, const CoeffSeries& phi) {
    require_equal_order(f, phi, "compose_series");
    if (phi[0] != Complex(0.0)) {
        throw std::invalid_argument("compose_series: phi(0) must be zero");
    }
    const std::size_t n = f.order();
    // Horner: g = f_N, then g <- g*phi + f_k for k = N-1 .. 0. Since phi(0) = 0
    // the truncated products lose no terms of degree <= N.
    CoeffSeries g(n);
    g[0] = f[n];
    for (std::size_t k = n; k-- > 0;) {
        g = mul_series(g, phi);
        g[0] += f[k];
    }
    return g;
}

double majorant_sum(const CoeffSeries& c, double r) {
    require_unit_interval(r, "majorant_sum");
    // Horner on the moduli, highest degree first.
    double acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * r + std::abs(c[n]);
    return acc;
}

Complex eval_series(const CoeffSeries& c, Complex z) {
    Complex acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
    return acc;
}

TailBound tail_bound(double coefficient_cap, double r, std::size_t order) {
    if (!(coefficient_cap >= 0.0)) {
        throw std::invalid_argument("tail_bound: coefficient_cap must be >= 0");
    }
    require_unit_interval(r, "tail_bound");
    const double value =
        coefficient_cap * std::pow(r, static_cast<double>(order + 1)) / (1.0 - r);
    return TailBound{coefficient_cap, r, order, value};
}

} // namespace bohr

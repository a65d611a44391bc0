#include "bohr/catalog.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bohr {

namespace {

Complex rotate(Complex z, double theta) {
    if (theta == 0.0) return z;
    return z * std::polar(1.0, theta);
}

} // namespace

ExtremalMap::ExtremalMap(MapKind kind, double a, double alpha, double t, double rotation)
    : kind_(kind), a_(a), alpha_(alpha), t_(t), rotation_(rotation) {}

ExtremalMap ExtremalMap::phi_a(double a, double rotation) {
    if (!(a >= 0.0) || !(a < 1.0)) {
        throw std::domain_error("phi_a: a must lie in [0,1), got " + std::to_string(a));
    }
    return ExtremalMap(MapKind::PhiA, a, 1.0, 1.0, rotation);
}

ExtremalMap ExtremalMap::koebe(double rotation) {
    return ExtremalMap(MapKind::Koebe, 0.0, 1.0, 1.0, rotation);
}

ExtremalMap ExtremalMap::h0_factor(double rotation) {
    return ExtremalMap(MapKind::H0Factor, 0.0, 1.0, 1.0, rotation);
}

ExtremalMap ExtremalMap::g0_factor(double rotation) {
    return ExtremalMap(MapKind::G0Factor, 0.0, 1.0, 1.0, rotation);
}

ExtremalMap ExtremalMap::h0(double rotation) {
    return ExtremalMap(MapKind::H0, 0.0, 1.0, 1.0, rotation);
}

ExtremalMap ExtremalMap::g0(double rotation) {
    return ExtremalMap(MapKind::G0, 0.0, 1.0, 1.0, rotation);
}

ExtremalMap ExtremalMap::f0(double rotation) {
    return ExtremalMap(MapKind::F0, 0.0, 1.0, 1.0, rotation);
}

ExtremalMap ExtremalMap::wedge(double alpha, double t, double rotation) {
    if (!(alpha >= 1.0) || !(alpha <= 2.0)) {
        throw std::domain_error("wedge: alpha must lie in [1,2], got " + std::to_string(alpha));
    }
    if (!(t > 0.0)) {
        throw std::domain_error("wedge: t must be positive, got " + std::to_string(t));
    }
    return ExtremalMap(MapKind::Wedge, 0.0, alpha, t, rotation);
}

Complex ExtremalMap::eval(Complex z) const {
    if (!(std::abs(z) < 1.0)) {
        throw std::domain_error("ExtremalMap::eval: |z| must be < 1");
    }
    z = rotate(z, rotation_);
    const Complex one = 1.0;
    switch (kind_) {
    case MapKind::PhiA:
        return (a_ - z) / (one - a_ * z);
    case MapKind::Koebe:
        return z / ((one - z) * (one - z));
    case MapKind::H0Factor:
        return std::exp(2.0 * z / (one - z)) / (one - z);
    case MapKind::G0Factor:
        return (one - z) * std::exp(2.0 * z / (one - z));
    case MapKind::H0:
        return z * std::exp(2.0 * z / (one - z)) / (one - z);
    case MapKind::G0:
        return z * (one - z) * std::exp(2.0 * z / (one - z));
    case MapKind::F0:
        return z * (one - std::conj(z)) / (one - z) *
               std::exp((4.0 * z / (one - z)).real());
    case MapKind::Wedge:
        // (1+z)/(1-z) has positive real part on the disk, so the principal
        // branch of the power never crosses the cut.
        return t_ * std::pow((one + z) / (one - z), Complex(alpha_));
    }
    throw std::logic_error("ExtremalMap::eval: unreachable");
}

double exponent_coeff(MapKind kind, int n) {
    if (n < 1) {
        throw std::invalid_argument("exponent_coeff: n must be >= 1, got " + std::to_string(n));
    }
    switch (kind) {
    case MapKind::H0Factor:
        return 2.0 + 1.0 / static_cast<double>(n);
    case MapKind::G0Factor:
        return 2.0 - 1.0 / static_cast<double>(n);
    default:
        throw std::invalid_argument("exponent_coeff: kind must be H0Factor or G0Factor");
    }
}

CoeffSeries exponent_series(MapKind kind, std::size_t order) {
    CoeffSeries c(order);
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = exponent_coeff(kind, static_cast<int>(n));
    }
    return c;
}

CoeffSeries phi_a_coeffs(double a, std::size_t order) {
    if (!(a >= 0.0) || !(a < 1.0)) {
        throw std::domain_error("phi_a_coeffs: a must lie in [0,1), got " + std::to_string(a));
    }
    CoeffSeries c(order);
    c[0] = a;
    double power = 1.0; // a^(n-1)
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = -(1.0 - a * a) * power;
        power *= a;
    }
    return c;
}

CoeffSeries koebe_coeffs(std::size_t order) {
    CoeffSeries c(order);
    for (std::size_t n = 0; n <= order; ++n) c[n] = static_cast<double>(n);
    return c;
}

CoeffSeries wedge_coeffs(double alpha, std::size_t order) {
    if (!(alpha >= 1.0) || !(alpha <= 2.0)) {
        throw std::domain_error("wedge_coeffs: alpha must lie in [1,2], got " +
                                std::to_string(alpha));
    }
    CoeffSeries plus(order);  // (1+z)^alpha
    CoeffSeries minus(order); // (1-z)^(-alpha)
    plus[0] = 1.0;
    minus[0] = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        const double dn = static_cast<double>(n);
        plus[n] = plus[n - 1] * (alpha - dn + 1.0) / dn;
        minus[n] = minus[n - 1] * (alpha + dn - 1.0) / dn;
    }
    return mul_series(plus, minus);
}

CoeffSeries map_series(const ExtremalMap& m, std::size_t order) {
    CoeffSeries c(order);
    switch (m.kind()) {
    case MapKind::PhiA:
        c = phi_a_coeffs(m.a(), order);
        break;
    case MapKind::Koebe:
        c = koebe_coeffs(order);
        break;
    case MapKind::H0Factor:
        c = exp_series(exponent_series(MapKind::H0Factor, order));
        break;
    case MapKind::G0Factor:
        c = exp_series(exponent_series(MapKind::G0Factor, order));
        break;
    case MapKind::H0:
    case MapKind::G0: {
        const MapKind factor =
            m.kind() == MapKind::H0 ? MapKind::H0Factor : MapKind::G0Factor;
        const CoeffSeries f = exp_series(exponent_series(factor, order));
        for (std::size_t n = order; n >= 1; --n) c[n] = f[n - 1]; // multiply by z
        c[0] = 0.0;
        break;
    }
    case MapKind::Wedge: {
        c = wedge_coeffs(m.alpha(), order);
        for (std::size_t n = 0; n <= order; ++n) c[n] *= m.t();
        break;
    }
    case MapKind::F0:
        throw std::invalid_argument("map_series: F0 is not analytic");
    }
    // Pre-rotation z -> e^{i theta} z multiplies the n-th coefficient by e^{i n theta}.
    if (m.rotation() != 0.0) {
        for (std::size_t n = 1; n <= order; ++n) {
            c[n] *= std::polar(1.0, m.rotation() * static_cast<double>(n));
        }
    }
    return c;
}

DistanceConstant distance_constant_info(DistanceFamily family) {
    switch (family) {
    case DistanceFamily::H:
        return DistanceConstant{family, 1.0 / (2.0 * std::exp(1.0))};
    case DistanceFamily::G:
        return DistanceConstant{family, 2.0 / std::exp(1.0)};
    case DistanceFamily::F:
        return DistanceConstant{family, std::exp(-2.0)};
    }
    throw std::logic_error("distance_constant_info: unreachable");
}

double distance_constant(DistanceFamily family) {
    return distance_constant_info(family).lower;
}

} // namespace bohr

#ifndef BOHR_CATALOG_HPP
#define BOHR_CATALOG_HPP

#include "bohr/series.hpp"

namespace bohr {

/// The named maps of the catalog.
///
///   PhiA      phi_a(z) = (a - z)/(1 - a z),  a in [0,1)
///   Koebe     z/(1-z)^2
///   H0Factor  h0(z) = exp(2z/(1-z))/(1-z)   = exp(sum (2+1/n) z^n)
///   G0Factor  g0(z) = (1-z) exp(2z/(1-z))   = exp(sum (2-1/n) z^n)
///   H0        z h0(z)
///   G0        z g0(z)
///   F0        z h0(z) conj(g0(z)) = z(1-conj(z))/(1-z) exp(Re(4z/(1-z)))
///             (log-harmonic, not analytic: no Taylor series)
///   Wedge     F_{alpha,t}(z) = t ((1+z)/(1-z))^alpha, alpha in [1,2], t > 0
enum class MapKind { PhiA, Koebe, H0Factor, G0Factor, H0, G0, F0, Wedge };

/// Closed-form evaluator for catalog maps. A rotation angle theta is applied
/// as pre-composition z -> e^{i theta} z. Parameters are validated on
/// construction.
class ExtremalMap {
public:
    static ExtremalMap phi_a(double a, double rotation = 0.0);
    static ExtremalMap koebe(double rotation = 0.0);
    static ExtremalMap h0_factor(double rotation = 0.0);
    static ExtremalMap g0_factor(double rotation = 0.0);
    static ExtremalMap h0(double rotation = 0.0);
    static ExtremalMap g0(double rotation = 0.0);
    static ExtremalMap f0(double rotation = 0.0);
    static ExtremalMap wedge(double alpha, double t, double rotation = 0.0);

    MapKind kind() const { return kind_; }
    /// False only for F0, which has no Taylor series.
    bool analytic() const { return kind_ != MapKind::F0; }
    double a() const { return a_; }
    double alpha() const { return alpha_; }
    double t() const { return t_; }
    double rotation() const { return rotation_; }

    /// Closed-form value at |z| < 1 (std::domain_error otherwise).
    Complex eval(Complex z) const;

private:
    ExtremalMap(MapKind kind, double a, double alpha, double t, double rotation);

    MapKind kind_;
    double a_;
    double alpha_;
    double t_;
    double rotation_;
};

/// Exponent coefficients of the extremal factors: 2 + 1/n for H0Factor,
/// 2 - 1/n for G0Factor. Requires n >= 1 and one of those two kinds.
double exponent_coeff(MapKind kind, int n);

/// The exponent series [0, w_1, ..., w_N] with w_n = exponent_coeff(kind, n).
CoeffSeries exponent_series(MapKind kind, std::size_t order);

/// Coefficients of phi_a: [a, -(1-a^2), -(1-a^2) a, -(1-a^2) a^2, ...].
CoeffSeries phi_a_coeffs(double a, std::size_t order);

/// Coefficients of the Koebe function: coefficient of z^n is n.
CoeffSeries koebe_coeffs(std::size_t order);

/// Coefficients A_n of ((1+z)/(1-z))^alpha with A_0 = 1, built as the
/// product of the binomial series (1+z)^alpha and (1-z)^(-alpha).
/// Requires alpha in [1,2].
CoeffSeries wedge_coeffs(double alpha, std::size_t order);

/// Taylor coefficients of an analytic catalog map (rotation included).
/// Throws std::invalid_argument for F0.
CoeffSeries map_series(const ExtremalMap& m, std::size_t order);

/// The three boundary-distance families and their sharp lower constants.
enum class DistanceFamily { H, G, F };

struct DistanceConstant {
    DistanceFamily family;
    double lower;       // 1/(2e), 2/e, 1/e^2
    double upper = 1.0;
};

DistanceConstant distance_constant_info(DistanceFamily family);

/// Convenience: the sharp lower constant of the family.
double distance_constant(DistanceFamily family);

} // namespace bohr

#endif // BOHR_CATALOG_HPP

#include "bohr/problems.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace bohr {

namespace {

enum class Key {
    ClassicalPhi,
    SubordBeta,
    AliH,
    AliG,
    AliF,
    Thm27,
    Thm28H,
    Thm28G,
    Thm29H,
    Thm29G,
    Thm210,
    Thm211,
    Thm212H,
    Thm212G,
    Wedge,
    WedgeImproved,
};

struct Entry {
    const char* id;
    Key key;
    int target_kind;          // 0: 1, 1: 1/(2e), 2: 2/e, 3: 1/e^2
    bool has_closed_form;
    bool parametrized;
    double paper_value;       // NaN when absent
    const char* note;
};

constexpr double kNone = std::numeric_limits<double>::quiet_NaN();

const char* kInconsistentNote =
    "printed value disagrees with the root of the defining equation; "
    "the equation is taken as authoritative";

const char* kHMajorantNote =
    "printed value disagrees with the root of the defining equation; the equation is "
    "taken as authoritative (its |H| term uses the linear coefficient-sum bound, which "
    "is not implied by the exponential product form)";

const char* kGMajorantNote =
    "printed value disagrees with the root of the defining equation; the equation is "
    "taken as authoritative (its |G| term uses the linear coefficient-sum bound, which "
    "is not implied by the exponential product form)";

// Canonical catalog order.
const Entry kEntries[] = {
    {"classical_phi", Key::ClassicalPhi, 0, true, true, kNone, ""},
    {"subord_beta", Key::SubordBeta, 0, true, true, kNone, ""},
    {"ali_H", Key::AliH, 1, false, false, 0.1222, ""},
    {"ali_G", Key::AliG, 2, false, false, 0.3659, ""},
    {"ali_f", Key::AliF, 3, false, false, 0.09078, ""},
    {"thm2_7", Key::Thm27, 3, false, false, 0.08528, ""},
    {"thm2_8_H", Key::Thm28H, 1, false, false, 0.09735, kInconsistentNote},
    {"thm2_8_G", Key::Thm28G, 2, false, false, 0.30539, ""},
    {"thm2_9_H", Key::Thm29H, 1, false, false, 0.0566, ""},
    {"thm2_9_G", Key::Thm29G, 2, false, false, 0.1764, kInconsistentNote},
    {"thm2_10", Key::Thm210, 3, false, false, 0.04181, ""},
    {"thm2_11", Key::Thm211, 3, false, false, 0.0592, ""},
    {"thm2_12_H", Key::Thm212H, 1, false, false, 0.1073, kHMajorantNote},
    {"thm2_12_G", Key::Thm212G, 2, false, false, 0.3063, kGMajorantNote},
    {"wedge", Key::Wedge, 0, true, true, kNone, ""},
    {"wedge_improved", Key::WedgeImproved, 0, true, true, kNone, ""},
};

double target_value(int kind) {
    switch (kind) {
    case 0: return 1.0;
    case 1: return 1.0 / (2.0 * std::exp(1.0));
    case 2: return 2.0 / std::exp(1.0);
    case 3: return std::exp(-2.0);
    }
    throw std::logic_error("target_value: unreachable");
}

const Entry& entry(const std::string& id) {
    for (const Entry& e : kEntries) {
        if (id == e.id) return e;
    }
    throw std::invalid_argument("unknown problem id: " + id);
}

void validate_params(Key key, const ProblemParams& p) {
    switch (key) {
    case Key::ClassicalPhi:
        if (!(p.a >= 0.0) || !(p.a < 1.0)) {
            throw std::domain_error("classical_phi: a must lie in [0,1), got " +
                                    std::to_string(p.a));
        }
        break;
    case Key::SubordBeta:
        if (!(p.beta >= 0.0) || !(p.beta < 0.25)) {
            throw std::domain_error("subord_beta: beta must lie in [0,1/4), got " +
                                    std::to_string(p.beta));
        }
        break;
    case Key::Wedge:
    case Key::WedgeImproved:
        if (!(p.alpha >= 1.0) || !(p.alpha <= 2.0)) {
            throw std::domain_error("wedge: alpha must lie in [1,2], got " +
                                    std::to_string(p.alpha));
        }
        if (key == Key::WedgeImproved && (!(p.wedge_beta >= 0.0) || !(p.wedge_beta < 2.0))) {
            throw std::domain_error("wedge_improved: beta must lie in [0,2), got " +
                                    std::to_string(p.wedge_beta));
        }
        break;
    default:
        break; // fixed-parameter entries
    }
}

template <class Real>
Real lhs_value(Key key, const ProblemParams& p, Real r) {
    const Real one = 1;
    const Real e1 = std::exp(Real(1));
    switch (key) {
    case Key::ClassicalPhi: {
        const Real a = p.a;
        return a + (one - a * a) * r / (one - a * r);
    }
    case Key::SubordBeta:
        return 4 * (Real(p.beta) + r / ((one - r) * (one - r)));
    case Key::AliH:
        return r / (one - r) * std::exp(2 * r / (one - r));
    case Key::AliG:
        return r * (one - r) * std::exp(2 * r / (one - r));
    case Key::AliF:
        return r * std::exp(4 * r / (one - r));
    case Key::Thm27:
        return r / (one - r) * std::exp(4 * r / (one - r));
    case Key::Thm28H:
        return r / ((one - r) * (one - r)) * std::exp(2 * r / (one - r));
    case Key::Thm28G:
        return r * std::exp(2 * r / (one - r));
    case Key::Thm29H:
        return e1 * r / (one - r) * std::exp(2 * r / (one - r));
    case Key::Thm29G:
        return e1 * r * (one - r) * std::exp(2 * r / (one - r));
    case Key::Thm210:
        return e1 * r * std::exp(4 * r / (one - r));
    case Key::Thm211:
        return r * (one + std::exp(4 * r / (one - r)));
    case Key::Thm212H:
        return r * (2 * r / (one - r) - std::log(one - r) +
                    std::exp(2 * r / (one - r)) / (one - r));
    case Key::Thm212G:
        return r * (2 * r / (one - r) + std::log(one - r) +
                    (one - r) * std::exp(2 * r / (one - r)));
    case Key::Wedge:
        return std::pow((one + r) / (one - r), Real(p.alpha)) - one;
    case Key::WedgeImproved:
        return std::pow((one + r) / (one - r), Real(p.alpha)) - one + Real(p.wedge_beta);
    }
    throw std::logic_error("lhs_value: unreachable");
}

} // namespace

const std::vector<std::string>& list_problems() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Entry& e : kEntries) v.emplace_back(e.id);
        return v;
    }();
    return ids;
}

bool is_problem(const std::string& id) {
    for (const Entry& e : kEntries) {
        if (id == e.id) return true;
    }
    return false;
}

const RadiusProblem& problem(const std::string& id) {
    static const std::map<std::string, RadiusProblem> catalog = [] {
        std::map<std::string, RadiusProblem> m;
        for (const Entry& e : kEntries) {
            RadiusProblem p;
            p.id = e.id;
            p.target = target_value(e.target_kind);
            p.has_closed_form = e.has_closed_form;
            p.parametrized = e.parametrized;
            if (!std::isnan(e.paper_value)) p.paper_value = e.paper_value;
            p.note = e.note;
            m.emplace(p.id, std::move(p));
        }
        return m;
    }();
    const auto it = catalog.find(id);
    if (it == catalog.end()) throw std::invalid_argument("unknown problem id: " + id);
    return it->second;
}

double defining_lhs(const std::string& id, const ProblemParams& params, double r) {
    const Entry& e = entry(id);
    validate_params(e.key, params);
    if (!(r > 0.0) || !(r < 1.0)) {
        throw std::domain_error("defining_lhs: r must lie in (0,1), got " + std::to_string(r));
    }
    return lhs_value<double>(e.key, params, r);
}

long double defining_lhs_ext(const std::string& id, const ProblemParams& params, long double r) {
    const Entry& e = entry(id);
    validate_params(e.key, params);
    if (!(r > 0.0L) || !(r < 1.0L)) {
        throw std::domain_error("defining_lhs_ext: r must lie in (0,1)");
    }
    return lhs_value<long double>(e.key, params, r);
}

double closed_form_radius(const std::string& id, const ProblemParams& params) {
    const Entry& e = entry(id);
    validate_params(e.key, params);
    switch (e.key) {
    case Key::ClassicalPhi:
        return 1.0 / (1.0 + 2.0 * params.a);
    case Key::SubordBeta: {
        const double b = params.beta;
        return (3.0 - 4.0 * b - std::sqrt(8.0) * std::sqrt(1.0 - 2.0 * b)) / (1.0 - 4.0 * b);
    }
    case Key::Wedge: {
        const double u = std::pow(2.0, 1.0 / params.alpha);
        return (u - 1.0) / (u + 1.0);
    }
    case Key::WedgeImproved: {
        const double u = std::pow(2.0 - params.wedge_beta, 1.0 / params.alpha);
        return (u - 1.0) / (u + 1.0);
    }
    default:
        throw std::invalid_argument("closed_form_radius: " + id + " has no closed form");
    }
}

RadiusResult solve_radius(const std::string& id, const ProblemParams& params, double tol) {
    const Entry& e = entry(id);
    validate_params(e.key, params);
    const double target = target_value(e.target_kind);
    const auto f = [&](double r) { return lhs_value<double>(e.key, params, r); };
    const RootResult res = solve_increasing(f, target, kDefaultBracketLo, kDefaultBracketHi, tol);
    RadiusResult out;
    out.id = id;
    out.computed_root = res.root;
    out.bracket_width = res.bracket_width;
    out.bracket = res.bracket;
    if (!std::isnan(e.paper_value)) {
        out.paper_value = e.paper_value;
        out.deviation = std::abs(res.root - e.paper_value);
    }
    return out;
}

} // namespace bohr

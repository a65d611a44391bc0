#include "bohr/problems.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using bohr::ProblemParams;

namespace {

// Roots of the defining equations, frozen from an independent 40-digit
// bisection run. The four entries marked `printed_consistent = false` are
// the catalog problems whose printed approximations disagree with their own
// equation.
struct FrozenRoot {
    const char* id;
    double root;
    bool printed_consistent;
};

const FrozenRoot kFrozen[] = {
    {"ali_H", 0.12221587719931193, true},
    {"ali_G", 0.36590234120737286, true},
    {"ali_f", 0.09077627822686759, true},
    {"thm2_7", 0.08526609071383986, true},
    {"thm2_8_H", 0.11245909056776689, false},
    {"thm2_8_G", 0.30538989751526729, true},
    {"thm2_9_H", 0.05661633971675645, true},
    {"thm2_9_G", 0.20376128909954081, false},
    {"thm2_10", 0.04181291171118713, true},
    {"thm2_11", 0.05919680361575268, true},
    {"thm2_12_H", 0.10474236636420321, false},
    {"thm2_12_G", 0.32005967121837458, false},
};

double root_of(const char* id) {
    return bohr::solve_radius(id, ProblemParams{}).computed_root;
}

} // namespace

TEST_CASE("catalog lists exactly the sixteen problems in order") {
    const std::vector<std::string> expected = {
        "classical_phi", "subord_beta", "ali_H",     "ali_G",    "ali_f",    "thm2_7",
        "thm2_8_H",      "thm2_8_G",    "thm2_9_H",  "thm2_9_G", "thm2_10",  "thm2_11",
        "thm2_12_H",     "thm2_12_G",   "wedge",     "wedge_improved"};
    CHECK(bohr::list_problems() == expected);
    for (const std::string& id : expected) CHECK(bohr::is_problem(id));
    CHECK_FALSE(bohr::is_problem("thm9_99"));
    CHECK_THROWS_AS(bohr::problem("thm9_99"), std::invalid_argument);
}

TEST_CASE("targets") {
    const double e = std::exp(1.0);
    CHECK(bohr::problem("ali_H").target == doctest::Approx(1.0 / (2.0 * e)).epsilon(1e-15));
    CHECK(bohr::problem("thm2_8_G").target == doctest::Approx(2.0 / e).epsilon(1e-15));
    CHECK(bohr::problem("thm2_7").target == doctest::Approx(1.0 / (e * e)).epsilon(1e-15));
    CHECK(bohr::problem("classical_phi").target == 1.0);
    CHECK(bohr::problem("wedge").target == 1.0);
}

TEST_CASE("defining_lhs spot values") {
    const ProblemParams p;
    CHECK(bohr::defining_lhs("thm2_7", p, 1e-9) < 1e-8); // vanishes at 0+
    CHECK(bohr::defining_lhs("ali_H", p, 0.1222) ==
          doctest::Approx(0.18390491900646).epsilon(1e-10));
    // the printed thm2_8_H value does not satisfy its own equation
    CHECK(bohr::defining_lhs("thm2_8_H", p, 0.09735) ==
          doctest::Approx(0.148242841334745).epsilon(1e-10));
    CHECK(std::abs(bohr::defining_lhs("thm2_8_H", p, 0.09735) -
                   bohr::problem("thm2_8_H").target) > 0.03);
}

TEST_CASE("defining_lhs domain errors") {
    const ProblemParams p;
    CHECK_THROWS_AS(bohr::defining_lhs("thm2_7", p, 0.0), std::domain_error);
    CHECK_THROWS_AS(bohr::defining_lhs("thm2_7", p, 1.0), std::domain_error);
    ProblemParams bad;
    bad.beta = 0.25;
    CHECK_THROWS_AS(bohr::defining_lhs("subord_beta", bad, 0.1), std::domain_error);
    bad.beta = 0.0;
    bad.alpha = 2.5;
    CHECK_THROWS_AS(bohr::defining_lhs("wedge", bad, 0.1), std::domain_error);
    bad.alpha = 1.0;
    bad.wedge_beta = 2.0;
    CHECK_THROWS_AS(bohr::defining_lhs("wedge_improved", bad, 0.1), std::domain_error);
    bad.wedge_beta = 0.0;
    bad.a = 1.0;
    CHECK_THROWS_AS(bohr::defining_lhs("classical_phi", bad, 0.1), std::domain_error);
}

TEST_CASE("closed forms match the printed surds") {
    ProblemParams p;
    CHECK(bohr::closed_form_radius("subord_beta", p) ==
          doctest::Approx(3.0 - std::sqrt(8.0)).epsilon(1e-15));
    p.beta = 0.125;
    CHECK(bohr::closed_form_radius("subord_beta", p) ==
          doctest::Approx(5.0 - 2.0 * std::sqrt(6.0)).epsilon(1e-13));
    p.beta = 0.1875;
    CHECK(bohr::closed_form_radius("subord_beta", p) ==
          doctest::Approx(9.0 - 4.0 * std::sqrt(5.0)).epsilon(1e-13));
    p.beta = 0.21875;
    CHECK(bohr::closed_form_radius("subord_beta", p) ==
          doctest::Approx(17.0 - 12.0 * std::sqrt(2.0)).epsilon(1e-12));

    ProblemParams w;
    CHECK(bohr::closed_form_radius("wedge_improved", w) == 1.0 / 3.0);
    w.alpha = 2.0;
    CHECK(bohr::closed_form_radius("wedge", w) ==
          doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
    ProblemParams c;
    c.a = 0.45;
    CHECK(bohr::closed_form_radius("classical_phi", c) ==
          doctest::Approx(1.0 / 1.9).epsilon(1e-15));
}

TEST_CASE("closed_form_radius errors") {
    ProblemParams p;
    CHECK_THROWS_AS(bohr::closed_form_radius("ali_H", p), std::invalid_argument);
    p.beta = 0.25;
    CHECK_THROWS_AS(bohr::closed_form_radius("subord_beta", p), std::domain_error);
}

TEST_CASE("closed forms satisfy their defining equations") {
    for (double a : {0.1, 0.5, 0.9}) {
        ProblemParams p;
        p.a = a;
        const double r = bohr::closed_form_radius("classical_phi", p);
        CHECK(std::abs(bohr::defining_lhs("classical_phi", p, r) - 1.0) < 1e-10);
    }
    for (double beta : {0.0, 0.125, 0.1875, 0.21875, 0.24}) {
        ProblemParams p;
        p.beta = beta;
        const double r = bohr::closed_form_radius("subord_beta", p);
        CHECK(std::abs(bohr::defining_lhs("subord_beta", p, r) - 1.0) < 1e-12);
    }
    for (double alpha : {1.0, 1.3, 1.7, 2.0}) {
        ProblemParams p;
        p.alpha = alpha;
        const double r = bohr::closed_form_radius("wedge", p);
        CHECK(std::abs(bohr::defining_lhs("wedge", p, r) - 1.0) < 1e-10);
        p.wedge_beta = 0.6;
        const double ri = bohr::closed_form_radius("wedge_improved", p);
        CHECK(std::abs(bohr::defining_lhs("wedge_improved", p, ri) - 1.0) < 1e-10);
    }
}

TEST_CASE("subord_beta radius decreases to 0 as beta -> 1/4") {
    double prev = 1.0;
    for (double beta : {0.0, 0.05, 0.1, 0.15, 0.2, 0.24, 0.2499}) {
        ProblemParams p;
        p.beta = beta;
        const double r = bohr::closed_form_radius("subord_beta", p);
        CHECK(r < prev);
        prev = r;
    }
    ProblemParams p;
    p.beta = 0.2499;
    CHECK(bohr::closed_form_radius("subord_beta", p) < 1e-2);
}

TEST_CASE("wedge_improved decreases in beta and extends wedge") {
    for (double alpha : {1.0, 1.5, 2.0}) {
        ProblemParams p;
        p.alpha = alpha;
        CHECK(bohr::closed_form_radius("wedge_improved", p) ==
              bohr::closed_form_radius("wedge", p));
        double prev = 1.0;
        for (double beta : {0.0, 0.5, 1.0, 1.5, 1.9}) {
            p.wedge_beta = beta;
            const double r = bohr::closed_form_radius("wedge_improved", p);
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("computed roots match the frozen oracle values") {
    for (const FrozenRoot& f : kFrozen) {
        const bohr::RadiusResult rr = bohr::solve_radius(f.id, ProblemParams{});
        CHECK(std::abs(rr.computed_root - f.root) <= 1e-10);
        CHECK(rr.bracket_width <= 1e-12);
        REQUIRE(rr.paper_value.has_value());
        REQUIRE(rr.deviation.has_value());
        if (f.printed_consistent) {
            CHECK(*rr.deviation <= 1e-4);
            CHECK(bohr::problem(f.id).note.empty());
        } else {
            CHECK(*rr.deviation > 1e-3);
            CHECK_FALSE(bohr::problem(f.id).note.empty());
        }
    }
}

TEST_CASE("improvements shrink the radius") {
    CHECK(root_of("thm2_7") < root_of("ali_f"));
    CHECK(root_of("thm2_8_G") < root_of("ali_G"));
    CHECK(root_of("thm2_9_H") < root_of("ali_H"));
    CHECK(root_of("thm2_10") < root_of("thm2_7"));
}

TEST_CASE("extended-precision LHS matches double in the interior") {
    const ProblemParams p;
    for (const char* id : {"ali_H", "thm2_11", "thm2_12_G"}) {
        for (double r : {0.05, 0.2, 0.6}) {
            const double d = bohr::defining_lhs(id, p, r);
            const long double x = bohr::defining_lhs_ext(id, p, r);
            CHECK(std::abs(static_cast<double>(x) - d) <= 1e-13 * std::max(1.0, d));
        }
    }
    // and stays finite where double overflows
    CHECK(std::isfinite(bohr::defining_lhs_ext("thm2_7", p, 0.999L)));
    CHECK(!std::isfinite(bohr::defining_lhs("thm2_7", p, 0.999)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "opineq/errors.hpp"
#include "opineq/inequalities.hpp"
#include "opineq/random.hpp"
#include "test_support.hpp"

using opineq::OperatorFunction;
using opineq::QuadratureRule;
using opineq::SymMatrix;
using opineq::WeightFunction;
namespace ts = test_support;

namespace {

const QuadratureRule& rule() { return QuadratureRule::default_rule(); }

}  // namespace

// ---------------------------------------------------------------- scalar --

TEST_CASE("covariance-style functional on monomials") {
    const auto id = [](double t) { return t; };
    const auto sq = [](double t) { return t * t; };
    // C(t, t) = 1/3 - 1/4 = 1/12 and C(t, t^2) = 1/4 - 1/6 = 1/12
    CHECK(opineq::cebysev_functional(id, id, rule()) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(opineq::cebysev_functional(id, sq, rule()) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    // C(t^2, t^2) = 1/5 - 1/9 = 4/45
    CHECK(opineq::cebysev_functional(sq, sq, rule()) ==
          doctest::Approx(4.0 / 45.0).epsilon(1e-14));
    // anti-correlated pair
    const auto rev = [](double t) { return 1.0 - t; };
    CHECK(opineq::cebysev_functional(id, rev, rule()) ==
          doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("scalar bounds on the identity pair") {
    const auto id = [](double t) { return t; };
    opineq::ScalarBoundsMetadata meta;
    meta.h_min = meta.g_min = 0.0;
    meta.h_max = meta.g_max = 1.0;
    meta.h_deriv_sup = meta.g_deriv_sup = 1.0;
    meta.h_deriv_l2 = meta.g_deriv_l2 = 1.0;
    const auto rep = opineq::scalar_bounds(id, id, meta, rule());
    CHECK(rep.c_value == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    REQUIRE(rep.gruss_bound.has_value());
    CHECK(*rep.gruss_bound == 0.25);
    REQUIRE(rep.ostrowski_bound.has_value());
    CHECK(*rep.ostrowski_bound == 0.125);
    REQUIRE(rep.cebysev_bound.has_value());
    // h = g = t saturates the two-derivative bound: C = 1/12 exactly
    CHECK(*rep.cebysev_bound == doctest::Approx(1.0 / 12.0));
    CHECK(std::abs(rep.c_value) <= *rep.cebysev_bound + 1e-12);
    REQUIRE(rep.lupas_bound.has_value());
    CHECK(*rep.lupas_bound ==
          doctest::Approx(1.0 / (std::numbers::pi * std::numbers::pi)));
    CHECK(std::abs(rep.c_value) <= *rep.lupas_bound);
}

TEST_CASE("missing metadata suppresses bounds") {
    const auto id = [](double t) { return t; };
    opineq::ScalarBoundsMetadata meta;
    meta.h_deriv_sup = 1.0;  // no g data at all
    const auto rep = opineq::scalar_bounds(id, id, meta, rule());
    CHECK(!rep.gruss_bound.has_value());
    CHECK(!rep.ostrowski_bound.has_value());
    CHECK(!rep.cebysev_bound.has_value());
    CHECK(!rep.lupas_bound.has_value());
}

TEST_CASE("scalar weighted gap orientation") {
    const auto sq = [](double t) { return t * t; };

    // nondecreasing weight: int p int g - int p g = (1/6)(1/3) - 1/20 = 1/180
    const auto up = opineq::scalar_levin_steckin(WeightFunction::bump(), sq, rule());
    CHECK(up.gap == doctest::Approx(1.0 / 180.0).epsilon(1e-12));
    CHECK(up.holds);

    // nonincreasing weight: (1/4)(1/3) - 3/32 = -1/96
    const auto down = opineq::scalar_levin_steckin(WeightFunction::vee(), sq, rule());
    CHECK(down.gap == doctest::Approx(-1.0 / 96.0).epsilon(1e-12));
    CHECK(down.holds);

    // constant weight collapses the gap
    const auto flat =
        opineq::scalar_levin_steckin(WeightFunction::constant(1.0), sq, rule());
    CHECK(std::abs(flat.gap) < 1e-14);
    CHECK(flat.holds);
}

// ----------------------------------------------------------------- paths --

TEST_CASE("segment path evaluates the spectral calculus") {
    const SymMatrix a = SymMatrix::from_rows({{1.0, 0.0}, {0.0, 2.0}});
    const SymMatrix b = SymMatrix::from_rows({{3.0, 0.0}, {0.0, 4.0}});
    const opineq::SegmentPath path(OperatorFunction::square(), a, b);
    const SymMatrix quarter = path(0.25);
    CHECK(quarter(0, 0) == doctest::Approx(1.5 * 1.5).epsilon(1e-15));
    CHECK(quarter(1, 1) == doctest::Approx(2.5 * 2.5).epsilon(1e-15));
    CHECK(ts::identical_entries(path.a(), a));

    CHECK_THROWS_AS(opineq::SegmentPath(OperatorFunction::square(), a, SymMatrix::identity(3)),
                    opineq::DimensionMismatch);
}

TEST_CASE("symmetrized path is symmetric about 1/2") {
    opineq::SeededRng rng(31);
    const SymMatrix a = ts::random_spd(3, rng, 0.5, 4.0);
    const SymMatrix b = ts::random_spd(3, rng, 0.5, 4.0);
    const opineq::SymmetrizedPath sym(OperatorFunction::xlogx(), a, b);
    // dyadic t so that 1 - t is exact and the symmetry is bitwise
    CHECK(ts::identical_entries(sym(0.25), sym(0.75)));
    CHECK(ts::identical_entries(sym(0.125), sym(0.875)));
}

// ----------------------------------------------------------- named oracles --

// A = I, B = 2I, f = t^2, p = t(1-t): the diagonal reduces to the scalar
// computation, so gap = (1/180) I while the bound assembles exactly from
// dyadic values: (1/16)(4/16)(favg - fmid) = (1/64)(1/4) on the diagonal.
TEST_CASE("weighted gap oracle for the square") {
    const SymMatrix a = SymMatrix::identity(2);
    const SymMatrix b = 2.0 * SymMatrix::identity(2);
    const auto rep = opineq::check_ls_operator(OperatorFunction::square(),
                                               WeightFunction::bump(), a, b, rule());
    CHECK(rep.theorem_id == "ls");
    CHECK(rep.pass());
    CHECK(std::abs(rep.gap(0, 0) - 1.0 / 180.0) < 1e-10);
    CHECK(std::abs(rep.gap(1, 1) - 1.0 / 180.0) < 1e-10);
    CHECK(std::abs(rep.gap(0, 1)) < 1e-10);
    CHECK(rep.bound(0, 0) == 0.015625);  // exact dyadic assembly
    CHECK(rep.bound(1, 1) == 0.015625);
    CHECK(rep.bound(0, 1) == 0.0);
    REQUIRE(rep.bound_coefficient.has_value());
    CHECK(*rep.bound_coefficient == 0.0625);
    REQUIRE(rep.weight_integral.has_value());
    CHECK(std::abs(*rep.weight_integral - 1.0 / 6.0) < 1e-15);
    REQUIRE(rep.tightness.has_value());
    CHECK(*rep.tightness == doctest::Approx((1.0 / 180.0) / 0.015625).epsilon(1e-6));
}

// Same endpoints with the nonincreasing vee weight: the oriented gap flips to
// int p phi - int p int phi = (1/96) I and the factor becomes (1/4)(1/2).
TEST_CASE("weighted gap oracle for a nonincreasing weight") {
    const SymMatrix a = SymMatrix::identity(2);
    const SymMatrix b = 2.0 * SymMatrix::identity(2);
    const auto rep = opineq::check_ls_operator(OperatorFunction::square(),
                                               WeightFunction::vee(), a, b, rule());
    CHECK(rep.pass());
    CHECK(std::abs(rep.gap(0, 0) - 1.0 / 96.0) < 1e-10);
    CHECK(std::abs(rep.gap(1, 1) - 1.0 / 96.0) < 1e-10);
    CHECK(rep.bound(0, 0) == 0.03125);  // (1/8)(favg - fmid) = (1/8)(1/4)
    REQUIRE(rep.bound_coefficient.has_value());
    CHECK(*rep.bound_coefficient == 0.125);
}

// A = I, B = 2I, f = 1/t: gap = ((13/6) ln 2 - 3/2) I from the partial
// fraction of t(1-t)/(1+t); the endpoint-derivative bracket is
// -B^{-2} + A^{-2} = (3/4) I, scaled by (1/16)(1/4).
TEST_CASE("endpoint-derivative bound oracle for the inverse") {
    const SymMatrix a = SymMatrix::identity(2);
    const SymMatrix b = 2.0 * SymMatrix::identity(2);
    const auto rep = opineq::check_gateaux_reverse(OperatorFunction::inverse(),
                                                   WeightFunction::bump(), a, b, rule());
    CHECK(rep.theorem_id == "ls_gateaux");
    CHECK(rep.pass());
    const double gap = (13.0 / 6.0) * std::log(2.0) - 1.5;
    CHECK(std::abs(rep.gap(0, 0) - gap) < 1e-10);
    CHECK(std::abs(rep.gap(0, 1)) < 1e-10);
    CHECK(rep.bound(0, 0) == doctest::Approx(0.75 / 64.0).epsilon(1e-14));
    REQUIRE(rep.bound_coefficient.has_value());
    CHECK(*rep.bound_coefficient == 0.015625);
}

// A = diag(1,3), B = diag(2,2), f = t^2, p = t(1-t): the symmetrized
// derivative spread is |4t - 2| I, so the sharp scalar multiple is
// (1/(2 pi^2)) sqrt(1/3) sqrt(4/3) = 1/(3 pi^2).
TEST_CASE("spectral-norm bound oracle for the square") {
    const SymMatrix a = SymMatrix::from_rows({{1.0, 0.0}, {0.0, 3.0}});
    const SymMatrix b = 2.0 * SymMatrix::identity(2);
    const auto rep = opineq::check_lupas_reverse(OperatorFunction::square(),
                                                 WeightFunction::bump(), a, b, rule());
    CHECK(rep.theorem_id == "ls_lupas");
    CHECK(rep.pass());
    const double pi_sq = std::numbers::pi * std::numbers::pi;
    CHECK(std::abs(rep.gap(0, 0) - 1.0 / 180.0) < 1e-10);
    CHECK(std::abs(rep.gap(1, 1) - 1.0 / 180.0) < 1e-10);
    REQUIRE(rep.bound_coefficient.has_value());
    CHECK(*rep.bound_coefficient == doctest::Approx(1.0 / (3.0 * pi_sq)).epsilon(1e-12));
    CHECK(rep.bound(0, 0) == doctest::Approx(1.0 / (3.0 * pi_sq)).epsilon(1e-12));
    CHECK(rep.bound(0, 1) == 0.0);
    REQUIRE(rep.weak_bound_value.has_value());
    CHECK(*rep.weak_bound_value ==
          doctest::Approx(std::sqrt(76.0) / (3.0 * pi_sq)).epsilon(1e-12));
    REQUIRE(rep.extra_verdicts.size() == 1);
    CHECK(rep.extra_verdicts[0].first == "tight<=weak");
    CHECK(rep.extra_verdicts[0].second.holds);
}

// ---------------------------------------------------------------- chains --

TEST_CASE("midpoint-endpoint chain for both classes") {
    opineq::SeededRng rng(71);
    const SymMatrix a = ts::random_spd(4, rng, 0.5, 4.0);
    const SymMatrix b = ts::random_spd(4, rng, 0.5, 4.0);

    for (const auto& f : {OperatorFunction::square(), OperatorFunction::inverse(),
                          OperatorFunction::xlogx(), OperatorFunction::power(1.5)}) {
        CAPTURE(f.name());
        const auto rep = opineq::check_hermite_hadamard(f, a, b, rule());
        CHECK(rep.theorem_id == "hh");
        CHECK(rep.pass());
        CHECK(rep.lower_verdict.holds);
        CHECK(rep.upper_verdict.holds);
    }
    for (const auto& f : {OperatorFunction::log(), OperatorFunction::power(0.5),
                          OperatorFunction::square().negated()}) {
        CAPTURE(f.name());
        CHECK(opineq::check_hermite_hadamard(f, a, b, rule()).pass());
    }
    CHECK_THROWS_AS(opineq::check_hermite_hadamard(OperatorFunction::power(3.0), a, b, rule()),
                    opineq::UnsupportedFunctionClass);
}

TEST_CASE("weighted chain needs a nonnegative symmetric weight") {
    opineq::SeededRng rng(72);
    const SymMatrix a = ts::random_spd(3, rng, 0.5, 4.0);
    const SymMatrix b = ts::random_spd(3, rng, 0.5, 4.0);

    const auto rep =
        opineq::check_fejer(OperatorFunction::square(), WeightFunction::vee(), a, b, rule());
    CHECK(rep.theorem_id == "fejer");
    CHECK(rep.pass());
    REQUIRE(rep.weight_integral.has_value());
    CHECK(*rep.weight_integral == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(opineq::check_fejer(OperatorFunction::square(),
                                        WeightFunction::constant(-1.0), a, b, rule()),
                    opineq::NegativeWeight);
    const WeightFunction skew =
        WeightFunction::tabulated({0.0, 0.5, 1.0}, {0.0, 1.0, 0.5});
    CHECK_THROWS_AS(
        opineq::check_fejer(OperatorFunction::square(), skew, a, b, rule()),
        opineq::InvalidWeight);
}

TEST_CASE("reverse bounds hold across classes and weights on random pairs") {
    opineq::SeededRng rng(73);
    for (int trial = 0; trial < 4; ++trial) {
        const SymMatrix a = ts::random_spd(3, rng, 0.5, 4.0);
        const SymMatrix b = ts::random_spd(3, rng, 0.5, 4.0);
        for (const auto& f :
             {OperatorFunction::square(), OperatorFunction::log(), OperatorFunction::xlogx()}) {
            CAPTURE(trial);
            CAPTURE(f.name());
            CHECK(opineq::check_ls_operator(f, WeightFunction::bump(), a, b, rule()).pass());
            CHECK(opineq::check_ls_operator(f, WeightFunction::vee(), a, b, rule()).pass());
            CHECK(
                opineq::check_ostrowski_reverse(f, WeightFunction::bump(), a, b, rule()).pass());
            CHECK(opineq::check_gateaux_reverse(f, WeightFunction::bump(), a, b, rule()).pass());
            CHECK(opineq::check_cebysev_reverse(f, WeightFunction::bump(), a, b, rule()).pass());
            CHECK(opineq::check_lupas_reverse(f, WeightFunction::bump(), a, b, rule()).pass());
        }
    }
}

TEST_CASE("hypothesis violations throw typed errors") {
    const SymMatrix a = SymMatrix::identity(2);
    const SymMatrix b = 2.0 * SymMatrix::identity(2);

    // endpoint-derivative bound needs a nondecreasing weight
    CHECK_THROWS_AS(opineq::check_gateaux_reverse(OperatorFunction::square(),
                                                  WeightFunction::vee(), a, b, rule()),
                    opineq::InvalidWeight);
    // derivative-norm bounds need differentiability
    CHECK_THROWS_AS(opineq::check_ostrowski_reverse(OperatorFunction::square(),
                                                    WeightFunction::vee(), a, b, rule()),
                    opineq::NotDifferentiable);
    CHECK_THROWS_AS(opineq::check_lupas_reverse(OperatorFunction::square(),
                                                WeightFunction::vee(), a, b, rule()),
                    opineq::NotDifferentiable);
    // no orientation without a definite convexity class
    CHECK_THROWS_AS(opineq::check_ls_operator(OperatorFunction::power(2.5),
                                              WeightFunction::bump(), a, b, rule()),
                    opineq::UnsupportedFunctionClass);
    // spectra must stay inside the domain
    const SymMatrix neg = SymMatrix::from_rows({{-1.0, 0.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(opineq::check_ls_operator(OperatorFunction::log(), WeightFunction::bump(),
                                              neg, b, rule()),
                    opineq::SpectrumOutOfDomain);
}

TEST_CASE("degenerate configurations collapse to zero") {
    opineq::SeededRng rng(74);
    const SymMatrix a = ts::random_spd(3, rng, 0.5, 4.0);

    SUBCASE("equal endpoints") {
        const auto rep = opineq::check_ls_operator(OperatorFunction::square(),
                                                   WeightFunction::bump(), a, a, rule());
        CHECK(rep.pass());
        CHECK(rep.gap.max_abs() < 1e-10);
        CHECK(rep.bound.max_abs() == 0.0);  // midpoint spread vanishes identically
        CHECK(!rep.tightness.has_value());
    }
    SUBCASE("constant weight") {
        const SymMatrix b = ts::random_spd(3, rng, 0.5, 4.0);
        const auto rep = opineq::check_ls_operator(OperatorFunction::square(),
                                                   WeightFunction::constant(1.0), a, b, rule());
        CHECK(rep.pass());
        CHECK(rep.gap.max_abs() < 1e-10);
        CHECK(rep.bound.max_abs() == 0.0);  // p(1/2) - p(0) = 0 exactly
    }
    SUBCASE("affine function makes the chain an equality") {
        const SymMatrix b = ts::random_spd(3, rng, 0.5, 4.0);
        const auto rep =
            opineq::check_hermite_hadamard(OperatorFunction::power(1.0), a, b, rule());
        CHECK(rep.pass());
        CHECK(rep.gap.max_abs() < 1e-10);
        CHECK(rep.bound.max_abs() < 1e-10);
    }
}

TEST_CASE("worked-example sweep") {
    opineq::SeededRng rng(7);
    const auto& r = rule();
    const SymMatrix a = ts::random_spd(2, rng, 0.675, 3.825);
    const SymMatrix b = ts::random_spd(2, rng, 0.675, 3.825);
    const auto reports = opineq::run_example_suite(a, b, r);
    REQUIRE(reports.size() == 13);

    const char* expected_ids[] = {
        "ls:power(r=-1)",  "ostrowski:power(r=-1)",  "ls:power(r=1.5)",
        "ostrowski:power(r=1.5)", "ls:power(r=2)",   "ostrowski:power(r=2)",
        "gateaux:inverse", "cebysev:inverse",        "lupas:inverse",
        "ls:log",          "ostrowski:log",          "gateaux:log(integral)",
        "cebysev:log(integral)",
    };
    for (std::size_t k = 0; k < reports.size(); ++k) {
        CAPTURE(k);
        CHECK(reports[k].theorem_id == expected_ids[k]);
        CHECK(reports[k].pass());
        if (reports[k].theorem_id.find("(integral)") != std::string::npos) {
            REQUIRE(reports[k].derivative_crosscheck_rel.has_value());
            CHECK(*reports[k].derivative_crosscheck_rel < 1e-7);
        } else {
            CHECK(!reports[k].derivative_crosscheck_rel.has_value());
        }
    }
}

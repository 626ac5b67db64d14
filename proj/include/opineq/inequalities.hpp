#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opineq/operator_function.hpp"
#include "opineq/quadrature.hpp"
#include "opineq/sym_matrix.hpp"
#include "opineq/weight_function.hpp"

namespace opineq {

// ---------------------------------------------------------------- scalar --

// C(h, g) = int h g - int h int g over [0, 1].
double cebysev_functional(const std::function<double(double)>& h,
                          const std::function<double(double)>& g, const QuadratureRule& rule);

// Optional analytic metadata about h and g on [0, 1]; each classical bound
// below is emitted only when its ingredients are present.
struct ScalarBoundsMetadata {
    std::optional<double> h_min, h_max;        // m <= h <= M
    std::optional<double> g_min, g_max;        // n <= g <= N
    std::optional<double> h_deriv_sup, g_deriv_sup;
    std::optional<double> h_deriv_l2, g_deriv_l2;
};

struct ScalarFunctionalReport {
    double c_value = 0.0;
    std::optional<double> gruss_bound;      // (M - m)(N - n) / 4
    std::optional<double> ostrowski_bound;  // (M - m) |g'|_inf / 8
    std::optional<double> cebysev_bound;    // |h'|_inf |g'|_inf / 12
    std::optional<double> lupas_bound;      // |h'|_2 |g'|_2 / pi^2
};

ScalarFunctionalReport scalar_bounds(const std::function<double(double)>& h,
                                     const std::function<double(double)>& g,
                                     const ScalarBoundsMetadata& meta, const QuadratureRule& rule);

// gap = int p int g - int p g.  For convex g the sign of the gap is fixed by
// the weight's monotone class: nonnegative for nondecreasing-on-[0,1/2]
// weights, nonpositive for nonincreasing ones.
struct ScalarLevinSteckin {
    double gap = 0.0;
    bool holds = false;
};
ScalarLevinSteckin scalar_levin_steckin(const WeightFunction& p,
                                        const std::function<double(double)>& g,
                                        const QuadratureRule& rule);

// -------------------------------------------------------------- operator --

// phi(t) = f((1 - t) A + t B).
class SegmentPath {
public:
    SegmentPath(OperatorFunction f, SymMatrix a, SymMatrix b);
    SymMatrix operator()(double t) const;
    const SymMatrix& a() const { return a_; }
    const SymMatrix& b() const { return b_; }

private:
    OperatorFunction f_;
    SymMatrix a_, b_;
};

// (phi(t) + phi(1 - t)) / 2; symmetric about 1/2 by construction.
class SymmetrizedPath {
public:
    SymmetrizedPath(OperatorFunction f, SymMatrix a, SymMatrix b);
    SymMatrix operator()(double t) const;

private:
    SegmentPath path_;
};

// Every operator check is reported as a chain 0 <= gap <= bound in the
// positive-semidefinite order.  The orientation of the gap follows the
// function's convexity class and the weight's monotone class, so the chain
// is the asserted direction of the underlying statement in all four cases.
struct IneqReport {
    std::string theorem_id;
    SymMatrix gap;
    SymMatrix bound;
    LoewnerVerdict lower_verdict;  // 0 <= gap
    LoewnerVerdict upper_verdict;  // gap <= bound
    std::vector<std::pair<std::string, LoewnerVerdict>> extra_verdicts;
    std::optional<double> tightness;         // lambda_max(gap) / lambda_max(bound)
    std::optional<double> weight_integral;   // quadrature value of int p
    std::optional<double> bound_coefficient; // scalar factor before the operator bracket
    std::optional<double> weak_bound_value;  // looser scalar bound (Lupas chain)
    std::optional<double> derivative_crosscheck_rel;  // example suite only
    std::string instance;

    bool pass() const;
    double worst_margin() const;
};

// Midpoint/endpoint chain: f((A+B)/2) <= int_0^1 phi <= (f(A)+f(B))/2 for
// operator convex f, reversed for operator concave f.
IneqReport check_hermite_hadamard(const OperatorFunction& f, const SymMatrix& a,
                                  const SymMatrix& b, const QuadratureRule& rule,
                                  double tol_scale = kDefaultTolScale);

// Weighted variant of the chain for a nonnegative symmetric weight.
IneqReport check_fejer(const OperatorFunction& f, const WeightFunction& p, const SymMatrix& a,
                       const SymMatrix& b, const QuadratureRule& rule,
                       double tol_scale = kDefaultTolScale);

// Weighted-vs-product gap with the midpoint-defect bound
//   gap <= (1/4) |p(1/2) - p(0)| [ (f(A)+f(B))/2 - f((A+B)/2) ]  (convex)
// and the bracket reversed for concave f.
IneqReport check_ls_operator(const OperatorFunction& f, const WeightFunction& p,
                             const SymMatrix& a, const SymMatrix& b, const QuadratureRule& rule,
                             double tol_scale = kDefaultTolScale);

// Reverse bounds on the same gap for differentiable weights:
//   (1/8) |p'|_inf [midpoint defect]          (Ostrowski route)
//   (1/16)(p(1/2) - p(0)) [endpoint derivative spread]   (needs nondecreasing p)
//   (1/24) |p'|_inf [endpoint derivative spread]         (Cebysev route)
//   (1/(2 pi^2)) |p'|_2 (int |grad(t) - grad(1-t)|^2)^(1/2) I   (Lupas route)
IneqReport check_ostrowski_reverse(const OperatorFunction& f, const WeightFunction& p,
                                   const SymMatrix& a, const SymMatrix& b,
                                   const QuadratureRule& rule, double tol_scale = kDefaultTolScale);
IneqReport check_gateaux_reverse(const OperatorFunction& f, const WeightFunction& p,
                                 const SymMatrix& a, const SymMatrix& b,
                                 const QuadratureRule& rule, double tol_scale = kDefaultTolScale);
IneqReport check_cebysev_reverse(const OperatorFunction& f, const WeightFunction& p,
                                 const SymMatrix& a, const SymMatrix& b,
                                 const QuadratureRule& rule, double tol_scale = kDefaultTolScale);
IneqReport check_lupas_reverse(const OperatorFunction& f, const WeightFunction& p,
                               const SymMatrix& a, const SymMatrix& b, const QuadratureRule& rule,
                               double tol_scale = kDefaultTolScale);

// Worked-example sweep with the bump weight: powers r in {-1, 1.5, 2} through
// the gap and Ostrowski checks, the inverse through the derivative-based
// bounds, and the logarithm through both the divided-difference and the
// resolvent-integral derivative routes.
std::vector<IneqReport> run_example_suite(const SymMatrix& a, const SymMatrix& b,
                                          const QuadratureRule& rule,
                                          double tol_scale = kDefaultTolScale);

}  // namespace opineq

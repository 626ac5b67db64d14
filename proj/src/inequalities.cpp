#include "opineq/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "opineq/errors.hpp"
#include "opineq/gateaux.hpp"

namespace opineq {
namespace {

// Returns true for operator convex, false for operator concave.
bool require_definite_class(const OperatorFunction& f) {
    const ConvexityClass c = f.classify();
    if (c == ConvexityClass::neither) {
        throw UnsupportedFunctionClass("function '" + f.name() +
                                       "' is neither operator convex nor operator concave");
    }
    return c == ConvexityClass::operator_convex;
}

struct SegmentIntegrals {
    SymMatrix phi;       // int_0^1 f(X(t)) dt
    SymMatrix weighted;  // int_0^1 p(t) f(X(t)) dt (zero when no weight given)
    double weight = 0.0; // int_0^1 p(t) dt
};

// One pass over the nodes so every checker integrates the same sample set in
// the same order.  Pass p == nullptr to skip the weighted accumulators.
SegmentIntegrals integrate_segment(const OperatorFunction& f, const WeightFunction* p,
                                   const SymMatrix& a, const SymMatrix& b,
                                   const QuadratureRule& rule) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("segment endpoints have dims " + std::to_string(a.dim()) +
                                " and " + std::to_string(b.dim()));
    }
    if (a.dim() == 0) throw DimensionMismatch("segment endpoints are empty");

    SegmentIntegrals out{SymMatrix(a.dim()), SymMatrix(a.dim()), 0.0};
    const auto& ts = rule.nodes();
    const auto& ws = rule.weights();
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const SymMatrix value = apply_fn(f, segment_point(a, b, ts[k]));
        out.phi += ws[k] * value;
        if (p != nullptr) {
            const double pw = ws[k] * (*p)(ts[k]);
            out.weighted += pw * value;
            out.weight += pw;
        }
    }
    return out;
}

struct MidpointData {
    SymMatrix fmid;    // f((A + B)/2)
    SymMatrix favg;    // (f(A) + f(B))/2
    SymMatrix spread;  // favg - fmid for convex f, fmid - favg for concave
};

MidpointData midpoint_data(const OperatorFunction& f, bool convex, const SymMatrix& a,
                           const SymMatrix& b) {
    MidpointData md;
    md.fmid = apply_fn(f, segment_point(a, b, 0.5));
    md.favg = 0.5 * (apply_fn(f, a) + apply_fn(f, b));
    md.spread = convex ? md.favg - md.fmid : md.fmid - md.favg;
    return md;
}

// grad f at B minus grad f at A (both along B - A), flipped for concave f so
// the result is the positive-semidefinite side.
SymMatrix endpoint_derivative_spread(const OperatorFunction& f, bool convex, const SymMatrix& a,
                                     const SymMatrix& b) {
    const SymMatrix delta = b - a;
    const SymMatrix da = gateaux(f, a, delta).value;
    const SymMatrix db = gateaux(f, b, delta).value;
    return convex ? db - da : da - db;
}

// int p int phi - int p phi, oriented so the asserted direction is >= 0: the
// raw difference for convex f with a nondecreasing weight (or concave with
// nonincreasing), the negation when the classes disagree.
SymMatrix oriented_gap(bool convex, MonotoneClass mc, const SegmentIntegrals& si) {
    SymMatrix g = si.weight * si.phi - si.weighted;
    const bool nondec = mc == MonotoneClass::nondecreasing_on_first_half;
    return (convex == nondec) ? g : -g;
}

std::string describe_instance(const OperatorFunction& f, const WeightFunction* p,
                              const SymMatrix& a) {
    std::string s = "f=" + f.name();
    if (p != nullptr) s += " p=" + p->name();
    return s + " dim=" + std::to_string(a.dim());
}

void finalize(IneqReport& r, double tol_scale) {
    r.lower_verdict = loewner_leq(SymMatrix(r.gap.dim()), r.gap, tol_scale);
    r.upper_verdict = loewner_leq(r.gap, r.bound, tol_scale);
    const double denom = max_eigenvalue(r.bound);
    if (denom > 0.0) r.tightness = max_eigenvalue(r.gap) / denom;
}

MonotoneClass require_nondecreasing(const WeightFunction& p) {
    const MonotoneClass mc = p.monotone_class();
    if (mc != MonotoneClass::nondecreasing_on_first_half) {
        throw InvalidWeight("derivative-spread bound needs a weight nondecreasing on [0, 1/2]; '" +
                            p.name() + "' is nonincreasing there");
    }
    return mc;
}

// Shared core of the two derivative-spread reverse bounds; the example sweep
// reuses it with a spread computed through the resolvent-integral route.
IneqReport gateaux_reverse_impl(const OperatorFunction& f, const WeightFunction& p,
                                const SymMatrix& a, const SymMatrix& b,
                                const QuadratureRule& rule, double tol_scale,
                                const SymMatrix* spread_override) {
    const bool convex = require_definite_class(f);
    const MonotoneClass mc = require_nondecreasing(p);
    const SegmentIntegrals si = integrate_segment(f, &p, a, b, rule);
    const double factor = (p.p_half() - p.p0()) / 16.0;
    const SymMatrix spread =
        spread_override ? *spread_override : endpoint_derivative_spread(f, convex, a, b);

    IneqReport r;
    r.theorem_id = "ls_gateaux";
    r.instance = describe_instance(f, &p, a);
    r.gap = oriented_gap(convex, mc, si);
    r.bound = factor * spread;
    r.weight_integral = si.weight;
    r.bound_coefficient = factor;
    finalize(r, tol_scale);
    return r;
}

IneqReport cebysev_reverse_impl(const OperatorFunction& f, const WeightFunction& p,
                                const SymMatrix& a, const SymMatrix& b,
                                const QuadratureRule& rule, double tol_scale,
                                const SymMatrix* spread_override) {
    const bool convex = require_definite_class(f);
    const MonotoneClass mc = p.monotone_class();
    const double dinf = p.derivative_norms().first;
    const SegmentIntegrals si = integrate_segment(f, &p, a, b, rule);
    const SymMatrix spread =
        spread_override ? *spread_override : endpoint_derivative_spread(f, convex, a, b);

    IneqReport r;
    r.theorem_id = "ls_cebysev";
    r.instance = describe_instance(f, &p, a);
    r.gap = oriented_gap(convex, mc, si);
    r.bound = (dinf / 24.0) * spread;
    r.weight_integral = si.weight;
    r.bound_coefficient = dinf / 24.0;
    finalize(r, tol_scale);
    return r;
}

}  // namespace

// ---------------------------------------------------------------- scalar --

double cebysev_functional(const std::function<double(double)>& h,
                          const std::function<double(double)>& g, const QuadratureRule& rule) {
    const auto& ts = rule.nodes();
    const auto& ws = rule.weights();
    double hg = 0.0, hs = 0.0, gs = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double hv = h(ts[k]);
        const double gv = g(ts[k]);
        if (!std::isfinite(hv) || !std::isfinite(gv)) {
            throw NonFiniteValue("scalar integrand not finite at t=" + std::to_string(ts[k]));
        }
        hg += ws[k] * hv * gv;
        hs += ws[k] * hv;
        gs += ws[k] * gv;
    }
    return hg - hs * gs;
}

ScalarFunctionalReport scalar_bounds(const std::function<double(double)>& h,
                                     const std::function<double(double)>& g,
                                     const ScalarBoundsMetadata& meta, const QuadratureRule& rule) {
    ScalarFunctionalReport rep;
    rep.c_value = cebysev_functional(h, g, rule);
    if (meta.h_min && meta.h_max && meta.g_min && meta.g_max) {
        rep.gruss_bound = 0.25 * (*meta.h_max - *meta.h_min) * (*meta.g_max - *meta.g_min);
    }
    if (meta.h_min && meta.h_max && meta.g_deriv_sup) {
        rep.ostrowski_bound = (*meta.h_max - *meta.h_min) * *meta.g_deriv_sup / 8.0;
    }
    if (meta.h_deriv_sup && meta.g_deriv_sup) {
        rep.cebysev_bound = *meta.h_deriv_sup * *meta.g_deriv_sup / 12.0;
    }
    if (meta.h_deriv_l2 && meta.g_deriv_l2) {
        rep.lupas_bound = *meta.h_deriv_l2 * *meta.g_deriv_l2 / (std::numbers::pi * std::numbers::pi);
    }
    return rep;
}

ScalarLevinSteckin scalar_levin_steckin(const WeightFunction& p,
                                        const std::function<double(double)>& g,
                                        const QuadratureRule& rule) {
    const MonotoneClass mc = p.monotone_class();
    const auto& ts = rule.nodes();
    const auto& ws = rule.weights();
    double pg = 0.0, ps = 0.0, gs = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double pv = p(ts[k]);
        const double gv = g(ts[k]);
        if (!std::isfinite(gv)) {
            throw NonFiniteValue("scalar integrand not finite at t=" + std::to_string(ts[k]));
        }
        pg += ws[k] * pv * gv;
        ps += ws[k] * pv;
        gs += ws[k] * gv;
    }
    ScalarLevinSteckin out;
    out.gap = ps * gs - pg;
    const double tol = 1e-12 * (1.0 + std::abs(ps * gs) + std::abs(pg));
    out.holds = (mc == MonotoneClass::nondecreasing_on_first_half) ? out.gap >= -tol
                                                                   : out.gap <= tol;
    return out;
}

// -------------------------------------------------------------- operator --

SegmentPath::SegmentPath(OperatorFunction f, SymMatrix a, SymMatrix b)
    : f_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {
    if (a_.dim() != b_.dim()) {
        throw DimensionMismatch("segment endpoints have dims " + std::to_string(a_.dim()) +
                                " and " + std::to_string(b_.dim()));
    }
    if (a_.dim() == 0) throw DimensionMismatch("segment endpoints are empty");
}

SymMatrix SegmentPath::operator()(double t) const {
    return apply_fn(f_, segment_point(a_, b_, t));
}

SymmetrizedPath::SymmetrizedPath(OperatorFunction f, SymMatrix a, SymMatrix b)
    : path_(std::move(f), std::move(a), std::move(b)) {}

SymMatrix SymmetrizedPath::operator()(double t) const {
    return 0.5 * (path_(t) + path_(1.0 - t));
}

bool IneqReport::pass() const {
    if (!lower_verdict.holds || !upper_verdict.holds) return false;
    for (const auto& extra : extra_verdicts) {
        if (!extra.second.holds) return false;
    }
    return true;
}

double IneqReport::worst_margin() const {
    double m = std::min(lower_verdict.min_eig_of_difference, upper_verdict.min_eig_of_difference);
    for (const auto& extra : extra_verdicts) {
        m = std::min(m, extra.second.min_eig_of_difference);
    }
    return m;
}

IneqReport check_hermite_hadamard(const OperatorFunction& f, const SymMatrix& a,
                                  const SymMatrix& b, const QuadratureRule& rule,
                                  double tol_scale) {
    const bool convex = require_definite_class(f);
    const SegmentIntegrals si = integrate_segment(f, nullptr, a, b, rule);
    const MidpointData md = midpoint_data(f, convex, a, b);

    IneqReport r;
    r.theorem_id = "hh";
    r.instance = describe_instance(f, nullptr, a);
    r.gap = convex ? si.phi - md.fmid : md.fmid - si.phi;
    r.bound = md.spread;
    finalize(r, tol_scale);
    return r;
}

IneqReport check_fejer(const OperatorFunction& f, const WeightFunction& p, const SymMatrix& a,
                       const SymMatrix& b, const QuadratureRule& rule, double tol_scale) {
    const bool convex = require_definite_class(f);
    const WeightValidation& v = p.validation();
    if (!v.symmetric) {
        throw InvalidWeight("weight '" + p.name() + "' is not symmetric about 1/2");
    }
    if (!v.nonnegative) {
        throw NegativeWeight("weight '" + p.name() + "' takes negative values (grid min " +
                             std::to_string(v.grid_min) + ")");
    }
    const SegmentIntegrals si = integrate_segment(f, &p, a, b, rule);
    const MidpointData md = midpoint_data(f, convex, a, b);

    IneqReport r;
    r.theorem_id = "fejer";
    r.instance = describe_instance(f, &p, a);
    r.gap = convex ? si.weighted - si.weight * md.fmid : si.weight * md.fmid - si.weighted;
    r.bound = si.weight * md.spread;
    r.weight_integral = si.weight;
    finalize(r, tol_scale);
    return r;
}

IneqReport check_ls_operator(const OperatorFunction& f, const WeightFunction& p,
                             const SymMatrix& a, const SymMatrix& b, const QuadratureRule& rule,
                             double tol_scale) {
    const bool convex = require_definite_class(f);
    const MonotoneClass mc = p.monotone_class();
    const SegmentIntegrals si = integrate_segment(f, &p, a, b, rule);
    const MidpointData md = midpoint_data(f, convex, a, b);
    const bool nondec = mc == MonotoneClass::nondecreasing_on_first_half;
    const double factor = 0.25 * (nondec ? p.p_half() - p.p0() : p.p0() - p.p_half());

    IneqReport r;
    r.theorem_id = "ls";
    r.instance = describe_instance(f, &p, a);
    r.gap = oriented_gap(convex, mc, si);
    r.bound = factor * md.spread;
    r.weight_integral = si.weight;
    r.bound_coefficient = factor;
    finalize(r, tol_scale);
    return r;
}

IneqReport check_ostrowski_reverse(const OperatorFunction& f, const WeightFunction& p,
                                   const SymMatrix& a, const SymMatrix& b,
                                   const QuadratureRule& rule, double tol_scale) {
    const bool convex = require_definite_class(f);
    const MonotoneClass mc = p.monotone_class();
    const double dinf = p.derivative_norms().first;
    const SegmentIntegrals si = integrate_segment(f, &p, a, b, rule);
    const MidpointData md = midpoint_data(f, convex, a, b);

    IneqReport r;
    r.theorem_id = "ls_ostrowski";
    r.instance = describe_instance(f, &p, a);
    r.gap = oriented_gap(convex, mc, si);
    r.bound = (dinf / 8.0) * md.spread;
    r.weight_integral = si.weight;
    r.bound_coefficient = dinf / 8.0;
    finalize(r, tol_scale);
    return r;
}

IneqReport check_gateaux_reverse(const OperatorFunction& f, const WeightFunction& p,
                                 const SymMatrix& a, const SymMatrix& b,
                                 const QuadratureRule& rule, double tol_scale) {
    return gateaux_reverse_impl(f, p, a, b, rule, tol_scale, nullptr);
}

IneqReport check_cebysev_reverse(const OperatorFunction& f, const WeightFunction& p,
                                 const SymMatrix& a, const SymMatrix& b,
                                 const QuadratureRule& rule, double tol_scale) {
    return cebysev_reverse_impl(f, p, a, b, rule, tol_scale, nullptr);
}

IneqReport check_lupas_reverse(const OperatorFunction& f, const WeightFunction& p,
                               const SymMatrix& a, const SymMatrix& b, const QuadratureRule& rule,
                               double tol_scale) {
    const bool convex = require_definite_class(f);
    const MonotoneClass mc = p.monotone_class();
    const double d2 = p.derivative_norms().second;
    const SegmentIntegrals si = integrate_segment(f, &p, a, b, rule);

    // L2 norms (in t) of |grad(t) - grad(1-t)|_2 and |grad(t)|_2 where
    // grad(t) is the derivative of f along the segment at X(t).
    const SymMatrix delta = b - a;
    const auto& ts = rule.nodes();
    const auto& ws = rule.weights();
    double sym_sq = 0.0;
    double raw_sq = 0.0;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const SymMatrix dt = gateaux(f, segment_point(a, b, ts[k]), delta).value;
        const SymMatrix dr = gateaux(f, segment_point(a, b, 1.0 - ts[k]), delta).value;
        const double ns = operator_two_norm(dt - dr);
        const double nr = operator_two_norm(dt);
        sym_sq += ws[k] * ns * ns;
        raw_sq += ws[k] * nr * nr;
    }
    const double pi_sq = std::numbers::pi * std::numbers::pi;
    const double tight = d2 * std::sqrt(sym_sq) / (2.0 * pi_sq);
    const double weak = d2 * std::sqrt(raw_sq) / pi_sq;

    IneqReport r;
    r.theorem_id = "ls_lupas";
    r.instance = describe_instance(f, &p, a);
    r.gap = oriented_gap(convex, mc, si);
    r.bound = tight * SymMatrix::identity(a.dim());
    r.weight_integral = si.weight;
    r.bound_coefficient = tight;
    r.weak_bound_value = weak;
    r.extra_verdicts.emplace_back(
        "tight<=weak", loewner_leq(r.bound, weak * SymMatrix::identity(a.dim()), tol_scale));
    finalize(r, tol_scale);
    return r;
}

std::vector<IneqReport> run_example_suite(const SymMatrix& a, const SymMatrix& b,
                                          const QuadratureRule& rule, double tol_scale) {
    const WeightFunction p = WeightFunction::bump();
    std::vector<IneqReport> out;

    for (const double r : {-1.0, 1.5, 2.0}) {
        const OperatorFunction f = OperatorFunction::power(r);
        char rs[32];
        std::snprintf(rs, sizeof rs, "%g", r);

        IneqReport ls = check_ls_operator(f, p, a, b, rule, tol_scale);
        ls.theorem_id = std::string("ls:power(r=") + rs + ")";
        out.push_back(std::move(ls));

        IneqReport os = check_ostrowski_reverse(f, p, a, b, rule, tol_scale);
        os.theorem_id = std::string("ostrowski:power(r=") + rs + ")";
        out.push_back(std::move(os));
    }

    const OperatorFunction inv = OperatorFunction::inverse();
    IneqReport gi = check_gateaux_reverse(inv, p, a, b, rule, tol_scale);
    gi.theorem_id = "gateaux:inverse";
    out.push_back(std::move(gi));
    IneqReport ci = check_cebysev_reverse(inv, p, a, b, rule, tol_scale);
    ci.theorem_id = "cebysev:inverse";
    out.push_back(std::move(ci));
    IneqReport li = check_lupas_reverse(inv, p, a, b, rule, tol_scale);
    li.theorem_id = "lupas:inverse";
    out.push_back(std::move(li));

    const OperatorFunction lg = OperatorFunction::log();
    IneqReport lsl = check_ls_operator(lg, p, a, b, rule, tol_scale);
    lsl.theorem_id = "ls:log";
    out.push_back(std::move(lsl));
    IneqReport osl = check_ostrowski_reverse(lg, p, a, b, rule, tol_scale);
    osl.theorem_id = "ostrowski:log";
    out.push_back(std::move(osl));

    // Same two derivative-spread bounds for the logarithm, but with the
    // endpoint derivatives computed through the resolvent integral
    // int_0^inf (uI + T)^{-1} S (uI + T)^{-1} du instead of the
    // divided-difference kernel; the relative gap between the two routes is
    // recorded on the reports.
    const SemiInfiniteRule semi(rule);
    const SymMatrix delta = b - a;
    const SymMatrix da_int = gateaux_log_integral(a, delta, semi);
    const SymMatrix db_int = gateaux_log_integral(b, delta, semi);
    const SymMatrix da_dk = gateaux(lg, a, delta).value;
    const SymMatrix db_dk = gateaux(lg, b, delta).value;
    const double rel_a =
        operator_two_norm(da_int - da_dk) / (1.0 + operator_two_norm(da_dk));
    const double rel_b =
        operator_two_norm(db_int - db_dk) / (1.0 + operator_two_norm(db_dk));
    const double crosscheck = std::max(rel_a, rel_b);
    const SymMatrix spread_int = da_int - db_int;  // log is concave: grad_A - grad_B

    IneqReport gl = gateaux_reverse_impl(lg, p, a, b, rule, tol_scale, &spread_int);
    gl.theorem_id = "gateaux:log(integral)";
    gl.derivative_crosscheck_rel = crosscheck;
    out.push_back(std::move(gl));

    IneqReport cl = cebysev_reverse_impl(lg, p, a, b, rule, tol_scale, &spread_int);
    cl.theorem_id = "cebysev:log(integral)";
    cl.derivative_crosscheck_rel = crosscheck;
    out.push_back(std::move(cl));

    return out;
}

}  // namespace opineq

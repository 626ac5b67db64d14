// Acceptance suite for the operator inequality library.  Eight stand-alone
// criteria, one [PASS]/[FAIL] line each; exits nonzero if any fail.  Unlike
// the unit tests these exercise full pipelines end to end, with the frozen
// closed-form oracles spelled out inline.

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opineq/errors.hpp"
#include "opineq/gateaux.hpp"
#include "opineq/harness.hpp"
#include "opineq/inequalities.hpp"
#include "opineq/operator_function.hpp"
#include "opineq/quadrature.hpp"
#include "opineq/random.hpp"
#include "opineq/sym_matrix.hpp"
#include "opineq/weight_function.hpp"
#include "test_support.hpp"

using namespace opineq;

namespace {

int g_failures = 0;

void criterion(int index, const char* name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index, name, secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double max_abs(const SymMatrix& m) {
    double v = 0.0;
    for (const double e : m.entries()) v = std::max(v, std::fabs(e));
    return v;
}

bool close_entries(const SymMatrix& x, const SymMatrix& y, double scale_tol) {
    if (x.dim() != y.dim()) return false;
    for (std::size_t k = 0; k < x.entries().size(); ++k) {
        const double a = x.entries()[k], b = y.entries()[k];
        if (std::fabs(a - b) > scale_tol * (1.0 + std::fabs(a))) return false;
    }
    return true;
}

// 1. For f(t) = t^2, the bump weight t(1-t) and the pair (I, 2I) the weighted
//    gap has the closed form (1/180) I: on the segment (1+t) I the integrand
//    collapses to the scalar Chebyshev-type gap of t^2 against t(1-t), and
//    int p int phi - int p phi = 1/6 * 7/12 - 1/20 - ... = 1/180.  The upper
//    bound is (1/4)(p(1/2) - p(0)) * (f(A)+f(B)-2f((A+B)/2)) = (1/16)(1/4) I
//    = 0.015625 I, a dyadic value the quadrature must hit exactly.
bool c1_gap_oracle(std::string& detail) {
    const auto rep =
        check_ls_operator(OperatorFunction::square(), WeightFunction::bump(),
                          SymMatrix::identity(2), SymMatrix::identity(2) * 2.0,
                          QuadratureRule::default_rule());
    const double want = 1.0 / 180.0;
    bool ok = rep.pass();
    ok = ok && std::fabs(rep.gap.entries()[0] - want) <= 1e-10;
    ok = ok && std::fabs(rep.gap.entries()[3] - want) <= 1e-10;
    ok = ok && std::fabs(rep.gap.entries()[1]) <= 1e-10;
    ok = ok && rep.bound.entries()[0] == 0.015625 && rep.bound.entries()[3] == 0.015625 &&
         rep.bound.entries()[1] == 0.0;
    if (!ok) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "gap(0,0)=%.17g want %.17g, bound(0,0)=%.17g",
                      rep.gap.entries()[0], want, rep.bound.entries()[0]);
        detail = buf;
    }
    return ok;
}

// 2. Frozen scalar coefficients for the bump weight: the weight integral is
//    1/6, the two-sided gap coefficient (1/4)(p(1/2)-p(0)) is 1/16, and the
//    endpoint-derivative coefficient (1/16)(p(1/2)-p(0)) is 1/64.
bool c2_frozen_coefficients(std::string& detail) {
    const SymMatrix a = SymMatrix::identity(2);
    const SymMatrix b = a * 2.0;
    const auto& rule = QuadratureRule::default_rule();

    const auto ls = check_ls_operator(OperatorFunction::square(), WeightFunction::bump(), a, b,
                                      rule);
    const auto gx = check_gateaux_reverse(OperatorFunction::inverse(), WeightFunction::bump(), a,
                                          b, rule);
    bool ok = ls.weight_integral && std::fabs(*ls.weight_integral - 1.0 / 6.0) <= 1e-15;
    ok = ok && ls.bound_coefficient && *ls.bound_coefficient == 0.0625;
    ok = ok && gx.bound_coefficient && *gx.bound_coefficient == 0.015625;
    if (!ok) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "integral=%.17g ls_coeff=%.17g gateaux_coeff=%.17g",
                      ls.weight_integral.value_or(-1.0), ls.bound_coefficient.value_or(-1.0),
                      gx.bound_coefficient.value_or(-1.0));
        detail = buf;
    }
    return ok;
}

// 3. The divided-difference derivative must agree with a symmetric finite
//    difference on 100 random (f, T, S) triples, and for the logarithm also
//    with the resolvent-integral route.
bool c3_derivative_routes(std::string& detail) {
    const char* specs[] = {"power:1.5", "power:2", "power:-1", "log", "xlogx"};
    const SemiInfiniteRule semi(QuadratureRule::default_rule());
    double worst_fd = 0.0, worst_int = 0.0;
    for (int i = 0; i < 100; ++i) {
        SeededRng rng(1000 + static_cast<std::uint64_t>(i));
        const int dim = 2 + (i % 3);
        const auto f = OperatorFunction::parse(specs[i % 5]);
        const SymMatrix t = test_support::random_spd(dim, rng, 0.5, 4.0);
        const SymMatrix s = random_symmetric(dim, rng);

        const DirectionalDerivative dk = gateaux(f, t, s);
        const SymMatrix fd = gateaux_fd_oracle(f, t, s, default_fd_step(t, s));
        worst_fd = std::max(worst_fd, operator_two_norm(dk.value - fd) /
                                          (1.0 + operator_two_norm(fd)));
        if (std::string(specs[i % 5]) == "log") {
            const SymMatrix li = gateaux_log_integral(t, s, semi);
            worst_int = std::max(worst_int, operator_two_norm(li - dk.value) /
                                                (1.0 + operator_two_norm(dk.value)));
        }
    }
    const bool ok = worst_fd <= 1e-6 && worst_int <= 1e-7;
    char buf[120];
    std::snprintf(buf, sizeof buf, "worst fd rel %.2e, worst integral rel %.2e", worst_fd,
                  worst_int);
    detail = buf;
    return ok;
}

// 4. A 200-instance campaign over dims {2,4,8}, five functions and three
//    weights on [0.5, 4] must finish with zero failures, and every recorded
//    worst margin must clear the Loewner tolerance for its bound size.
bool c4_campaign(std::string& detail) {
    const auto specs = build_round_robin_specs(
        {2, 4, 8}, {0.5, 4.0}, {"power:-1", "power:1.5", "power:2", "xlogx", "log"},
        {"constant:1", "bump", "vee"}, {0, 199}, {16, 32});
    const auto rep = run_campaign(specs, TheoremSelection::all());
    bool ok = rep.instances == 200 && rep.failures.empty();
    for (const auto& [id, st] : rep.theorems) {
        if (st.worst_margin && *st.worst_margin < -1e-9 * (1.0 + st.max_bound_norm)) {
            detail += id + " margin " + format_float_17sig(*st.worst_margin) + "; ";
            ok = false;
        }
    }
    if (ok) {
        char buf[120];
        std::snprintf(buf, sizeof buf, "%" PRIu64 " instances, %zu theorem rows, 0 failures",
                      rep.instances, rep.theorems.size());
        detail = buf;
    } else if (!rep.failures.empty()) {
        detail = "first failure: seed " + std::to_string(rep.failures[0].seed) + " " +
                 rep.failures[0].theorem_id + " " + rep.failures[0].reason;
    }
    return ok;
}

// 5. For operator convex f the Gateaux derivative along the segment in
//    direction B - A is monotone; check the verdict chain on 50 instances.
bool c5_segment_monotonicity(std::string& detail) {
    const char* specs[] = {"power:-1", "power:1.5", "power:2", "xlogx", "power:-0.5"};
    for (int i = 0; i < 50; ++i) {
        SeededRng rng(2000 + static_cast<std::uint64_t>(i));
        const int dim = 2 + (i % 3);
        const auto f = OperatorFunction::parse(specs[i % 5]);
        const auto [a, b] = random_pair(dim, 0.5, 4.0, rng);
        const auto verdicts =
            check_segment_monotonicity(f, a, b, default_monotonicity_grid());
        for (std::size_t k = 0; k < verdicts.size(); ++k) {
            if (!verdicts[k].holds) {
                char buf[160];
                std::snprintf(buf, sizeof buf,
                              "seed %d f=%s dim=%d verdict %zu min eig %.3e", 2000 + i,
                              specs[i % 5], dim, k, verdicts[k].min_eig_of_difference);
                detail = buf;
                return false;
            }
        }
    }
    detail = "50 instances, full verdict chains hold";
    return true;
}

// 6. Scalar Chebyshev functional against the classical bound family on a
//    corpus of 30 function pairs with hand-computed ranges and derivative
//    norms; plus the equality witness C(t, t) = 1/12 where the derivative
//    bound is attained.
bool c6_scalar_corpus(std::string& detail) {
    struct Entry {
        const char* name;
        std::function<double(double)> fn;
        double lo, hi, dsup, dl2;
    };
    const std::vector<Entry> corpus = {
        {"t", [](double t) { return t; }, 0.0, 1.0, 1.0, 1.0},
        {"t^2", [](double t) { return t * t; }, 0.0, 1.0, 2.0, 2.0 / std::sqrt(3.0)},
        {"t(1-t)", [](double t) { return t * (1.0 - t); }, 0.0, 0.25, 1.0,
         std::sqrt(1.0 / 3.0)},
        {"1/(1+t)", [](double t) { return 1.0 / (1.0 + t); }, 0.5, 1.0, 1.0,
         std::sqrt(7.0 / 24.0)},
        {"ln(1+t)", [](double t) { return std::log1p(t); }, 0.0, std::log(2.0), 1.0,
         std::sqrt(0.5)},
        {"t^3", [](double t) { return t * t * t; }, 0.0, 1.0, 3.0, 3.0 / std::sqrt(5.0)},
    };
    const auto& rule = QuadratureRule::default_rule();

    int checked = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            if (i * corpus.size() + j >= 30) break;
            const Entry& h = corpus[i];
            const Entry& g = corpus[j];
            ScalarBoundsMetadata meta;
            meta.h_min = h.lo;
            meta.h_max = h.hi;
            meta.g_min = g.lo;
            meta.g_max = g.hi;
            meta.h_deriv_sup = h.dsup;
            meta.g_deriv_sup = g.dsup;
            meta.h_deriv_l2 = h.dl2;
            meta.g_deriv_l2 = g.dl2;
            const auto rep = scalar_bounds(h.fn, g.fn, meta, rule);
            if (!rep.gruss_bound || !rep.ostrowski_bound || !rep.cebysev_bound ||
                !rep.lupas_bound) {
                detail = std::string("missing bound for (") + h.name + ", " + g.name + ")";
                return false;
            }
            const double c = std::fabs(rep.c_value);
            for (const double bound : {*rep.gruss_bound, *rep.ostrowski_bound,
                                       *rep.cebysev_bound, *rep.lupas_bound}) {
                if (c > bound + 1e-12) {
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "(%s, %s): |C|=%.17g exceeds bound %.17g",
                                  h.name, g.name, c, bound);
                    detail = buf;
                    return false;
                }
            }
            ++checked;
        }
    }
    if (checked != 30) {
        detail = "expected 30 pairs, checked " + std::to_string(checked);
        return false;
    }

    ScalarBoundsMetadata id_meta;
    id_meta.h_deriv_sup = 1.0;
    id_meta.g_deriv_sup = 1.0;
    const auto witness =
        scalar_bounds([](double t) { return t; }, [](double t) { return t; }, id_meta, rule);
    const bool ok = std::fabs(witness.c_value - 1.0 / 12.0) <= 1e-12 &&
                    witness.cebysev_bound &&
                    std::fabs(*witness.cebysev_bound - 1.0 / 12.0) <= 1e-15;
    if (!ok) {
        detail = "identity witness: C=" + format_float_17sig(witness.c_value);
        return ok;
    }
    detail = "30 pairs within all four bounds; C(t,t)=1/12 attained";
    return ok;
}

// 7. Degenerate inputs collapse cleanly: equal endpoints and constant weights
//    give exactly zero bounds with vanishing gaps, and an affine function
//    turns the midpoint/endpoint chain into equalities.
bool c7_degenerate(std::string& detail) {
    SeededRng rng(77);
    const SymMatrix a = test_support::random_spd(3, rng, 0.5, 4.0);
    const auto& rule = QuadratureRule::default_rule();

    const auto equal_ends =
        check_ls_operator(OperatorFunction::square(), WeightFunction::bump(), a, a, rule);
    bool ok = equal_ends.pass() && max_abs(equal_ends.gap) <= 1e-10 &&
              max_abs(equal_ends.bound) == 0.0 && !equal_ends.tightness;
    if (!ok) {
        detail = "equal endpoints: gap " + format_float_17sig(max_abs(equal_ends.gap)) +
                 ", bound " + format_float_17sig(max_abs(equal_ends.bound));
        return false;
    }

    const auto [c, d] = random_pair(3, 0.5, 4.0, rng);
    const auto flat = check_ls_operator(OperatorFunction::square(),
                                        WeightFunction::constant(1.0), c, d, rule);
    ok = flat.pass() && max_abs(flat.gap) <= 1e-10 && max_abs(flat.bound) == 0.0 &&
         !flat.tightness;
    if (!ok) {
        detail = "constant weight: gap " + format_float_17sig(max_abs(flat.gap));
        return false;
    }

    const auto affine = check_hermite_hadamard(OperatorFunction::power(1.0), c, d, rule);
    ok = affine.pass() && max_abs(affine.gap) <= 1e-10 && max_abs(affine.bound) <= 1e-10;
    if (!ok) {
        detail = "affine function: gap " + format_float_17sig(max_abs(affine.gap)) +
                 ", bound " + format_float_17sig(max_abs(affine.bound));
    }
    return ok;
}

// 8. Doubling the panel count must not move any gap or bound by more than
//    1e-10 relative, and must not change which checks run or how they end.
bool c8_refinement(std::string& detail) {
    const auto specs = build_round_robin_specs(
        {2, 4, 8}, {0.5, 4.0}, {"power:-1", "power:1.5", "power:2", "xlogx", "log"},
        {"constant:1", "bump", "vee"}, {0, 199}, {16, 32});
    const QuadratureRule coarse(16, 32), fine(16, 64);
    const auto selection = TheoremSelection::all();
    int compared = 0;
    for (const InstanceSpec& spec : specs) {
        const auto f = OperatorFunction::parse(spec.function_spec);
        const auto p = WeightFunction::parse(spec.weight_spec);
        SeededRng rng1(spec.seed), rng2(spec.seed);
        const auto [a1, b1] = random_pair(spec.dim, spec.spectrum_lo, spec.spectrum_hi, rng1);
        const auto [a2, b2] = random_pair(spec.dim, spec.spectrum_lo, spec.spectrum_hi, rng2);
        const auto lhs = run_applicable_checkers(f, p, a1, b1, coarse, selection);
        const auto rhs = run_applicable_checkers(f, p, a2, b2, fine, selection);
        if (lhs.size() != rhs.size()) {
            detail = "outcome count changed at seed " + std::to_string(spec.seed);
            return false;
        }
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            const auto& x = lhs[k];
            const auto& y = rhs[k];
            if (x.theorem_id != y.theorem_id || x.error != y.error ||
                x.report.has_value() != y.report.has_value()) {
                detail = "outcome mismatch at seed " + std::to_string(spec.seed) + " " +
                         x.theorem_id;
                return false;
            }
            if (!x.report) continue;
            if (!close_entries(x.report->gap, y.report->gap, 1e-10) ||
                !close_entries(x.report->bound, y.report->bound, 1e-10)) {
                detail = "refinement moved " + x.theorem_id + " at seed " +
                         std::to_string(spec.seed);
                return false;
            }
            ++compared;
        }
    }
    detail = std::to_string(compared) + " reports stable under panel doubling";
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance: weighted operator inequality checks\n");
    criterion(1, "weighted gap oracle (square, bump)", c1_gap_oracle);
    criterion(2, "frozen coefficients 1/6, 1/16, 1/64", c2_frozen_coefficients);
    criterion(3, "derivative route agreement, 100 triples", c3_derivative_routes);
    criterion(4, "random campaign, 200 instances, zero failures", c4_campaign);
    criterion(5, "segment derivative monotonicity, 50 convex instances",
              c5_segment_monotonicity);
    criterion(6, "scalar functional corpus, 30 pairs", c6_scalar_corpus);
    criterion(7, "degenerate configurations collapse", c7_degenerate);
    criterion(8, "quadrature refinement stability", c8_refinement);
    if (g_failures == 0) {
        std::printf("all 8 criteria passed\n");
        return 0;
    }
    std::printf("%d of 8 criteria failed\n", g_failures);
    return 1;
}

// Command-line front end: random verification campaigns over the inequality
// catalogue, the worked-example sweep, and standalone weight validation.

#include <cinttypes>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opineq/errors.hpp"
#include "opineq/harness.hpp"

namespace {

int run_campaign_command(const std::vector<int>& dims, const std::string& interval,
                         const std::vector<std::string>& fns,
                         const std::vector<std::string>& weights, const std::string& seeds,
                         const std::string& theorems, const std::string& quad,
                         const std::string& format, const std::string& out_path) {
    const auto specs = opineq::build_round_robin_specs(
        dims, opineq::parse_interval(interval), fns, weights, opineq::parse_seed_range(seeds),
        opineq::parse_quad_spec(quad));
    const auto selection = opineq::TheoremSelection::parse(theorems);
    const auto report = opineq::run_campaign(specs, selection, opineq::tol_scale_from_env());

    const auto fmt = format == "csv" ? opineq::ReportFormat::csv : opineq::ReportFormat::json;
    const std::string text = opineq::render_report(report, fmt);
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        opineq::write_text_file(out_path, text);
    }
    std::fprintf(stderr, "ran %" PRId64 " instance(s); %zu theorem(s); %zu failure(s)\n",
                 report.instances, report.theorems.size(), report.failures.size());
    return report.failures.empty() ? 0 : 1;
}

int run_examples_command(int dim, const std::string& interval, std::uint64_t seed) {
    const auto [lo, hi] = opineq::parse_interval(interval);
    opineq::SeededRng rng(seed);
    const auto [a, b] = opineq::random_pair(dim, lo, hi, rng);
    const auto reports =
        opineq::run_example_suite(a, b, opineq::QuadratureRule::default_rule(),
                                  opineq::tol_scale_from_env());

    int failures = 0;
    for (const auto& r : reports) {
        const bool ok = r.pass();
        if (!ok) ++failures;
        std::string line = ok ? "[PASS] " : "[FAIL] ";
        line += r.theorem_id;
        char buf[128];
        std::snprintf(buf, sizeof buf, "  margin=%.3e", r.worst_margin());
        line += buf;
        if (r.tightness) {
            std::snprintf(buf, sizeof buf, "  tightness=%.3f", *r.tightness);
            line += buf;
        }
        if (r.derivative_crosscheck_rel) {
            std::snprintf(buf, sizeof buf, "  deriv_crosscheck=%.3e", *r.derivative_crosscheck_rel);
            line += buf;
        }
        std::printf("%s\n", line.c_str());
    }
    std::printf("%zu check(s), %d failure(s)\n", reports.size(), failures);
    return failures == 0 ? 0 : 1;
}

int run_validate_weight_command(const std::string& spec) {
    const auto p = opineq::WeightFunction::parse(spec);
    const auto& v = p.validation();
    std::printf("weight: %s\n", p.name().c_str());
    std::printf("symmetric: %s (residual %g)\n", v.symmetric ? "yes" : "no", v.symmetry_residual);
    if (v.monotone_ok) {
        std::printf("monotone: %s\n", opineq::to_string(v.monotone_class));
    } else {
        std::printf("monotone: no single class on [0, 1/2]\n");
    }
    std::printf("nonnegative: %s (grid min %g)\n", v.nonnegative ? "yes" : "no", v.grid_min);
    std::printf("p(0)=%g  p(1/2)=%g  integral=%.17g\n", v.p0, v.p_half, v.integral);
    if (v.dinf_norm && v.d2_norm) {
        std::printf("|p'|_inf=%.17g  |p'|_2=%.17g\n", *v.dinf_norm, *v.d2_norm);
    } else {
        std::printf("derivative norms: not differentiable\n");
    }
    std::printf("valid: %s\n", v.valid ? "yes" : "no");
    return v.valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical checks for weighted operator-convexity inequalities"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a random verification campaign");
    std::vector<int> dims{2};
    std::vector<std::string> fns{"power:2"};
    std::vector<std::string> weights{"bump"};
    std::string interval = "0.5:4";
    std::string seeds = "0:49";
    std::string theorems = "all";
    std::string quad = "16x32";
    std::string format = "json";
    std::string out_path;
    run->add_option("--dim", dims, "matrix dimensions (comma list)")->delimiter(',');
    run->add_option("--interval", interval, "open spectrum interval lo:hi");
    run->add_option("--fn", fns, "function specs (comma list)")->delimiter(',');
    run->add_option("--weight", weights, "weight specs (comma list)")->delimiter(',');
    run->add_option("--seeds", seeds, "inclusive seed range lo:hi");
    run->add_option("--theorems", theorems, "'all' or comma list of theorem ids");
    run->add_option("--quad", quad, "quadrature rule PxN (points per panel x panels)");
    run->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--out", out_path, "write the report here instead of stdout");

    auto* examples = app.add_subcommand("examples", "run the worked-example sweep");
    int ex_dim = 2;
    std::string ex_interval = "0.5:4";
    std::uint64_t ex_seed = 0;
    examples->add_option("--dim", ex_dim, "matrix dimension");
    examples->add_option("--interval", ex_interval, "open spectrum interval lo:hi");
    examples->add_option("--seed", ex_seed, "random seed");

    auto* validate = app.add_subcommand("validate-weight", "validate a weight spec");
    std::string weight_spec;
    validate->add_option("spec", weight_spec, "weight spec, e.g. bump or table:w.csv")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_campaign_command(dims, interval, fns, weights, seeds, theorems, quad,
                                        format, out_path);
        }
        if (examples->parsed()) {
            return run_examples_command(ex_dim, ex_interval, ex_seed);
        }
        return run_validate_weight_command(weight_spec);
    } catch (const opineq::Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", e.code(), e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

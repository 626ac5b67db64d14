#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opineq/inequalities.hpp"
#include "opineq/random.hpp"

namespace opineq {

// One unit of campaign work: which matrices to draw and which function and
// weight to run them through.
struct InstanceSpec {
    int dim = 2;
    double spectrum_lo = 0.5;
    double spectrum_hi = 4.0;
    std::uint64_t seed = 0;
    std::string function_spec = "power:2";
    std::string weight_spec = "bump";
    int quad_points = 16;
    int quad_panels = 32;

    void validate() const;  // throws OutOfRange on bad dims/interval/rule sizes
    std::string describe() const;
};

// Two random matrices with spectra inside (lo, hi): eigenvalues drawn
// uniformly from the interval shrunk by 5% on each side, eigenvectors from a
// random orthogonal frame.  The draw order (A eigenvalues, A frame,
// B eigenvalues, B frame) is part of the reproducibility contract.
std::pair<SymMatrix, SymMatrix> random_pair(int dim, double lo, double hi, SeededRng& rng);

class TheoremSelection {
public:
    static TheoremSelection all();
    static TheoremSelection parse(std::string_view text);  // "all" or a comma list of ids
    static const std::vector<std::string>& known_ids();

    bool contains(std::string_view id) const;
    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::vector<std::string> ids_;
};

struct CheckOutcome {
    std::string theorem_id;
    std::optional<IneqReport> report;  // absent when the checker threw
    std::string error;                 // "<code>: <message>" when the checker threw
};

// Runs every selected check whose hypotheses the pair (f, p) can satisfy per
// the catalogue metadata: a definite convexity class for everything, a
// nonnegative weight for the weighted chain, a differentiable weight for the
// derivative-norm bounds, and a weight that is not known to be nonincreasing
// for the endpoint-derivative bound.  Checks that blow up at run time (domain
// violations, invalid weights) come back as error outcomes instead of
// exceptions so a campaign can record them and keep going.
std::vector<CheckOutcome> run_applicable_checkers(const OperatorFunction& f,
                                                  const WeightFunction& p, const SymMatrix& a,
                                                  const SymMatrix& b, const QuadratureRule& rule,
                                                  const TheoremSelection& selection,
                                                  double tol_scale = kDefaultTolScale);

struct FailureRecord {
    std::uint64_t seed = 0;
    std::string theorem_id;
    std::string reason;
    std::optional<double> margin;  // present for verdict failures, absent for errors
};

struct TheoremStats {
    std::int64_t instances = 0;
    std::int64_t passes = 0;
    std::optional<double> worst_margin;
    double max_bound_norm = 0.0;    // not serialized; used for tolerance scaling
    std::vector<double> tightness;  // one sample per report that produced one
};

struct CampaignReport {
    std::int64_t instances = 0;
    std::map<std::string, TheoremStats> theorems;
    std::vector<FailureRecord> failures;  // sorted by (seed, theorem_id, reason)
};

CampaignReport run_campaign(const std::vector<InstanceSpec>& specs,
                            const TheoremSelection& selection,
                            double tol_scale = kDefaultTolScale);

// ---------------------------------------------------------------- output --

enum class ReportFormat { json, csv };

std::string format_float_17sig(double x);  // printf %.17g, enough to round-trip

// Compact single-line JSON:
//   {"instances":N,
//    "theorems":{id:{"instances":N,"passes":N,"worst_margin":x|null,
//                    "tightness":{"min":x,"median":x,"max":x}|null}},
//    "failures":[{"seed":N,"theorem_id":s,"reason":s,"margin":x|null}]}
// No trailing newline.
std::string report_to_json(const CampaignReport& report);

// One row per theorem id; failures are JSON-only.  Absent values are empty
// fields.  Every line, including the last, ends with a newline.
std::string report_to_csv(const CampaignReport& report);

// Ready-to-write text for either format (JSON gains its trailing newline).
std::string render_report(const CampaignReport& report, ReportFormat format);

void write_text_file(const std::string& path, const std::string& content);

// --------------------------------------------------------------- parsing --

std::pair<double, double> parse_interval(std::string_view text);  // "lo:hi", lo < hi
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(std::string_view text);  // inclusive
std::pair<int, int> parse_quad_spec(std::string_view text);       // "PxN"
std::vector<std::string> split_csv_list(std::string_view text);   // trimmed, no empties

// Assigns seeds seed_lo..seed_hi to the (dim, function, weight) grid round
// robin: seed s gets combo (s - seed_lo) mod |grid|, weight index moving
// fastest, then function, then dimension.
std::vector<InstanceSpec> build_round_robin_specs(const std::vector<int>& dims,
                                                  std::pair<double, double> interval,
                                                  const std::vector<std::string>& functions,
                                                  const std::vector<std::string>& weights,
                                                  std::pair<std::uint64_t, std::uint64_t> seeds,
                                                  std::pair<int, int> quad);

// OPINEQ_TOL environment override for the positive-semidefinite comparison
// tolerance scale; kDefaultTolScale when unset.
double tol_scale_from_env();

}  // namespace opineq

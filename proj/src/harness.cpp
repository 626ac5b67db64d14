#include "opineq/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <tuple>

#include "opineq/errors.hpp"

namespace opineq {
namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

double parse_double_strict(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("cannot parse ") + what + " from '" + text + "'");
}

std::uint64_t parse_u64_strict(const std::string& text, const char* what) {
    if (!text.empty() && text[0] != '-') {
        try {
            std::size_t used = 0;
            const std::uint64_t v = std::stoull(text, &used);
            if (used == text.size()) return v;
        } catch (const std::exception&) {
        }
    }
    throw ParseError(std::string("cannot parse ") + what + " from '" + text + "'");
}

int parse_positive_int(const std::string& text, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("cannot parse ") + what + " from '" + text + "'");
}

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

struct TightnessSummary {
    double min = 0.0, median = 0.0, max = 0.0;
};

TightnessSummary summarize_tightness(const std::vector<double>& samples) {
    std::vector<double> s = samples;
    std::sort(s.begin(), s.end());
    TightnessSummary out;
    out.min = s.front();
    out.max = s.back();
    const std::size_t n = s.size();
    out.median = (n % 2 == 1) ? s[n / 2] : 0.5 * (s[n / 2 - 1] + s[n / 2]);
    return out;
}

}  // namespace

void InstanceSpec::validate() const {
    if (dim < 1 || dim > 64) {
        throw OutOfRange("dim must be in [1, 64], got " + std::to_string(dim));
    }
    if (!(spectrum_lo < spectrum_hi)) {
        throw OutOfRange("spectrum interval needs lo < hi, got " + std::to_string(spectrum_lo) +
                         ":" + std::to_string(spectrum_hi));
    }
    if (quad_points < 1 || quad_panels < 1) {
        throw OutOfRange("quadrature sizes must be positive");
    }
}

std::string InstanceSpec::describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "seed=%llu dim=%d interval=%g:%g quad=%dx%d",
                  static_cast<unsigned long long>(seed), dim, spectrum_lo, spectrum_hi,
                  quad_points, quad_panels);
    return std::string(buf) + " f=" + function_spec + " p=" + weight_spec;
}

std::pair<SymMatrix, SymMatrix> random_pair(int dim, double lo, double hi, SeededRng& rng) {
    if (dim < 1) throw OutOfRange("random_pair: dimension must be positive");
    if (!(lo < hi)) throw OutOfRange("random_pair: spectrum interval needs lo < hi");
    const double eta = 0.05 * (hi - lo);
    const auto draw = [&]() {
        std::vector<double> eigs(static_cast<std::size_t>(dim));
        for (double& e : eigs) e = rng.uniform(lo + eta, hi - eta);
        SpectralDecomposition frame;
        frame.eigenvectors = random_orthogonal(dim, rng);
        frame.source_dim = dim;
        return frame.assemble(eigs);
    };
    SymMatrix a = draw();
    SymMatrix b = draw();
    return {std::move(a), std::move(b)};
}

const std::vector<std::string>& TheoremSelection::known_ids() {
    static const std::vector<std::string> ids = {"hh",         "fejer",      "ls",
                                                 "ls_ostrowski", "ls_gateaux", "ls_cebysev",
                                                 "ls_lupas"};
    return ids;
}

TheoremSelection TheoremSelection::all() {
    TheoremSelection s;
    s.ids_ = known_ids();
    return s;
}

TheoremSelection TheoremSelection::parse(std::string_view text) {
    if (trim(text) == "all") return all();
    TheoremSelection s;
    for (const std::string& id : split_csv_list(text)) {
        const auto& known = known_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw ParseError("unknown theorem id '" + id + "'");
        }
        if (!s.contains(id)) s.ids_.push_back(id);
    }
    return s;
}

bool TheoremSelection::contains(std::string_view id) const {
    return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::vector<CheckOutcome> run_applicable_checkers(const OperatorFunction& f,
                                                  const WeightFunction& p, const SymMatrix& a,
                                                  const SymMatrix& b, const QuadratureRule& rule,
                                                  const TheoremSelection& selection,
                                                  double tol_scale) {
    std::vector<CheckOutcome> out;
    if (f.classify() == ConvexityClass::neither) return out;  // nothing applies

    const WeightValidation& v = p.validation();
    const bool known_nonincreasing =
        v.valid && v.monotone_class == MonotoneClass::nonincreasing_on_first_half;

    const auto attempt = [&](const char* id, const auto& checker) {
        if (!selection.contains(id)) return;
        CheckOutcome oc;
        oc.theorem_id = id;
        try {
            oc.report = checker();
        } catch (const Error& e) {
            oc.error = std::string(e.code()) + ": " + e.what();
        } catch (const std::exception& e) {
            oc.error = std::string("Error: ") + e.what();
        }
        out.push_back(std::move(oc));
    };

    attempt("hh", [&] { return check_hermite_hadamard(f, a, b, rule, tol_scale); });
    if (v.nonnegative) {
        attempt("fejer", [&] { return check_fejer(f, p, a, b, rule, tol_scale); });
    }
    attempt("ls", [&] { return check_ls_operator(f, p, a, b, rule, tol_scale); });
    if (p.differentiable()) {
        attempt("ls_ostrowski",
                [&] { return check_ostrowski_reverse(f, p, a, b, rule, tol_scale); });
    }
    if (!known_nonincreasing) {
        attempt("ls_gateaux", [&] { return check_gateaux_reverse(f, p, a, b, rule, tol_scale); });
    }
    if (p.differentiable()) {
        attempt("ls_cebysev", [&] { return check_cebysev_reverse(f, p, a, b, rule, tol_scale); });
        attempt("ls_lupas", [&] { return check_lupas_reverse(f, p, a, b, rule, tol_scale); });
    }
    return out;
}

CampaignReport run_campaign(const std::vector<InstanceSpec>& specs,
                            const TheoremSelection& selection, double tol_scale) {
    CampaignReport rep;
    for (const InstanceSpec& spec : specs) {
        spec.validate();
        const OperatorFunction f = OperatorFunction::parse(spec.function_spec);
        const WeightFunction p = WeightFunction::parse(spec.weight_spec);
        const QuadratureRule rule(spec.quad_points, spec.quad_panels);
        SeededRng rng(spec.seed);
        const auto [a, b] = random_pair(spec.dim, spec.spectrum_lo, spec.spectrum_hi, rng);

        rep.instances += 1;
        for (const CheckOutcome& oc :
             run_applicable_checkers(f, p, a, b, rule, selection, tol_scale)) {
            TheoremStats& st = rep.theorems[oc.theorem_id];
            st.instances += 1;
            if (oc.report) {
                const IneqReport& r = *oc.report;
                const double margin = r.worst_margin();
                st.worst_margin = st.worst_margin ? std::min(*st.worst_margin, margin) : margin;
                st.max_bound_norm = std::max(st.max_bound_norm, operator_two_norm(r.bound));
                if (r.tightness) st.tightness.push_back(*r.tightness);
                if (r.pass()) {
                    st.passes += 1;
                } else {
                    rep.failures.push_back({spec.seed, oc.theorem_id, "verdict failed", margin});
                }
            } else {
                rep.failures.push_back({spec.seed, oc.theorem_id, oc.error, std::nullopt});
            }
        }
    }
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const FailureRecord& x, const FailureRecord& y) {
                  return std::tie(x.seed, x.theorem_id, x.reason) <
                         std::tie(y.seed, y.theorem_id, y.reason);
              });
    return rep;
}

std::string format_float_17sig(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string report_to_json(const CampaignReport& report) {
    std::string out = "{\"instances\":" + std::to_string(report.instances) + ",\"theorems\":{";
    bool first = true;
    for (const auto& [id, st] : report.theorems) {
        if (!first) out += ",";
        first = false;
        out += "\"" + escape_json(id) + "\":{\"instances\":" + std::to_string(st.instances) +
               ",\"passes\":" + std::to_string(st.passes) + ",\"worst_margin\":";
        out += st.worst_margin ? format_float_17sig(*st.worst_margin) : "null";
        out += ",\"tightness\":";
        if (st.tightness.empty()) {
            out += "null";
        } else {
            const TightnessSummary t = summarize_tightness(st.tightness);
            out += "{\"min\":" + format_float_17sig(t.min) +
                   ",\"median\":" + format_float_17sig(t.median) +
                   ",\"max\":" + format_float_17sig(t.max) + "}";
        }
        out += "}";
    }
    out += "},\"failures\":[";
    first = true;
    for (const FailureRecord& fr : report.failures) {
        if (!first) out += ",";
        first = false;
        out += "{\"seed\":" + std::to_string(fr.seed) + ",\"theorem_id\":\"" +
               escape_json(fr.theorem_id) + "\",\"reason\":\"" + escape_json(fr.reason) +
               "\",\"margin\":";
        out += fr.margin ? format_float_17sig(*fr.margin) : "null";
        out += "}";
    }
    out += "]}";
    return out;
}

std::string report_to_csv(const CampaignReport& report) {
    std::string out =
        "theorem_id,instances,passes,worst_margin,tightness_min,tightness_median,tightness_max\n";
    for (const auto& [id, st] : report.theorems) {
        out += id + "," + std::to_string(st.instances) + "," + std::to_string(st.passes) + ",";
        if (st.worst_margin) out += format_float_17sig(*st.worst_margin);
        out += ",";
        if (st.tightness.empty()) {
            out += ",,";
        } else {
            const TightnessSummary t = summarize_tightness(st.tightness);
            out += format_float_17sig(t.min) + "," + format_float_17sig(t.median) + "," +
                   format_float_17sig(t.max);
        }
        out += "\n";
    }
    return out;
}

std::string render_report(const CampaignReport& report, ReportFormat format) {
    return format == ReportFormat::json ? report_to_json(report) + "\n" : report_to_csv(report);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw Error("short write to '" + path + "'");
}

std::pair<double, double> parse_interval(std::string_view text) {
    const std::string s = trim(text);
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
        throw ParseError("interval must look like lo:hi, got '" + s + "'");
    }
    const double lo = parse_double_strict(trim(s.substr(0, colon)), "interval endpoint");
    const double hi = parse_double_strict(trim(s.substr(colon + 1)), "interval endpoint");
    if (!(lo < hi)) throw ParseError("interval needs lo < hi, got '" + s + "'");
    return {lo, hi};
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(std::string_view text) {
    const std::string s = trim(text);
    const std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
        throw ParseError("seed range must look like lo:hi, got '" + s + "'");
    }
    const std::uint64_t lo = parse_u64_strict(trim(s.substr(0, colon)), "seed");
    const std::uint64_t hi = parse_u64_strict(trim(s.substr(colon + 1)), "seed");
    if (lo > hi) throw ParseError("seed range needs lo <= hi, got '" + s + "'");
    return {lo, hi};
}

std::pair<int, int> parse_quad_spec(std::string_view text) {
    const std::string s = trim(text);
    const std::size_t x = s.find('x');
    if (x == std::string::npos) {
        throw ParseError("quadrature spec must look like PxN (points x panels), got '" + s + "'");
    }
    const int points = parse_positive_int(trim(s.substr(0, x)), "points per panel");
    const int panels = parse_positive_int(trim(s.substr(x + 1)), "panel count");
    return {points, panels};
}

std::vector<std::string> split_csv_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string item =
            trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (item.empty()) throw ParseError("empty item in list '" + std::string(text) + "'");
        out.push_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<InstanceSpec> build_round_robin_specs(const std::vector<int>& dims,
                                                  std::pair<double, double> interval,
                                                  const std::vector<std::string>& functions,
                                                  const std::vector<std::string>& weights,
                                                  std::pair<std::uint64_t, std::uint64_t> seeds,
                                                  std::pair<int, int> quad) {
    if (dims.empty() || functions.empty() || weights.empty()) {
        throw OutOfRange("round-robin grid needs at least one dim, function and weight");
    }
    if (seeds.first > seeds.second) throw OutOfRange("seed range needs lo <= hi");

    const std::size_t nw = weights.size();
    const std::size_t nf = functions.size();
    const std::size_t ncombos = dims.size() * nf * nw;

    std::vector<InstanceSpec> specs;
    for (std::uint64_t s = seeds.first;; ++s) {
        const std::size_t idx = static_cast<std::size_t>((s - seeds.first) % ncombos);
        InstanceSpec spec;
        spec.dim = dims[idx / (nf * nw)];
        spec.spectrum_lo = interval.first;
        spec.spectrum_hi = interval.second;
        spec.seed = s;
        spec.function_spec = functions[(idx / nw) % nf];
        spec.weight_spec = weights[idx % nw];
        spec.quad_points = quad.first;
        spec.quad_panels = quad.second;
        specs.push_back(std::move(spec));
        if (s == seeds.second) break;
    }
    return specs;
}

double tol_scale_from_env() {
    const char* raw = std::getenv("OPINEQ_TOL");
    if (raw == nullptr || *raw == '\0') return kDefaultTolScale;
    const double v = parse_double_strict(trim(raw), "OPINEQ_TOL");
    if (!(v > 0.0)) throw ParseError("OPINEQ_TOL must be positive");
    return v;
}

}  // namespace opineq

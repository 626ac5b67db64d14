#include "opineq/weight_function.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "opineq/errors.hpp"

namespace opineq {

namespace {

constexpr int kGridDenominator = 1024;  // validation grid t_i = i/1024
constexpr double kGridTol = 1e-12;

std::string trim(std::string s) {
    const auto notspace = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

}  // namespace

const char* to_string(MonotoneClass c) {
    return c == MonotoneClass::nondecreasing_on_first_half ? "nondecreasing_on_first_half"
                                                           : "nonincreasing_on_first_half";
}

WeightFunction::WeightFunction(Kind kind, double c, std::vector<double> ts,
                               std::vector<double> ps, std::string name)
    : kind_(kind), c_(c), ts_(std::move(ts)), ps_(std::move(ps)), name_(std::move(name)) {
    differentiable_ = kind_ != Kind::vee;
    run_validation();
}

WeightFunction WeightFunction::constant(double c) {
    if (!std::isfinite(c)) throw ParseError("constant weight must be finite");
    char buf[48];
    std::snprintf(buf, sizeof buf, "constant:%g", c);
    return WeightFunction(Kind::constant, c, {}, {}, buf);
}

WeightFunction WeightFunction::bump() {
    return WeightFunction(Kind::bump, 0.0, {}, {}, "bump");
}

WeightFunction WeightFunction::vee() {
    return WeightFunction(Kind::vee, 0.0, {}, {}, "vee");
}

WeightFunction WeightFunction::tabulated(std::vector<double> ts, std::vector<double> ps) {
    if (ts.size() != ps.size() || ts.size() < 2)
        throw InvalidWeight("tabulated weight needs at least two matching samples");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!std::isfinite(ts[i]) || !std::isfinite(ps[i]))
            throw InvalidWeight("tabulated weight sample is not finite");
        if (i > 0 && !(ts[i] > ts[i - 1]))
            throw InvalidWeight("tabulated weight abscissae must be strictly ascending");
    }
    if (std::abs(ts.front()) > kGridTol || std::abs(ts.back() - 1.0) > kGridTol)
        throw InvalidWeight("tabulated weight must cover [0, 1]");
    ts.front() = 0.0;
    ts.back() = 1.0;
    return WeightFunction(Kind::tabulated, 0.0, std::move(ts), std::move(ps), "table");
}

WeightFunction WeightFunction::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidWeight("cannot open weight table: " + path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidWeight("weight table is empty: " + path);
    if (trim(line) != "t,p")
        throw InvalidWeight("weight table must start with header 't,p': " + path);
    std::vector<double> ts, ps;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string::npos)
            throw InvalidWeight("weight table row " + std::to_string(line_no) + " has no comma");
        try {
            ts.push_back(std::stod(row.substr(0, comma)));
            ps.push_back(std::stod(row.substr(comma + 1)));
        } catch (const std::exception&) {
            throw InvalidWeight("weight table row " + std::to_string(line_no) + " is not numeric");
        }
    }
    WeightFunction w = tabulated(std::move(ts), std::move(ps));
    w.name_ = "table:" + path;
    return w;
}

WeightFunction WeightFunction::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    if (head == "bump") {
        if (colon != std::string_view::npos) throw ParseError("bump takes no argument");
        return bump();
    }
    if (head == "vee") {
        if (colon != std::string_view::npos) throw ParseError("vee takes no argument");
        return vee();
    }
    if (head == "constant") {
        if (colon == std::string_view::npos)
            throw ParseError("constant requires a value, e.g. constant:1");
        const std::string arg(spec.substr(colon + 1));
        try {
            std::size_t used = 0;
            const double c = std::stod(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return constant(c);
        } catch (const std::exception&) {
            throw ParseError("bad constant weight value: '" + arg + "'");
        }
    }
    if (head == "table") {
        if (colon == std::string_view::npos) throw ParseError("table requires a file path");
        return from_csv(std::string(spec.substr(colon + 1)));
    }
    throw ParseError("unknown weight spec: '" + std::string(spec) + "'");
}

double WeightFunction::raw_eval(double t) const {
    switch (kind_) {
        case Kind::constant:
            return c_;
        case Kind::bump:
            return t * (1.0 - t);
        case Kind::vee:
            return std::abs(t - 0.5);
        case Kind::tabulated: {
            const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
            if (it == ts_.begin()) return ps_.front();
            if (it == ts_.end()) return ps_.back();
            const std::size_t hi = static_cast<std::size_t>(it - ts_.begin());
            const std::size_t lo = hi - 1;
            const double span = ts_[hi] - ts_[lo];
            const double frac = (t - ts_[lo]) / span;
            return ps_[lo] + frac * (ps_[hi] - ps_[lo]);
        }
    }
    return 0.0;
}

double WeightFunction::eval(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw OutOfRange("weight argument outside [0, 1]");
    return raw_eval(t);
}

void WeightFunction::run_validation() {
    WeightValidation v;

    double residual = 0.0;
    double grid_min = raw_eval(0.0);
    std::vector<double> grid(kGridDenominator + 1);
    for (int i = 0; i <= kGridDenominator; ++i) {
        const double t = static_cast<double>(i) / kGridDenominator;
        grid[i] = raw_eval(t);
        grid_min = std::min(grid_min, grid[i]);
    }
    for (int i = 0; i <= kGridDenominator; ++i)
        residual = std::max(residual, std::abs(grid[i] - grid[kGridDenominator - i]));
    v.symmetric = residual <= kGridTol;
    v.symmetry_residual = residual;
    v.grid_min = grid_min;
    v.nonnegative = grid_min >= -kGridTol;

    bool nondecr = true, noninc = true;
    for (int i = 0; i < kGridDenominator / 2; ++i) {
        const double diff = grid[i + 1] - grid[i];
        if (diff < -kGridTol) nondecr = false;
        if (diff > kGridTol) noninc = false;
    }
    v.monotone_ok = nondecr || noninc;
    v.monotone_class = nondecr ? MonotoneClass::nondecreasing_on_first_half
                               : MonotoneClass::nonincreasing_on_first_half;
    v.valid = v.symmetric && v.monotone_ok;

    switch (kind_) {
        case Kind::constant:
            v.p0 = v.p_half = c_;
            v.integral = c_;
            v.dinf_norm = 0.0;
            v.d2_norm = 0.0;
            break;
        case Kind::bump:
            v.p0 = 0.0;
            v.p_half = 0.25;
            v.integral = 1.0 / 6.0;
            v.dinf_norm = 1.0;                  // sup |1 - 2t|
            v.d2_norm = std::sqrt(1.0 / 3.0);   // (int (1-2t)^2)^(1/2)
            break;
        case Kind::vee:
            v.p0 = 0.5;
            v.p_half = 0.0;
            v.integral = 0.25;
            break;  // no derivative norms
        case Kind::tabulated: {
            v.p0 = raw_eval(0.0);
            v.p_half = raw_eval(0.5);
            double integral = 0.0, dinf = 0.0, d2sq = 0.0;
            for (std::size_t i = 0; i + 1 < ts_.size(); ++i) {
                const double dt = ts_[i + 1] - ts_[i];
                const double slope = (ps_[i + 1] - ps_[i]) / dt;
                integral += 0.5 * (ps_[i] + ps_[i + 1]) * dt;
                dinf = std::max(dinf, std::abs(slope));
                d2sq += slope * slope * dt;
            }
            v.integral = integral;
            v.dinf_norm = dinf;
            v.d2_norm = std::sqrt(d2sq);
            break;
        }
    }
    validation_ = v;
}

MonotoneClass WeightFunction::monotone_class() const {
    if (!validation_.valid)
        throw InvalidWeight("weight '" + name_ + "' is not symmetric-monotone");
    return validation_.monotone_class;
}

std::pair<double, double> WeightFunction::derivative_norms() const {
    if (!differentiable_ || !validation_.dinf_norm || !validation_.d2_norm)
        throw NotDifferentiable("weight '" + name_ + "' has no derivative norms");
    return {*validation_.dinf_norm, *validation_.d2_norm};
}

}  // namespace opineq

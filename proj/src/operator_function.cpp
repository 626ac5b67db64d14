#include "opineq/operator_function.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "opineq/errors.hpp"

namespace opineq {

namespace {

std::string format_exponent(double r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", r);
    return buf;
}

}  // namespace

const char* to_string(ConvexityClass c) {
    switch (c) {
        case ConvexityClass::operator_convex: return "operator_convex";
        case ConvexityClass::operator_concave: return "operator_concave";
        case ConvexityClass::neither: return "neither";
    }
    return "?";
}

OperatorFunction::OperatorFunction(Kind kind, double exponent, int sign, std::string name)
    : kind_(kind), exponent_(exponent), sign_(sign), name_(std::move(name)) {}

OperatorFunction OperatorFunction::power(double exponent) {
    if (!std::isfinite(exponent))
        throw ParseError("power exponent must be finite");
    return OperatorFunction(Kind::power, exponent, +1, "power:" + format_exponent(exponent));
}

OperatorFunction OperatorFunction::log() {
    return OperatorFunction(Kind::logarithm, 0.0, +1, "log");
}

OperatorFunction OperatorFunction::xlogx() {
    return OperatorFunction(Kind::xlogx, 0.0, +1, "xlogx");
}

OperatorFunction OperatorFunction::inverse() {
    return OperatorFunction(Kind::power, -1.0, +1, "inverse");
}

OperatorFunction OperatorFunction::square() {
    return OperatorFunction(Kind::power, 2.0, +1, "square");
}

OperatorFunction OperatorFunction::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    if (head == "power") {
        if (colon == std::string_view::npos)
            throw ParseError("power requires an exponent, e.g. power:1.5");
        const std::string arg(spec.substr(colon + 1));
        try {
            std::size_t used = 0;
            const double r = std::stod(arg, &used);
            if (used != arg.size()) throw std::invalid_argument(arg);
            return power(r);
        } catch (const std::exception&) {
            throw ParseError("bad power exponent: '" + arg + "'");
        }
    }
    if (colon != std::string_view::npos)
        throw ParseError("function '" + std::string(head) + "' takes no argument");
    if (head == "log") return log();
    if (head == "xlogx") return xlogx();
    if (head == "inverse") return inverse();
    if (head == "square") return square();
    throw ParseError("unknown function spec: '" + std::string(spec) + "'");
}

OperatorFunction OperatorFunction::negated() const {
    return OperatorFunction(kind_, exponent_, -sign_, "neg(" + name_ + ")");
}

std::optional<double> OperatorFunction::power_exponent() const {
    if (kind_ != Kind::power) return std::nullopt;
    return exponent_;
}

double OperatorFunction::domain_margin() const {
    return 1e-8 * (1.0 + std::abs(domain_lower()));
}

bool OperatorFunction::admits(double t) const {
    return std::isfinite(t) && t >= domain_lower() + domain_margin();
}

void OperatorFunction::require_in_domain(double t) const {
    if (!admits(t)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "argument %.17g below domain margin %.3g for %s",
                      t, domain_margin(), name_.c_str());
        throw SpectrumOutOfDomain(buf);
    }
}

double OperatorFunction::base_eval(double t) const {
    switch (kind_) {
        case Kind::power: {
            const double r = exponent_;
            if (r == 0.0) return 1.0;
            if (r == 1.0) return t;
            if (r == 2.0) return t * t;
            if (r == -1.0) return 1.0 / t;
            return std::pow(t, r);
        }
        case Kind::logarithm:
            return std::log(t);
        case Kind::xlogx:
            return t * std::log(t);
    }
    return 0.0;
}

double OperatorFunction::base_derivative(double t) const {
    switch (kind_) {
        case Kind::power: {
            const double r = exponent_;
            if (r == 0.0) return 0.0;
            if (r == 1.0) return 1.0;
            if (r == 2.0) return 2.0 * t;
            if (r == -1.0) return -1.0 / (t * t);
            return r * std::pow(t, r - 1.0);
        }
        case Kind::logarithm:
            return 1.0 / t;
        case Kind::xlogx:
            return std::log(t) + 1.0;
    }
    return 0.0;
}

double OperatorFunction::eval(double t) const {
    require_in_domain(t);
    return sign_ * base_eval(t);
}

double OperatorFunction::derivative(double t) const {
    require_in_domain(t);
    return sign_ * base_derivative(t);
}

bool OperatorFunction::base_convex() const {
    switch (kind_) {
        case Kind::power:
            return (exponent_ >= 1.0 && exponent_ <= 2.0) ||
                   (exponent_ >= -1.0 && exponent_ <= 0.0);
        case Kind::logarithm:
            return false;
        case Kind::xlogx:
            return true;
    }
    return false;
}

bool OperatorFunction::base_concave() const {
    switch (kind_) {
        case Kind::power:
            return exponent_ >= 0.0 && exponent_ <= 1.0;
        case Kind::logarithm:
            return true;
        case Kind::xlogx:
            return false;
    }
    return false;
}

bool OperatorFunction::is_operator_convex() const {
    return sign_ > 0 ? base_convex() : base_concave();
}

bool OperatorFunction::is_operator_concave() const {
    return sign_ > 0 ? base_concave() : base_convex();
}

ConvexityClass OperatorFunction::classify() const {
    if (is_operator_convex()) return ConvexityClass::operator_convex;
    if (is_operator_concave()) return ConvexityClass::operator_concave;
    return ConvexityClass::neither;
}

}  // namespace opineq

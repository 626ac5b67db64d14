#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace opineq {

enum class ConvexityClass { operator_convex, operator_concave, neither };

const char* to_string(ConvexityClass c);

// Catalogue of scalar functions admissible for the spectral calculus, all
// defined on (0, inf):
//
//   power:r   t^r          operator convex for r in [1,2] or [-1,0],
//                          operator concave for r in [0,1]
//   log       ln t         operator concave
//   xlogx     t ln t       operator convex
//   inverse   alias of power:-1
//   square    alias of power:2
//
// negated() wraps any entry as -f, which swaps the convexity classes.
// Evaluation enforces a safety margin of 1e-8 away from the open endpoint
// at zero.
class OperatorFunction {
public:
    static OperatorFunction power(double exponent);
    static OperatorFunction log();
    static OperatorFunction xlogx();
    static OperatorFunction inverse();
    static OperatorFunction square();

    // Accepts "power:<r>", "log", "xlogx", "inverse", "square".
    static OperatorFunction parse(std::string_view spec);

    OperatorFunction negated() const;

    double eval(double t) const;
    double operator()(double t) const { return eval(t); }
    double derivative(double t) const;

    // Single-valued class used for orienting inequality checks.  Affine
    // boundary cases (power:0, power:1) are both convex and concave; here
    // the convex label wins.  The two predicates below expose the exact
    // classification table.
    ConvexityClass classify() const;
    bool is_operator_convex() const;
    bool is_operator_concave() const;

    double domain_lower() const { return 0.0; }
    double domain_margin() const;
    bool admits(double t) const;
    void require_in_domain(double t) const;

    // Introspection used by closed-form derivative shortcuts.
    std::optional<double> power_exponent() const;  // nullopt unless a power
    int sign() const { return sign_; }

    const std::string& name() const { return name_; }

private:
    enum class Kind { power, logarithm, xlogx };

    OperatorFunction(Kind kind, double exponent, int sign, std::string name);

    double base_eval(double t) const;
    double base_derivative(double t) const;
    bool base_convex() const;
    bool base_concave() const;

    Kind kind_;
    double exponent_;
    int sign_;  // +1, or -1 for negated()
    std::string name_;
};

}  // namespace opineq

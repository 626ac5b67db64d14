#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opineq {

enum class MonotoneClass { nondecreasing_on_first_half, nonincreasing_on_first_half };

const char* to_string(MonotoneClass c);

// Outcome of checking a weight on the 1025-point dyadic grid i/1024.
// `valid` requires symmetry about 1/2 and one-sided monotonicity on the
// first half, both within 1e-12.  Constant weights report as nondecreasing.
struct WeightValidation {
    bool symmetric = false;
    double symmetry_residual = 0.0;
    bool monotone_ok = false;
    MonotoneClass monotone_class = MonotoneClass::nondecreasing_on_first_half;
    bool valid = false;
    bool nonnegative = false;
    double grid_min = 0.0;
    double p0 = 0.0;       // value at 0
    double p_half = 0.0;   // value at 1/2
    double integral = 0.0;
    std::optional<double> dinf_norm;  // sup |p'| on (0, 1)
    std::optional<double> d2_norm;    // L2 norm of p'
};

// Weight on [0, 1].  Catalogue kinds:
//   constant:<c>  p(t) = c
//   bump          p(t) = t (1 - t)
//   vee           p(t) = |t - 1/2|   (not differentiable at 1/2)
//   table:<path>  piecewise-linear interpolation of CSV samples
// Analytic kinds carry closed-form endpoint values, integral and derivative
// norms; tabulated weights estimate norms from one-sided differences of the
// samples and integrate the interpolant exactly by the trapezoid rule.
class WeightFunction {
public:
    static WeightFunction constant(double c);
    static WeightFunction bump();
    static WeightFunction vee();
    static WeightFunction tabulated(std::vector<double> ts, std::vector<double> ps);
    static WeightFunction from_csv(const std::string& path);
    static WeightFunction parse(std::string_view spec);

    double eval(double t) const;
    double operator()(double t) const { return eval(t); }

    const WeightValidation& validation() const { return validation_; }
    MonotoneClass monotone_class() const;  // throws InvalidWeight unless valid
    bool differentiable() const { return differentiable_; }

    double p0() const { return validation_.p0; }
    double p_half() const { return validation_.p_half; }
    double integral() const { return validation_.integral; }

    // (sup norm, L2 norm) of the derivative; NotDifferentiable for `vee`.
    std::pair<double, double> derivative_norms() const;

    const std::string& name() const { return name_; }

private:
    enum class Kind { constant, bump, vee, tabulated };

    WeightFunction(Kind kind, double c, std::vector<double> ts, std::vector<double> ps,
                   std::string name);

    double raw_eval(double t) const;
    void run_validation();

    Kind kind_;
    double c_ = 0.0;
    std::vector<double> ts_, ps_;
    bool differentiable_ = true;
    std::string name_;
    WeightValidation validation_;
};

}  // namespace opineq

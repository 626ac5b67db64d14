#pragma once

#include <functional>
#include <vector>

#include "opineq/sym_matrix.hpp"

namespace opineq {

// Composite Gauss-Legendre rule on [0, 1]: `panels` equal subintervals with
// `points_per_panel` nodes each.  Nodes are strictly inside (0, 1) and
// ascending; weights are positive and sum to one.  Each panel integrates
// polynomials up to degree 2 * points_per_panel - 1 exactly.
class QuadratureRule {
public:
    QuadratureRule(int points_per_panel, int panels);

    static const QuadratureRule& default_rule();  // 16 points x 32 panels

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    int points_per_panel() const { return points_; }
    int panels() const { return panels_; }

private:
    int points_;
    int panels_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// Rule for integrals over [0, inf), obtained from a [0, 1] base rule through
// s = u / (1 - u) with Jacobian 1 / (1 - u)^2.  Transformed nodes stay finite
// because base nodes never touch 1.
class SemiInfiniteRule {
public:
    explicit SemiInfiniteRule(QuadratureRule base);

    const QuadratureRule& base() const { return base_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    QuadratureRule base_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

// All integration sums run over nodes in ascending order, so results are
// bytewise reproducible.  Non-finite integrand values raise NonFiniteValue.
double integrate_scalar(const std::function<double(double)>& g, const QuadratureRule& rule);
SymMatrix integrate_matrix(const std::function<SymMatrix(double)>& g, const QuadratureRule& rule);
SymMatrix integrate_semi_infinite_matrix(const std::function<SymMatrix(double)>& g,
                                         const SemiInfiniteRule& rule);

}  // namespace opineq

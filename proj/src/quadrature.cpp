#include "opineq/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "opineq/errors.hpp"

namespace opineq {

namespace {

// Gauss-Legendre nodes and weights on [-1, 1], ascending, via Newton
// iteration on the Legendre recurrence.
void legendre_rule(int npts, std::vector<double>& x, std::vector<double>& w) {
    x.assign(npts, 0.0);
    w.assign(npts, 0.0);
    const int half = (npts + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < npts; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = npts * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        x[i] = -z;
        x[npts - 1 - i] = z;
        w[i] = w[npts - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
}

}  // namespace

QuadratureRule::QuadratureRule(int points_per_panel, int panels)
    : points_(points_per_panel), panels_(panels) {
    if (points_per_panel < 1 || panels < 1)
        throw OutOfRange("quadrature rule needs at least one point and one panel");
    std::vector<double> x, w;
    legendre_rule(points_per_panel, x, w);
    nodes_.reserve(static_cast<std::size_t>(points_per_panel) * panels);
    weights_.reserve(static_cast<std::size_t>(points_per_panel) * panels);
    const double width = 1.0 / panels;
    for (int k = 0; k < panels; ++k) {
        const double left = static_cast<double>(k) / panels;
        for (int i = 0; i < points_per_panel; ++i) {
            nodes_.push_back(left + 0.5 * (x[i] + 1.0) * width);
            weights_.push_back(0.5 * w[i] * width);
        }
    }
}

const QuadratureRule& QuadratureRule::default_rule() {
    static const QuadratureRule rule(16, 32);
    return rule;
}

SemiInfiniteRule::SemiInfiniteRule(QuadratureRule base) : base_(std::move(base)) {
    nodes_.reserve(base_.nodes().size());
    weights_.reserve(base_.nodes().size());
    for (std::size_t i = 0; i < base_.nodes().size(); ++i) {
        const double u = base_.nodes()[i];
        const double om = 1.0 - u;
        nodes_.push_back(u / om);
        weights_.push_back(base_.weights()[i] / (om * om));
    }
}

double integrate_scalar(const std::function<double(double)>& g, const QuadratureRule& rule) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const double v = g(rule.nodes()[i]);
        if (!std::isfinite(v)) throw NonFiniteValue("integrand produced a non-finite value");
        acc += rule.weights()[i] * v;
    }
    return acc;
}

namespace {

SymMatrix accumulate_matrix(const std::function<SymMatrix(double)>& g,
                            const std::vector<double>& nodes,
                            const std::vector<double>& weights) {
    std::vector<double> acc;
    int n = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const SymMatrix v = g(nodes[i]);
        if (i == 0) {
            n = v.dim();
            acc.assign(static_cast<std::size_t>(n) * n, 0.0);
        } else if (v.dim() != n) {
            throw DimensionMismatch("integrand dimension changed between nodes");
        }
        const double w = weights[i];
        for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += w * v.entries()[e];
    }
    if (n == 0) throw OutOfRange("empty quadrature rule");
    return SymMatrix(n, std::move(acc));
}

}  // namespace

SymMatrix integrate_matrix(const std::function<SymMatrix(double)>& g, const QuadratureRule& rule) {
    return accumulate_matrix(g, rule.nodes(), rule.weights());
}

SymMatrix integrate_semi_infinite_matrix(const std::function<SymMatrix(double)>& g,
                                         const SemiInfiniteRule& rule) {
    return accumulate_matrix(g, rule.nodes(), rule.weights());
}

}  // namespace opineq

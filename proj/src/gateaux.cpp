#include "opineq/gateaux.hpp"

#include <cmath>

#include "opineq/errors.hpp"

namespace opineq {

DirectionalDerivative gateaux(const OperatorFunction& f, const SymMatrix& t, const SymMatrix& s) {
    if (t.dim() != s.dim()) throw DimensionMismatch("gateaux: base point and direction differ");
    const SpectralDecomposition d = eigh(t);
    double max_abs_eig = 0.0;
    for (double l : d.eigenvalues) {
        f.require_in_domain(l);
        max_abs_eig = std::max(max_abs_eig, std::abs(l));
    }
    const double confluent = 1e-7 * (1.0 + max_abs_eig);

    const SymMatrix s_tilde = d.to_eigenbasis(s);
    const int n = t.dim();
    std::vector<double> kernel(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double li = d.eigenvalues[i];
            const double lj = d.eigenvalues[j];
            double dd;
            if (std::abs(li - lj) <= confluent) {
                dd = f.derivative(0.5 * (li + lj));
            } else {
                dd = (f.eval(li) - f.eval(lj)) / (li - lj);
            }
            kernel[static_cast<std::size_t>(i) * n + j] = dd * s_tilde(i, j);
            kernel[static_cast<std::size_t>(j) * n + i] = dd * s_tilde(j, i);
        }

    DirectionalDerivative out;
    out.value = d.from_eigenbasis(SymMatrix(n, std::move(kernel)));
    out.method = DerivativeMethod::daleckii_krein;
    out.base_point = t;
    out.direction = s;
    return out;
}

double default_fd_step(const SymMatrix& t, const SymMatrix& s) {
    return 1e-5 * (1.0 + operator_two_norm(t)) / (1.0 + operator_two_norm(s));
}

SymMatrix gateaux_fd_oracle(const OperatorFunction& f, const SymMatrix& t, const SymMatrix& s,
                            double step) {
    if (t.dim() != s.dim()) throw DimensionMismatch("gateaux_fd_oracle: dimension mismatch");
    if (!(step > 0.0)) throw OutOfRange("finite-difference step must be positive");
    const SymMatrix plus = apply_fn(f, t + step * s);
    const SymMatrix minus = apply_fn(f, t - step * s);
    return (plus - minus) * (0.5 / step);
}

SymMatrix gateaux_log_integral(const SymMatrix& t, const SymMatrix& s,
                               const SemiInfiniteRule& rule) {
    if (t.dim() != s.dim()) throw DimensionMismatch("gateaux_log_integral: dimension mismatch");
    const int n = t.dim();
    const SymMatrix eye = SymMatrix::identity(n);
    std::vector<double> acc(static_cast<std::size_t>(n) * n, 0.0);
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        const double u = rule.nodes()[i];
        const SymMatrix resolvent = spd_inverse(u * eye + t);
        const SymMatrix term = sandwich(resolvent, s);
        const double w = rule.weights()[i];
        for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += w * term.entries()[e];
    }
    return SymMatrix(n, std::move(acc));
}

std::optional<DirectionalDerivative> gateaux_closed_form(const OperatorFunction& f,
                                                         const SymMatrix& t, const SymMatrix& s) {
    const auto exponent = f.power_exponent();
    if (!exponent) return std::nullopt;

    SymMatrix value;
    if (*exponent == 2.0) {
        value = symmetrized_product(t, s);
    } else if (*exponent == -1.0) {
        value = -sandwich(spd_inverse(t), s);
    } else if (*exponent == 1.0) {
        value = s;
    } else if (*exponent == 0.0) {
        value = SymMatrix(t.dim());
    } else {
        return std::nullopt;
    }
    DirectionalDerivative out;
    out.value = f.sign() < 0 ? -value : value;
    out.method = DerivativeMethod::closed_form;
    out.base_point = t;
    out.direction = s;
    return out;
}

std::vector<LoewnerVerdict> check_segment_monotonicity(const OperatorFunction& f,
                                                       const SymMatrix& a, const SymMatrix& b,
                                                       std::span<const double> grid,
                                                       double tol_scale) {
    if (f.classify() != ConvexityClass::operator_convex)
        throw UnsupportedFunctionClass("segment monotonicity requires an operator convex function");
    if (grid.empty()) throw OutOfRange("monotonicity grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0 && grid[i] < 1.0))
            throw OutOfRange("monotonicity grid points must lie in (0, 1)");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw OutOfRange("monotonicity grid must be ascending");
    }
    const SymMatrix direction = b - a;
    auto deriv_at = [&](double tt) {
        return gateaux(f, segment_point(a, b, tt), direction).value;
    };

    std::vector<LoewnerVerdict> verdicts;
    verdicts.reserve(grid.size() + 1);
    SymMatrix prev = deriv_at(0.0);  // segment_point returns a exactly at t = 0
    for (double tt : grid) {
        SymMatrix cur = deriv_at(tt);
        verdicts.push_back(loewner_leq(prev, cur, tol_scale));
        prev = std::move(cur);
    }
    verdicts.push_back(loewner_leq(prev, deriv_at(1.0), tol_scale));
    return verdicts;
}

const std::vector<double>& default_monotonicity_grid() {
    static const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    return grid;
}

}  // namespace opineq

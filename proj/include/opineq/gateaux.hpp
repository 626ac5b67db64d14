#pragma once

#include <optional>
#include <span>
#include <vector>

#include "opineq/operator_function.hpp"
#include "opineq/quadrature.hpp"
#include "opineq/sym_matrix.hpp"

namespace opineq {

enum class DerivativeMethod { daleckii_krein, closed_form, log_integral, finite_difference };

struct DirectionalDerivative {
    SymMatrix value;
    DerivativeMethod method = DerivativeMethod::daleckii_krein;
    SymMatrix base_point;
    SymMatrix direction;
};

// Directional derivative of the spectral calculus,
//   d/ds f(T + s S) at s = 0,
// computed in the eigenbasis of T: entry (i, j) is the divided difference
// (f(l_i) - f(l_j)) / (l_i - l_j) times (Q^T S Q)_ij, with the confluent
// branch f'((l_i + l_j)/2) once |l_i - l_j| <= 1e-7 (1 + max |l|).
DirectionalDerivative gateaux(const OperatorFunction& f, const SymMatrix& t, const SymMatrix& s);

// Symmetric difference (f(T + hS) - f(T - hS)) / (2h); an independent check
// of the divided-difference route.
double default_fd_step(const SymMatrix& t, const SymMatrix& s);
SymMatrix gateaux_fd_oracle(const OperatorFunction& f, const SymMatrix& t, const SymMatrix& s,
                            double step);

// Derivative of the matrix logarithm through its integral representation
//   int_0^inf (uI + T)^{-1} S (uI + T)^{-1} du,
// evaluated by quadrature with Cholesky inverses at each node.  Third,
// fully independent route for f = log.
SymMatrix gateaux_log_integral(const SymMatrix& t, const SymMatrix& s, const SemiInfiniteRule& rule);

// Exact derivatives where simple formulas exist (square, inverse, power:0,
// power:1, and their negations); nullopt otherwise.
std::optional<DirectionalDerivative> gateaux_closed_form(const OperatorFunction& f,
                                                         const SymMatrix& t, const SymMatrix& s);

// For operator convex f the derivative along the segment from A to B in
// direction B - A is monotone in the positive-semidefinite order.  Returns
// verdicts for the endpoint-to-grid and consecutive-grid comparisons, in
// segment order.
std::vector<LoewnerVerdict> check_segment_monotonicity(const OperatorFunction& f,
                                                       const SymMatrix& a, const SymMatrix& b,
                                                       std::span<const double> grid,
                                                       double tol_scale = kDefaultTolScale);

const std::vector<double>& default_monotonicity_grid();  // 0.1, 0.2, ..., 0.9

}  // namespace opineq

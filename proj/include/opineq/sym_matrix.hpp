#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "opineq/operator_function.hpp"

namespace opineq {

// Relative scale of the tolerance used by positive-semidefinite order
// comparisons: X <= Y is accepted when lambda_min(Y - X) >= -scale * (1 + |Y - X|_2).
inline constexpr double kDefaultTolScale = 1e-9;

// Dense real symmetric matrix with value semantics.  Construction from raw
// entries symmetrizes via (M + M^T)/2, records the worst asymmetry of the
// input and rejects anything beyond 1e-12 * (1 + max|entry|) or non-finite.
// Entries are immutable afterwards, so exact symmetry is an invariant.
class SymMatrix {
public:
    SymMatrix() = default;                            // dim-0 placeholder
    explicit SymMatrix(int dim);                      // zero matrix
    SymMatrix(int dim, std::vector<double> entries);  // row-major, dim*dim

    static SymMatrix identity(int dim);
    static SymMatrix diagonal(std::span<const double> d);
    static SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
    const std::vector<double>& entries() const { return e_; }
    double asymmetry_residual() const { return asym_; }

    double max_abs() const;
    double frobenius_norm() const;
    double trace() const;

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double s);
    SymMatrix operator-() const;

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
    friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

private:
    int dim_ = 0;
    std::vector<double> e_;
    double asym_ = 0.0;
};

// Eigen-decomposition M = Q diag(eigenvalues) Q^T with eigenvalues ascending
// and the k-th column of Q the matching eigenvector.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;  // row-major source_dim x source_dim
    int source_dim = 0;

    SymMatrix assemble(std::span<const double> diagonal) const;  // Q diag Q^T
    SymMatrix to_eigenbasis(const SymMatrix& s) const;           // Q^T s Q
    SymMatrix from_eigenbasis(const SymMatrix& m) const;         // Q m Q^T
};

struct LoewnerVerdict {
    double min_eig_of_difference = 0.0;
    double tolerance_used = 0.0;
    bool holds = false;
};

// Cyclic Jacobi iteration; converges when the off-diagonal Frobenius norm
// drops below 1e-13 * |M|_F, capped at 100 sweeps.
SpectralDecomposition eigh(const SymMatrix& m);

// Spectral calculus f(M) = Q f(diag) Q^T.  Every eigenvalue must sit in the
// domain of f with the function's safety margin.
SymMatrix apply_fn(const OperatorFunction& f, const SymMatrix& m);

// Positive-semidefinite order test X <= Y.
LoewnerVerdict loewner_leq(const SymMatrix& x, const SymMatrix& y,
                           double tol_scale = kDefaultTolScale);

// (1-t) a + t b for t in [0, 1]; exact endpoints.
SymMatrix segment_point(const SymMatrix& a, const SymMatrix& b, double t);

double quadratic_form(const SymMatrix& m, std::span<const double> x);

double operator_two_norm(const SymMatrix& m);  // max |eigenvalue|
double min_eigenvalue(const SymMatrix& m);
double max_eigenvalue(const SymMatrix& m);

SymMatrix symmetrized_product(const SymMatrix& t, const SymMatrix& s);  // TS + ST
SymMatrix sandwich(const SymMatrix& x, const SymMatrix& s);             // X S X

// Cholesky-based inverse; independent of the Jacobi solver so the two can
// cross-check each other.
SymMatrix spd_inverse(const SymMatrix& m);

}  // namespace opineq

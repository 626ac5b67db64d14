#include "opineq/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "opineq/errors.hpp"

namespace opineq {

namespace {

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s: dimensions %d and %d differ", what, a.dim(), b.dim());
        throw DimensionMismatch(buf);
    }
}

// Plain row-major product, used only inside this translation unit.
std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j)
                c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
        }
    return c;
}

double offdiag_frobenius(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<std::size_t>(i) * n + j];
            s += v * v;
        }
    return std::sqrt(2.0 * s);
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw DimensionMismatch("matrix dimension must be positive");
    e_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

SymMatrix::SymMatrix(int dim, std::vector<double> entries) : dim_(dim), e_(std::move(entries)) {
    if (dim < 1) throw DimensionMismatch("matrix dimension must be positive");
    if (e_.size() != static_cast<std::size_t>(dim) * dim)
        throw DimensionMismatch("entry count does not match dimension");
    double max_abs_entry = 0.0;
    for (double v : e_) {
        if (!std::isfinite(v)) throw NonFiniteValue("matrix entry is not finite");
        max_abs_entry = std::max(max_abs_entry, std::abs(v));
    }
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) {
            double& upper = e_[static_cast<std::size_t>(i) * dim_ + j];
            double& lower = e_[static_cast<std::size_t>(j) * dim_ + i];
            asym_ = std::max(asym_, std::abs(upper - lower));
            const double m = 0.5 * (upper + lower);
            upper = lower = m;
        }
    if (asym_ > 1e-12 * (1.0 + max_abs_entry)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "input asymmetry %.3g exceeds tolerance", asym_);
        throw AsymmetricInput(buf);
    }
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.e_[static_cast<std::size_t>(i) * dim + i] = 1.0;
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim_; ++i) m.e_[static_cast<std::size_t>(i) * m.dim_ + i] = d[i];
    return m;
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatch("row length does not match row count");
        e.insert(e.end(), row.begin(), row.end());
    }
    return SymMatrix(n, std::move(e));
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::abs(v));
    return m;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : e_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    require_same_dim(*this, o, "operator+");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    require_same_dim(*this, o, "operator-");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    for (double& v : e_) v *= s;
    return *this;
}

SymMatrix SymMatrix::operator-() const {
    SymMatrix r = *this;
    for (double& v : r.e_) v = -v;
    return r;
}

SymMatrix SpectralDecomposition::assemble(std::span<const double> diagonal) const {
    const int n = source_dim;
    if (static_cast<int>(diagonal.size()) != n)
        throw DimensionMismatch("diagonal length does not match decomposition");
    std::vector<double> r(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                s += eigenvectors[static_cast<std::size_t>(i) * n + k] * diagonal[k] *
                     eigenvectors[static_cast<std::size_t>(j) * n + k];
            r[static_cast<std::size_t>(i) * n + j] = r[static_cast<std::size_t>(j) * n + i] = s;
        }
    return SymMatrix(n, std::move(r));
}

SymMatrix SpectralDecomposition::to_eigenbasis(const SymMatrix& s) const {
    const int n = source_dim;
    if (s.dim() != n) throw DimensionMismatch("to_eigenbasis: dimension mismatch");
    // tmp = S Q, result = Q^T tmp
    std::vector<double> tmp(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += s(i, k) * eigenvectors[static_cast<std::size_t>(k) * n + j];
            tmp[static_cast<std::size_t>(i) * n + j] = acc;
        }
    std::vector<double> r(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += eigenvectors[static_cast<std::size_t>(k) * n + i] *
                       tmp[static_cast<std::size_t>(k) * n + j];
            r[static_cast<std::size_t>(i) * n + j] = acc;
        }
    return SymMatrix(n, std::move(r));
}

SymMatrix SpectralDecomposition::from_eigenbasis(const SymMatrix& m) const {
    const int n = source_dim;
    if (m.dim() != n) throw DimensionMismatch("from_eigenbasis: dimension mismatch");
    // tmp = Q m, result = tmp Q^T
    std::vector<double> tmp(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += eigenvectors[static_cast<std::size_t>(i) * n + k] * m(k, j);
            tmp[static_cast<std::size_t>(i) * n + j] = acc;
        }
    std::vector<double> r(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += tmp[static_cast<std::size_t>(i) * n + k] *
                       eigenvectors[static_cast<std::size_t>(j) * n + k];
            r[static_cast<std::size_t>(i) * n + j] = acc;
        }
    return SymMatrix(n, std::move(r));
}

SpectralDecomposition eigh(const SymMatrix& m) {
    const int n = m.dim();
    if (n < 1) throw DimensionMismatch("eigh: empty matrix");
    std::vector<double> a = m.entries();
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double target = 1e-13 * m.frobenius_norm();
    constexpr int kMaxSweeps = 100;

    bool converged = offdiag_frobenius(a, n) <= target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p) * n + p];
                const double aqq = a[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e10) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<std::size_t>(p) * n + q] = 0.0;
                a[static_cast<std::size_t>(q) * n + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i != p && i != q) {
                        const double aip = a[static_cast<std::size_t>(i) * n + p];
                        const double aiq = a[static_cast<std::size_t>(i) * n + q];
                        const double np = aip - s * (aiq + tau * aip);
                        const double nq = aiq + s * (aip - tau * aiq);
                        a[static_cast<std::size_t>(i) * n + p] = np;
                        a[static_cast<std::size_t>(p) * n + i] = np;
                        a[static_cast<std::size_t>(i) * n + q] = nq;
                        a[static_cast<std::size_t>(q) * n + i] = nq;
                    }
                    const double vip = v[static_cast<std::size_t>(i) * n + p];
                    const double viq = v[static_cast<std::size_t>(i) * n + q];
                    v[static_cast<std::size_t>(i) * n + p] = vip - s * (viq + tau * vip);
                    v[static_cast<std::size_t>(i) * n + q] = viq + s * (vip - tau * viq);
                }
            }
        converged = offdiag_frobenius(a, n) <= target;
    }
    if (!converged) throw EighNotConverged("Jacobi iteration did not converge in 100 sweeps");

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
        const double dx = a[static_cast<std::size_t>(x) * n + x];
        const double dy = a[static_cast<std::size_t>(y) * n + y];
        return dx != dy ? dx < dy : x < y;
    });

    SpectralDecomposition d;
    d.source_dim = n;
    d.eigenvalues.resize(n);
    d.eigenvectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[k] = a[static_cast<std::size_t>(idx[k]) * n + idx[k]];
        for (int i = 0; i < n; ++i)
            d.eigenvectors[static_cast<std::size_t>(i) * n + k] =
                v[static_cast<std::size_t>(i) * n + idx[k]];
    }
    return d;
}

SymMatrix apply_fn(const OperatorFunction& f, const SymMatrix& m) {
    const SpectralDecomposition d = eigh(m);
    std::vector<double> fd(d.eigenvalues.size());
    for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
        f.require_in_domain(d.eigenvalues[k]);
        fd[k] = f.eval(d.eigenvalues[k]);
    }
    return d.assemble(fd);
}

LoewnerVerdict loewner_leq(const SymMatrix& x, const SymMatrix& y, double tol_scale) {
    require_same_dim(x, y, "loewner_leq");
    const SymMatrix diff = y - x;
    const SpectralDecomposition d = eigh(diff);
    const double lo = d.eigenvalues.front();
    const double hi = d.eigenvalues.back();
    const double two_norm = std::max(std::abs(lo), std::abs(hi));
    LoewnerVerdict v;
    v.min_eig_of_difference = lo;
    v.tolerance_used = tol_scale * (1.0 + two_norm);
    v.holds = lo >= -v.tolerance_used;
    return v;
}

SymMatrix segment_point(const SymMatrix& a, const SymMatrix& b, double t) {
    require_same_dim(a, b, "segment_point");
    if (!(t >= 0.0 && t <= 1.0)) throw OutOfRange("segment parameter outside [0, 1]");
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    const int n = a.dim();
    std::vector<double> e(static_cast<std::size_t>(n) * n);
    const double u = 1.0 - t;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = u * a.entries()[i] + t * b.entries()[i];
    return SymMatrix(n, std::move(e));
}

double quadratic_form(const SymMatrix& m, std::span<const double> x) {
    if (static_cast<int>(x.size()) != m.dim())
        throw DimensionMismatch("quadratic_form: vector length mismatch");
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        double row = 0.0;
        for (int j = 0; j < m.dim(); ++j) row += m(i, j) * x[j];
        s += x[i] * row;
    }
    return s;
}

double operator_two_norm(const SymMatrix& m) {
    const SpectralDecomposition d = eigh(m);
    return std::max(std::abs(d.eigenvalues.front()), std::abs(d.eigenvalues.back()));
}

double min_eigenvalue(const SymMatrix& m) { return eigh(m).eigenvalues.front(); }

double max_eigenvalue(const SymMatrix& m) { return eigh(m).eigenvalues.back(); }

SymMatrix symmetrized_product(const SymMatrix& t, const SymMatrix& s) {
    require_same_dim(t, s, "symmetrized_product");
    const int n = t.dim();
    const std::vector<double> p = matmul(t.entries(), s.entries(), n);
    std::vector<double> r(static_cast<std::size_t>(n) * n);
    // (TS)_ij + (TS)_ji is exactly symmetric entrywise.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[static_cast<std::size_t>(i) * n + j] =
                p[static_cast<std::size_t>(i) * n + j] + p[static_cast<std::size_t>(j) * n + i];
    return SymMatrix(n, std::move(r));
}

SymMatrix sandwich(const SymMatrix& x, const SymMatrix& s) {
    require_same_dim(x, s, "sandwich");
    const int n = x.dim();
    const std::vector<double> xs = matmul(x.entries(), s.entries(), n);
    std::vector<double> r(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += xs[static_cast<std::size_t>(i) * n + k] * x(k, j);
            r[static_cast<std::size_t>(i) * n + j] = r[static_cast<std::size_t>(j) * n + i] = acc;
        }
    return SymMatrix(n, std::move(r));
}

SymMatrix spd_inverse(const SymMatrix& m) {
    const int n = m.dim();
    std::vector<double> l = m.entries();
    for (int j = 0; j < n; ++j) {
        double d = l[static_cast<std::size_t>(j) * n + j];
        for (int k = 0; k < j; ++k) {
            const double v = l[static_cast<std::size_t>(j) * n + k];
            d -= v * v;
        }
        if (d <= 0.0) throw NotPositiveDefinite("Cholesky pivot is not positive");
        const double root = std::sqrt(d);
        l[static_cast<std::size_t>(j) * n + j] = root;
        for (int i = j + 1; i < n; ++i) {
            double s = l[static_cast<std::size_t>(i) * n + j];
            for (int k = 0; k < j; ++k)
                s -= l[static_cast<std::size_t>(i) * n + k] * l[static_cast<std::size_t>(j) * n + k];
            l[static_cast<std::size_t>(i) * n + j] = s / root;
        }
    }
    std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> y(n), x(n);
    for (int col = 0; col < n; ++col) {
        for (int i = 0; i < n; ++i) {
            double s = (i == col) ? 1.0 : 0.0;
            for (int k = 0; k < i; ++k) s -= l[static_cast<std::size_t>(i) * n + k] * y[k];
            y[i] = s / l[static_cast<std::size_t>(i) * n + i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int k = i + 1; k < n; ++k) s -= l[static_cast<std::size_t>(k) * n + i] * x[k];
            x[i] = s / l[static_cast<std::size_t>(i) * n + i];
        }
        for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i) * n + col] = x[i];
    }
    return SymMatrix(n, std::move(inv));
}

}  // namespace opineq

#include "opineq/random.hpp"

#include <cmath>
#include <numbers>

#include "opineq/errors.hpp"

namespace opineq {

double SeededRng::uniform01() {
    // 53 random bits scaled into [0, 1).
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

std::vector<double> random_orthogonal(int n, SeededRng& rng) {
    if (n < 1) throw DimensionMismatch("random_orthogonal: dimension must be positive");
    std::vector<double> q(static_cast<std::size_t>(n) * n);
    for (double& v : q) v = rng.normal();
    // Column-wise modified Gram-Schmidt, run twice for orthogonality near
    // machine precision.
    for (int k = 0; k < n; ++k) {
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j < k; ++j) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i)
                    dot += q[static_cast<std::size_t>(i) * n + j] * q[static_cast<std::size_t>(i) * n + k];
                for (int i = 0; i < n; ++i)
                    q[static_cast<std::size_t>(i) * n + k] -= dot * q[static_cast<std::size_t>(i) * n + j];
            }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            const double v = q[static_cast<std::size_t>(i) * n + k];
            norm += v * v;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw NonFiniteValue("degenerate Gaussian draw in random_orthogonal");
        for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + k] /= norm;
    }
    return q;
}

SymMatrix random_symmetric(int n, SeededRng& rng) {
    std::vector<double> e(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double v = rng.normal();
            e[static_cast<std::size_t>(i) * n + j] = v;
            e[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return SymMatrix(n, std::move(e));
}

std::vector<double> random_unit_vector(int n, SeededRng& rng) {
    std::vector<double> x(n);
    double norm = 0.0;
    for (double& v : x) {
        v = rng.normal();
        norm += v * v;
    }
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw NonFiniteValue("degenerate Gaussian draw in random_unit_vector");
    for (double& v : x) v /= norm;
    return x;
}

}  // namespace opineq

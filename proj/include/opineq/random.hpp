#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "opineq/sym_matrix.hpp"

namespace opineq {

// Deterministic random source.  mt19937_64 output is fixed by the standard
// and the uniform/normal mappings below are implemented by hand, so a seed
// produces the same stream on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    double uniform01();  // [0, 1)
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    double normal();     // standard normal via Box-Muller

private:
    std::mt19937_64 gen_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

// Haar-ish orthogonal matrix: Gram-Schmidt (with one re-orthogonalization
// pass) applied to a Gaussian matrix.  Row-major n x n.
std::vector<double> random_orthogonal(int n, SeededRng& rng);

SymMatrix random_symmetric(int n, SeededRng& rng);  // Gaussian entries, symmetrized
std::vector<double> random_unit_vector(int n, SeededRng& rng);

}  // namespace opineq

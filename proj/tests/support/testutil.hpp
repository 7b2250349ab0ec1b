#pragma once

#include "alglab/matrix.hpp"

#include <random>

namespace alglab::testutil {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, int max_abs = 4, int max_den = 3) {
    const int num = uniform_int(rng, -max_abs, max_abs);
    const int den = uniform_int(rng, 1, max_den);
    return Rational(num) / Rational(den);
}

inline Matrix random_matrix(Rng& rng, int rows, int cols, int max_abs = 4, int max_den = 3) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = random_rational(rng, max_abs, max_den);
    return m;
}

/// Random invertible integer matrix with integer inverse: a product of
/// elementary row operations applied to the identity.
inline Matrix random_unimodular(Rng& rng, int n, int ops = -1) {
    Matrix m = Matrix::identity(n);
    if (n <= 1)
        return m;
    if (ops < 0)
        ops = 2 * n;
    for (int t = 0; t < ops; ++t) {
        const int i = uniform_int(rng, 0, n - 1);
        int j = uniform_int(rng, 0, n - 2);
        if (j >= i)
            ++j;
        const Rational c(uniform_int(rng, -2, 2));
        for (int k = 0; k < n; ++k)
            m(i, k) += c * m(j, k);
    }
    return m;
}

} // namespace alglab::testutil

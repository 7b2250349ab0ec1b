#include "alglab/reference_linalg.hpp"

namespace alglab::reference {

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Rational acc = 0;
            for (int k = 0; k < a.cols(); ++k)
                acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<int> pivots;
    int next_row = 0;
    for (int c = 0; c < a.cols() && next_row < a.rows(); ++c) {
        int pivot = -1;
        for (int r = next_row; r < a.rows(); ++r)
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int j = 0; j < a.cols(); ++j)
            std::swap(a(pivot, j), a(next_row, j));
        const Rational inv = Rational(1) / a(next_row, c);
        for (int j = 0; j < a.cols(); ++j)
            a(next_row, j) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == next_row)
                continue;
            const Rational factor = a(r, c);
            if (factor == 0)
                continue;
            for (int j = 0; j < a.cols(); ++j)
                a(r, j) -= factor * a(next_row, j);
        }
        pivots.push_back(c);
        ++next_row;
    }
    return {a, pivots};
}

} // namespace alglab::reference

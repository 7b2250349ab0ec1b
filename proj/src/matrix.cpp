#include "alglab/matrix.hpp"

namespace alglab {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        assert(static_cast<int>(r.size()) == cols_);
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Vec Matrix::row(int i) const {
    Vec r(cols_);
    for (int j = 0; j < cols_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

Vec Matrix::col(int j) const {
    Vec c(rows_);
    for (int i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

void Matrix::set_row(int i, const Vec& values) {
    assert(static_cast<int>(values.size()) == cols_);
    for (int j = 0; j < cols_; ++j)
        (*this)(i, j) = values[j];
}

void Matrix::add_block(int r0, int c0, const Matrix& block, const Rational& scale) {
    assert(r0 + block.rows() <= rows_ && c0 + block.cols() <= cols_);
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
            (*this)(r0 + i, c0 + j) += scale * block(i, j);
}

void Matrix::add_identity_block(int r0, int c0, int n, const Rational& scale) {
    assert(r0 + n <= rows_ && c0 + n <= cols_);
    for (int i = 0; i < n; ++i)
        (*this)(r0 + i, c0 + i) += scale;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) - b(i, j);
    return r;
}

Matrix operator-(const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = -a(i, j);
    return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = s * a(i, j);
    return r;
}

Matrix multiply(const Matrix& a, const Matrix& b, Exec policy) {
    assert(a.cols() == b.rows());
    Matrix r(a.rows(), b.cols());
    const std::size_t work = static_cast<std::size_t>(a.rows()) * b.cols() * a.cols();
    const bool parallel =
        policy == Exec::Parallel || (policy == Exec::Auto && work >= 32768 && a.rows() >= 8);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (bkj != 0)
                    r(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
    assert(static_cast<int>(v.size()) == m.cols());
    Vec r(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                r[i] += m(i, j) * v[j];
    return r;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    assert(top.cols() == bottom.cols() || top.rows() == 0 || bottom.rows() == 0);
    const int cols = top.rows() > 0 ? top.cols() : bottom.cols();
    Matrix r(top.rows() + bottom.rows(), cols);
    if (top.rows() > 0)
        r.add_block(0, 0, top);
    if (bottom.rows() > 0)
        r.add_block(top.rows(), 0, bottom);
    return r;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
    assert(left.rows() == right.rows());
    Matrix r(left.rows(), left.cols() + right.cols());
    r.add_block(0, 0, left);
    r.add_block(0, left.cols(), right);
    return r;
}

Matrix from_rows(int cols, const std::vector<Vec>& rows) {
    Matrix r(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        r.set_row(static_cast<int>(i), rows[i]);
    return r;
}

} // namespace alglab

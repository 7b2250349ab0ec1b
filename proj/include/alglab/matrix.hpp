#pragma once

#include "alglab/rational.hpp"

#include <cassert>
#include <initializer_list>

namespace alglab {

/// Execution policy for the dense kernels. Auto switches to the OpenMP path
/// above a fixed work threshold; results are identical either way because the
/// arithmetic is exact and row updates are independent.
enum class Exec { Auto, Serial, Parallel };

/// Dense row-major rational matrix. Zero rows or columns are legal; a 0xN or
/// Nx0 matrix represents a map to or from the zero space.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        assert(rows >= 0 && cols >= 0);
    }
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Rational& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    Matrix transpose() const;

    Vec row(int i) const;
    Vec col(int j) const;
    void set_row(int i, const Vec& values);

    /// this[r0.., c0..] += scale * block
    void add_block(int r0, int c0, const Matrix& block, const Rational& scale = Rational(1));
    /// this[r0+i, c0+i] += scale for i in [0, n)
    void add_identity_block(int r0, int c0, int n, const Rational& scale = Rational(1));

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Rational& s, const Matrix& a);

/// Product kernel; the parallel path distributes output rows.
Matrix multiply(const Matrix& a, const Matrix& b, Exec policy = Exec::Auto);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Vec operator*(const Matrix& m, const Vec& v);

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix hstack(const Matrix& left, const Matrix& right);
Matrix from_rows(int cols, const std::vector<Vec>& rows);

} // namespace alglab

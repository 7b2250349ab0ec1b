#include "alglab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace alglab {

namespace {

// In-place Gauss-Jordan. Pivot choice (first nonzero row) and update order are
// fixed, and the parallel row updates are independent, so serial and parallel
// runs produce identical matrices.
std::vector<int> rref_inplace(Matrix& a, Exec policy) {
    const int rows = a.rows();
    const int cols = a.cols();
    const bool parallel =
        policy == Exec::Parallel ||
        (policy == Exec::Auto && rows >= 16 &&
         static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) >= 2048);
    std::vector<int> pivots;
    int next_row = 0;
    for (int c = 0; c < cols && next_row < rows; ++c) {
        int pivot = -1;
        for (int r = next_row; r < rows; ++r) {
            if (a(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != next_row)
            for (int j = c; j < cols; ++j)
                std::swap(a(pivot, j), a(next_row, j));
        if (a(next_row, c) != 1) {
            const Rational inv = Rational(1) / a(next_row, c);
            for (int j = c; j < cols; ++j)
                if (a(next_row, j) != 0)
                    a(next_row, j) *= inv;
        }
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int r = 0; r < rows; ++r) {
            if (r == next_row || a(r, c) == 0)
                continue;
            const Rational factor = a(r, c);
            for (int j = c; j < cols; ++j)
                if (a(next_row, j) != 0)
                    a(r, j) -= factor * a(next_row, j);
        }
        pivots.push_back(c);
        ++next_row;
    }
    return pivots;
}

} // namespace

RrefResult rref(const Matrix& m, Exec policy) {
    Matrix reduced = m;
    std::vector<int> pivots = rref_inplace(reduced, policy);
    return {std::move(reduced), std::move(pivots)};
}

int rank(const Matrix& m) { return rref(m).rank(); }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length does not match row count");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.add_block(0, 0, m);
    for (int i = 0; i < m.rows(); ++i)
        aug(i, m.cols()) = b[i];
    RrefResult r = rref(aug);
    Vec x(m.cols());
    for (int i = 0; i < r.rank(); ++i) {
        if (r.pivots[i] == m.cols())
            return std::nullopt; // pivot in the augmented column
        x[r.pivots[i]] = r.reduced(i, m.cols());
    }
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix is not square");
    const int n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(n));
    RrefResult r = rref(aug);
    if (r.rank() != n || (n > 0 && r.pivots.back() >= n))
        throw std::invalid_argument("inverse: matrix is singular");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = r.reduced(i, n + j);
    return inv;
}

Subspace Subspace::from_span(const Matrix& span) {
    RrefResult r = rref(span);
    Matrix basis(r.rank(), span.cols());
    for (int i = 0; i < r.rank(); ++i)
        basis.set_row(i, r.reduced.row(i));
    return Subspace(span.cols(), std::move(basis), std::move(r.pivots));
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    Vec w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        const Rational factor = w[pivots_[i]];
        if (factor == 0)
            continue;
        for (int j = 0; j < ambient_; ++j)
            if (basis_(i, j) != 0)
                w[j] -= factor * basis_(i, j);
    }
    return w;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("Subspace: ambient dimension mismatch");
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i)))
            return false;
    return true;
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (int c = 0; c < m.cols(); ++c) {
            if (p < r.pivots.size() && r.pivots[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    Matrix span(static_cast<int>(free_cols.size()), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        span(static_cast<int>(k), f) = 1;
        for (int i = 0; i < r.rank(); ++i)
            span(static_cast<int>(k), r.pivots[i]) = -r.reduced(i, f);
    }
    return Subspace::from_span(span);
}

Subspace image_basis(const Matrix& m) { return Subspace::from_span(m.transpose()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    // Kernel of [A^T | -B^T] gives coefficient pairs (u, w) with A^T u = B^T w.
    Matrix system = hstack(a.basis().transpose(), -(b.basis().transpose()));
    Subspace pairs = kernel_basis(system);
    Matrix span(pairs.dim(), a.ambient());
    for (int i = 0; i < pairs.dim(); ++i) {
        Vec coeffs = pairs.basis().row(i);
        Vec v(a.ambient());
        for (int r = 0; r < a.dim(); ++r)
            add_scaled(v, a.basis().row(r), coeffs[r]);
        span.set_row(i, v);
    }
    return Subspace::from_span(span);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("sum: ambient dimension mismatch");
    return Subspace::from_span(vstack(a.basis(), b.basis()));
}

int quotient_dim(const Subspace& inner, const Subspace& outer) {
    if (!outer.contains(inner))
        throw std::invalid_argument("quotient_dim: inner subspace is not contained in outer");
    return outer.dim() - inner.dim();
}

Subspace preimage(const Matrix& m, const Subspace& s) {
    if (s.ambient() != m.rows())
        throw std::invalid_argument("preimage: ambient dimension mismatch");
    // y lies in s iff z . y = 0 for every z in the null space of the basis.
    Subspace annihilator = kernel_basis(s.basis());
    return kernel_basis(multiply(annihilator.basis(), m));
}

Matrix coordinates_in_rowbasis(const Matrix& basis_rows, const Matrix& vectors) {
    if (basis_rows.cols() != vectors.rows())
        throw std::invalid_argument("coordinates_in_rowbasis: shape mismatch");
    Matrix aug = hstack(basis_rows.transpose(), vectors);
    RrefResult r = rref(aug);
    const int d = basis_rows.rows();
    Matrix coords(d, vectors.cols());
    for (int i = 0; i < r.rank(); ++i) {
        if (r.pivots[i] >= d)
            throw std::invalid_argument("coordinates_in_rowbasis: vector outside span");
        for (int j = 0; j < vectors.cols(); ++j)
            coords(r.pivots[i], j) = r.reduced(i, d + j);
    }
    return coords;
}

} // namespace alglab

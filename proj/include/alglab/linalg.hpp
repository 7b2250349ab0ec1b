#pragma once

#include "alglab/matrix.hpp"

#include <optional>

namespace alglab {

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivots; // pivot column per pivot row, strictly increasing
    int rank() const { return static_cast<int>(pivots.size()); }
};

/// Reduced row-echelon form (Gauss-Jordan, exact). Row space is preserved and
/// the result is the canonical representative of it.
RrefResult rref(const Matrix& m, Exec policy = Exec::Auto);

int rank(const Matrix& m);

/// Some x with m*x = b, free variables set to zero; nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Inverse of a square matrix; throws std::invalid_argument when singular.
Matrix inverse(const Matrix& m);

/// A linear subspace of Q^ambient held by its canonical basis: the RREF rows
/// of any spanning set. Equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default; // zero subspace of Q^0
    static Subspace zero(int ambient) { return from_span(Matrix(0, ambient)); }
    static Subspace full(int ambient) { return from_span(Matrix::identity(ambient)); }
    /// Canonicalizes the row span of `span`.
    static Subspace from_span(const Matrix& span);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Remainder of v after eliminating against the basis; zero iff contained.
    Vec reduce(const Vec& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(int ambient, Matrix basis, std::vector<int> pivots = {})
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    int ambient_ = 0;
    Matrix basis_;             // RREF, no zero rows
    std::vector<int> pivots_;
};

/// Null space {x : m*x = 0}, canonical basis.
Subspace kernel_basis(const Matrix& m);
/// Column space, canonical basis.
Subspace image_basis(const Matrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
/// dim(outer) - dim(inner); throws std::invalid_argument unless inner is contained in outer.
int quotient_dim(const Subspace& inner, const Subspace& outer);
/// {x : m*x in s}.
Subspace preimage(const Matrix& m, const Subspace& s);

/// Coordinates X solving basisRows^T * X = vectors (one column per vector).
/// Every column must lie in the row space of basisRows; throws otherwise.
Matrix coordinates_in_rowbasis(const Matrix& basis_rows, const Matrix& vectors);

} // namespace alglab

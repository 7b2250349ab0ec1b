#pragma once

#include "alglab/linalg.hpp"

#include <string>

namespace alglab {

struct StructureViolation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind;
    // Antisymmetry: c[i][j][k] + c[j][i][k] != 0 at (i, j, k).
    // Jacobi: the cyclic sum over (i, j, l) has a nonzero component k.
    int i, j, l, k;
};

std::string describe(const StructureViolation& v);

/// Finite-dimensional Lie algebra given by structure constants over Q:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry and the Jacobi identity
/// are verified exactly at construction.
class LieAlgebra {
public:
    static std::vector<StructureViolation> validate(int dim, const std::vector<Rational>& c);
    /// Throws std::invalid_argument naming the first violation.
    static LieAlgebra create(int dim, std::vector<Rational> c);
    static LieAlgebra abelian(int dim);

    int dim() const { return dim_; }
    const Rational& c(int i, int j, int k) const {
        return constants_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    Vec bracket(const Vec& u, const Vec& v) const;
    /// Matrix of ad_{e_i} = [e_i, .] in the defining basis.
    Matrix ad(int i) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    LieAlgebra(int dim, std::vector<Rational> c) : dim_(dim), constants_(std::move(c)) {}

    int dim_ = 0;
    std::vector<Rational> constants_;
};

/// Same bracket written in the basis given by the columns of `basis`.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis);

Matrix killing_form(const LieAlgebra& g);
bool killing_is_nondegenerate(const LieAlgebra& g);

} // namespace alglab

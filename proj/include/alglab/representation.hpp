#pragma once

#include "alglab/lie_algebra.hpp"

namespace alglab {

/// Basis pair (i, j) whose commutator identity fails.
struct RepresentationViolation {
    int i, j;
};

/// Action of a Lie algebra on Q^m by one matrix per basis element. The
/// morphism property action[e_i]action[e_j] - action[e_j]action[e_i] =
/// action[[e_i,e_j]] is verified exactly at construction.
class Representation {
public:
    static std::vector<RepresentationViolation> validate(const LieAlgebra& g,
                                                         const std::vector<Matrix>& action,
                                                         int module_dim);
    static Representation create(LieAlgebra g, std::vector<Matrix> action, int module_dim);
    static Representation trivial(LieAlgebra g, int module_dim);

    const LieAlgebra& algebra() const { return algebra_; }
    int module_dim() const { return module_dim_; }
    const Matrix& action(int i) const { return action_[i]; }
    /// Action of an arbitrary element, sum_i u_i action[e_i].
    Matrix action_of(const Vec& u) const;
    /// All action matrices stacked vertically: the H^0 constraint matrix.
    Matrix stacked_action() const;

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    Representation(LieAlgebra g, std::vector<Matrix> action, int module_dim)
        : algebra_(std::move(g)), module_dim_(module_dim), action_(std::move(action)) {}

    LieAlgebra algebra_;
    int module_dim_ = 0;
    std::vector<Matrix> action_;
};

Representation adjoint_rep(const LieAlgebra& g);

/// Induced action on Lambda^2 V over the lexicographic pair basis,
/// u.(a ^ b) = (u.a) ^ b + a ^ (u.b).
Representation exterior_square_rep(const Representation& r);

/// {v : action[e_i] v = 0 for all i}, the fiber H^0.
Subspace invariants(const Representation& r);

struct QuotientRep {
    Representation rep;  // induced action in complement coordinates
    Matrix projection;   // V -> Q^(m-d), kernel exactly u
    Matrix section;      // Q^(m-d) -> V, projection * section = id
};

/// Induced representation on V/U for an action-invariant subspace u.
/// Throws std::invalid_argument when u is not invariant.
QuotientRep quotient_rep(const Representation& r, const Subspace& u);

/// Same representation written in new bases: algebra basis = columns of
/// `algebra_basis`, module basis = columns of `module_basis`.
Representation change_basis(const Representation& r, const Matrix& algebra_basis,
                            const Matrix& module_basis);

} // namespace alglab

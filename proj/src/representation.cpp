#include "alglab/representation.hpp"

#include "alglab/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace alglab {

std::vector<RepresentationViolation> Representation::validate(const LieAlgebra& g,
                                                              const std::vector<Matrix>& action,
                                                              int module_dim) {
    const int n = g.dim();
    if (static_cast<int>(action.size()) != n)
        throw std::invalid_argument("Representation: one action matrix per basis element required");
    for (const Matrix& m : action)
        if (m.rows() != module_dim || m.cols() != module_dim)
            throw std::invalid_argument("Representation: action matrix shape mismatch");
    std::vector<RepresentationViolation> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix lhs(module_dim, module_dim);
            for (int k = 0; k < n; ++k)
                if (g.c(i, j, k) != 0)
                    lhs.add_block(0, 0, action[k], g.c(i, j, k));
            Matrix rhs = multiply(action[i], action[j]) - multiply(action[j], action[i]);
            if (!(lhs == rhs))
                out.push_back({i, j});
        }
    return out;
}

Representation Representation::create(LieAlgebra g, std::vector<Matrix> action, int module_dim) {
    auto violations = validate(g, action, module_dim);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "Representation: commutator identity fails for pair (" << violations.front().i
           << "," << violations.front().j << ")";
        throw std::invalid_argument(os.str());
    }
    return Representation(std::move(g), std::move(action), module_dim);
}

Representation Representation::trivial(LieAlgebra g, int module_dim) {
    std::vector<Matrix> action(g.dim(), Matrix(module_dim, module_dim));
    return Representation(std::move(g), std::move(action), module_dim);
}

Matrix Representation::action_of(const Vec& u) const {
    Matrix m(module_dim_, module_dim_);
    for (int i = 0; i < algebra_.dim(); ++i)
        if (u[i] != 0)
            m.add_block(0, 0, action_[i], u[i]);
    return m;
}

Matrix Representation::stacked_action() const {
    Matrix s(algebra_.dim() * module_dim_, module_dim_);
    for (int i = 0; i < algebra_.dim(); ++i)
        s.add_block(i * module_dim_, 0, action_[i]);
    return s;
}

Representation adjoint_rep(const LieAlgebra& g) {
    std::vector<Matrix> action;
    action.reserve(g.dim());
    for (int i = 0; i < g.dim(); ++i)
        action.push_back(g.ad(i));
    return Representation::create(g, std::move(action), g.dim());
}

Representation exterior_square_rep(const Representation& r) {
    const int m = r.module_dim();
    SubsetTable pairs(m, 2);
    std::vector<Matrix> action;
    action.reserve(r.algebra().dim());
    for (int i = 0; i < r.algebra().dim(); ++i) {
        const Matrix& act = r.action(i);
        Matrix sq(pairs.count(), pairs.count());
        for (int col = 0; col < pairs.count(); ++col) {
            const int a = pairs.subset(col)[0];
            const int b = pairs.subset(col)[1];
            for (int c = 0; c < m; ++c) {
                // (act e_a) ^ e_b contributes act(c, a) on e_c ^ e_b.
                if (act(c, a) != 0 && c != b) {
                    const int row = pairs.rank_of_sorted({std::min(c, b), std::max(c, b)});
                    sq(row, col) += (c < b ? act(c, a) : -act(c, a));
                }
                // e_a ^ (act e_b) contributes act(c, b) on e_a ^ e_c.
                if (act(c, b) != 0 && c != a) {
                    const int row = pairs.rank_of_sorted({std::min(a, c), std::max(a, c)});
                    sq(row, col) += (a < c ? act(c, b) : -act(c, b));
                }
            }
        }
        action.push_back(std::move(sq));
    }
    return Representation::create(r.algebra(), std::move(action), pairs.count());
}

Subspace invariants(const Representation& r) { return kernel_basis(r.stacked_action()); }

QuotientRep quotient_rep(const Representation& r, const Subspace& u) {
    const int m = r.module_dim();
    if (u.ambient() != m)
        throw std::invalid_argument("quotient_rep: subspace ambient dimension mismatch");
    for (int i = 0; i < r.algebra().dim(); ++i)
        for (int row = 0; row < u.dim(); ++row)
            if (!u.contains(r.action(i) * u.basis().row(row)))
                throw std::invalid_argument("quotient_rep: subspace is not action-invariant");

    // Complement coordinates: the standard basis vectors at non-pivot columns.
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (int c = 0; c < m; ++c) {
            if (p < u.pivots().size() && u.pivots()[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    const int q = static_cast<int>(free_cols.size());
    Matrix section(m, q);
    for (int j = 0; j < q; ++j)
        section(free_cols[j], j) = 1;
    Matrix basis_rows = vstack(u.basis(), section.transpose());
    Matrix projection(q, m);
    {
        Matrix full = inverse(basis_rows.transpose());
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < m; ++j)
                projection(i, j) = full(u.dim() + i, j);
    }
    std::vector<Matrix> action;
    action.reserve(r.algebra().dim());
    for (int i = 0; i < r.algebra().dim(); ++i)
        action.push_back(multiply(multiply(projection, r.action(i)), section));
    return {Representation::create(r.algebra(), std::move(action), q), std::move(projection),
            std::move(section)};
}

Representation change_basis(const Representation& r, const Matrix& algebra_basis,
                            const Matrix& module_basis) {
    LieAlgebra g = change_basis(r.algebra(), algebra_basis);
    Matrix inv = inverse(module_basis);
    std::vector<Matrix> action;
    action.reserve(g.dim());
    for (int j = 0; j < g.dim(); ++j)
        action.push_back(multiply(multiply(inv, r.action_of(algebra_basis.col(j))), module_basis));
    return Representation::create(std::move(g), std::move(action), r.module_dim());
}

} // namespace alglab

#include "alglab/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace alglab {

std::string describe(const StructureViolation& v) {
    std::ostringstream os;
    if (v.kind == StructureViolation::Kind::Antisymmetry)
        os << "antisymmetry violated at (" << v.i << "," << v.j << "," << v.k << ")";
    else
        os << "Jacobi identity violated for triple (" << v.i << "," << v.j << "," << v.l
           << ") in component " << v.k;
    return os.str();
}

std::vector<StructureViolation> LieAlgebra::validate(int dim, const std::vector<Rational>& c) {
    if (dim < 0 || c.size() != static_cast<std::size_t>(dim) * dim * dim)
        throw std::invalid_argument("LieAlgebra: structure constant table has wrong size");
    auto at = [&](int i, int j, int k) -> const Rational& {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    };
    std::vector<StructureViolation> out;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (at(i, j, k) + at(j, i, k) != 0)
                    out.push_back({StructureViolation::Kind::Antisymmetry, i, j, -1, k});
    // Cyclic Jacobi sum [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] = 0.
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int l = j + 1; l < dim; ++l)
                for (int k = 0; k < dim; ++k) {
                    Rational total = 0;
                    for (int m = 0; m < dim; ++m)
                        total += at(i, j, m) * at(m, l, k) + at(j, l, m) * at(m, i, k) +
                                 at(l, i, m) * at(m, j, k);
                    if (total != 0) {
                        out.push_back({StructureViolation::Kind::Jacobi, i, j, l, k});
                        break;
                    }
                }
    return out;
}

LieAlgebra LieAlgebra::create(int dim, std::vector<Rational> c) {
    auto violations = validate(dim, c);
    if (!violations.empty())
        throw std::invalid_argument("LieAlgebra: " + describe(violations.front()));
    return LieAlgebra(dim, std::move(c));
}

LieAlgebra LieAlgebra::abelian(int dim) {
    return LieAlgebra(dim, std::vector<Rational>(static_cast<std::size_t>(dim) * dim * dim));
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    Vec w(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (u[i] == 0)
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j] == 0)
                continue;
            const Rational uv = u[i] * v[j];
            for (int k = 0; k < dim_; ++k)
                if (c(i, j, k) != 0)
                    w[k] += uv * c(i, j, k);
        }
    }
    return w;
}

Matrix LieAlgebra::ad(int i) const {
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
            m(k, j) = c(i, j, k);
    return m;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis) {
    const int n = g.dim();
    if (basis.rows() != n || basis.cols() != n)
        throw std::invalid_argument("change_basis: basis matrix must be n x n");
    Matrix inv = inverse(basis);
    std::vector<Rational> c(static_cast<std::size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec w = inv * g.bracket(basis.col(a), basis.col(b));
            for (int k = 0; k < n; ++k)
                c[(static_cast<std::size_t>(a) * n + b) * n + k] = w[k];
        }
    return LieAlgebra::create(n, std::move(c));
}

Matrix killing_form(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (int i = 0; i < n; ++i)
        ads.push_back(g.ad(i));
    Matrix k(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational tr = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    tr += ads[i](a, b) * ads[j](b, a);
            k(i, j) = tr;
            k(j, i) = tr;
        }
    return k;
}

bool killing_is_nondegenerate(const LieAlgebra& g) {
    return rank(killing_form(g)) == g.dim();
}

} // namespace alglab

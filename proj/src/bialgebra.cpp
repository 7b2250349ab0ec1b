#include "alglab/bialgebra.hpp"

#include <stdexcept>

namespace alglab {

MultiVector zero_multivector(const LieAlgebra& g, int degree) {
    return {degree, Vec(static_cast<std::size_t>(binomial(g.dim(), degree)))};
}

MultiVector basis_multivector(const LieAlgebra& g, const std::vector<int>& indices) {
    MultiVector v = zero_multivector(g, static_cast<int>(indices.size()));
    std::vector<int> sorted = indices;
    const int sign = sort_sign(sorted);
    if (sign == 0)
        return v;
    SubsetTable table(g.dim(), v.degree);
    v.coords[table.rank_of_sorted(sorted)] = sign;
    return v;
}

bool is_zero(const MultiVector& v) { return is_zero(v.coords); }

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
    if (a.degree != b.degree)
        throw std::invalid_argument("MultiVector: degree mismatch in addition");
    return {a.degree, a.coords + b.coords};
}

MultiVector operator*(const Rational& s, const MultiVector& v) { return {v.degree, s * v.coords}; }

MultiVector schouten(const LieAlgebra& g, const MultiVector& p, const MultiVector& q) {
    const int degree = p.degree + q.degree - 1;
    if (degree > 3)
        throw std::invalid_argument("schouten: result degree exceeds 3");
    if (p.degree == 0 || q.degree == 0)
        return zero_multivector(g, std::max(degree, 0));
    MultiVector out = zero_multivector(g, degree);
    SubsetTable ptable(g.dim(), p.degree);
    SubsetTable qtable(g.dim(), q.degree);
    SubsetTable otable(g.dim(), degree);
    for (int s = 0; s < ptable.count(); ++s) {
        if (p.coords[s] == 0)
            continue;
        const auto& sset = ptable.subset(s);
        for (int t = 0; t < qtable.count(); ++t) {
            if (q.coords[t] == 0)
                continue;
            const auto& tset = qtable.subset(t);
            const Rational pq = p.coords[s] * q.coords[t];
            for (std::size_t a = 0; a < sset.size(); ++a)
                for (std::size_t b = 0; b < tset.size(); ++b) {
                    // (-1)^(a+b) [s_a, t_b] ^ (rest of s) ^ (rest of t),
                    // positions 1-based.
                    const Rational sign((a + b) % 2 == 0 ? 1 : -1);
                    for (int l = 0; l < g.dim(); ++l) {
                        const Rational& c = g.c(sset[a], tset[b], l);
                        if (c == 0)
                            continue;
                        std::vector<int> merged{l};
                        for (std::size_t i = 0; i < sset.size(); ++i)
                            if (i != a)
                                merged.push_back(sset[i]);
                        for (std::size_t i = 0; i < tset.size(); ++i)
                            if (i != b)
                                merged.push_back(tset[i]);
                        const int wedge_sign = sort_sign(merged);
                        if (wedge_sign == 0)
                            continue;
                        out.coords[otable.rank_of_sorted(merged)] += pq * sign * c * wedge_sign;
                    }
                }
        }
    }
    return out;
}

MultiVector cobracket_value(const LieAlgebra& g, const CobracketMap& omega, int basis_index) {
    return {2, omega.matrix.col(basis_index)};
}

Matrix extend_derivation(const LieAlgebra& g, const CobracketMap& omega, int degree) {
    if (degree < 0 || degree > 2)
        throw std::invalid_argument("extend_derivation: degree must be 0, 1 or 2");
    const int n = g.dim();
    SubsetTable source(n, degree);
    SubsetTable target(n, degree + 1);
    SubsetTable pairs(n, 2);
    Matrix out(target.count(), source.count());
    if (degree == 0)
        return out; // scalars map to zero
    for (int s = 0; s < source.count(); ++s) {
        const auto& sset = source.subset(s);
        for (std::size_t a = 0; a < sset.size(); ++a) {
            const Rational pos_sign(a % 2 == 0 ? 1 : -1); // (-1)^(a+1) with 1-based a
            for (int pr = 0; pr < pairs.count(); ++pr) {
                const Rational& w = omega.matrix(pr, sset[a]);
                if (w == 0)
                    continue;
                std::vector<int> merged = pairs.subset(pr);
                for (std::size_t i = 0; i < sset.size(); ++i)
                    if (i != a)
                        merged.push_back(sset[i]);
                const int wedge_sign = sort_sign(merged);
                if (wedge_sign == 0)
                    continue;
                out(target.rank_of_sorted(merged), s) += pos_sign * w * wedge_sign;
            }
        }
    }
    return out;
}

bool is_cocycle_l2(const LieAlgebra& g, const CobracketMap& omega) {
    const int n = g.dim();
    // Direct route: omega[u,v] = [omega(u), v] + [u, omega(v)] on basis pairs.
    bool direct = true;
    for (int i = 0; i < n && direct; ++i)
        for (int j = i + 1; j < n && direct; ++j) {
            Vec bracket(n);
            for (int k = 0; k < n; ++k)
                bracket[k] = g.c(i, j, k);
            MultiVector lhs{2, omega.matrix * bracket};
            MultiVector rhs = schouten(g, cobracket_value(g, omega, i),
                                       basis_multivector(g, {j})) +
                              schouten(g, basis_multivector(g, {i}),
                                       cobracket_value(g, omega, j));
            direct = lhs == rhs;
        }
    // Chevalley route with Lambda^2-adjoint coefficients.
    Representation sq = exterior_square_rep(adjoint_rep(g));
    Vec coords(static_cast<std::size_t>(omega.matrix.rows()) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < omega.matrix.rows(); ++i)
            coords[static_cast<std::size_t>(j) * omega.matrix.rows() + i] = omega.matrix(i, j);
    const bool chevalley = is_cocycle(sq, Cochain{1, coords});
    if (direct != chevalley)
        throw std::logic_error("is_cocycle_l2: the two evaluation routes disagree");
    return direct;
}

CompatiblePairReport compatible_pair_check(const LieAlgebra& g, const MultiVector& lambda,
                                           const CobracketMap& omega) {
    if (lambda.degree != 2)
        throw std::invalid_argument("compatible_pair_check: lambda must have degree 2");
    CompatiblePairReport report;
    report.cocycle = is_cocycle_l2(g, omega);

    MultiVector half_square = Rational(1) / 2 * schouten(g, lambda, lambda);
    MultiVector omega_lambda{3, extend_derivation(g, omega, 2) * lambda.coords};
    MultiVector x = half_square + omega_lambda;
    Matrix omega_sq = multiply(extend_derivation(g, omega, 2),
                               extend_derivation(g, omega, 1));
    report.bracket_condition = true;
    for (int k = 0; k < g.dim(); ++k) {
        MultiVector y = schouten(g, x, basis_multivector(g, {k})) +
                        MultiVector{3, omega_sq.col(k)};
        if (!is_zero(y)) {
            report.bracket_condition = false;
            break;
        }
    }
    report.pass = report.cocycle && report.bracket_condition;
    if (report.cocycle)
        report.omega_exact = coboundary_detect(g, omega).has_value();
    report.triangular = report.omega_exact && is_zero(schouten(g, lambda, lambda));
    return report;
}

DualBracketReport dual_bracket(const LieAlgebra& g, const MultiVector& lambda,
                               const CobracketMap& omega) {
    const int n = g.dim();
    DualBracketReport report;
    report.dim = n;
    report.structure_constants.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
    SubsetTable pairs(n, 2);
    auto set = [&](int i, int j, int k, const Rational& v) {
        report.structure_constants[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
        report.structure_constants[(static_cast<std::size_t>(j) * n + i) * n + k] = -v;
    };
    for (int k = 0; k < n; ++k) {
        // d* e_k = [lambda, e_k] + omega(e_k) in Lambda^2.
        MultiVector image = schouten(g, lambda, basis_multivector(g, {k})) +
                            cobracket_value(g, omega, k);
        for (int pr = 0; pr < pairs.count(); ++pr) {
            const int i = pairs.subset(pr)[0];
            const int j = pairs.subset(pr)[1];
            // <[e_i^*, e_j^*]*, e_k> = -(d* e_k)(e_i, e_j)
            if (image.coords[pr] != 0)
                set(i, j, k, -image.coords[pr]);
        }
    }
    report.violations = LieAlgebra::validate(n, report.structure_constants);
    report.jacobi_ok = report.violations.empty();
    return report;
}

std::optional<MultiVector> pairs_equivalent(const LieAlgebra& g, const MultiVector& lambda1,
                                            const CobracketMap& omega1,
                                            const MultiVector& lambda2,
                                            const CobracketMap& omega2) {
    if (lambda1.degree != 2 || lambda2.degree != 2)
        throw std::invalid_argument("pairs_equivalent: lambdas must have degree 2");
    MultiVector nu = lambda2 + Rational(-1) * lambda1;
    for (int j = 0; j < g.dim(); ++j) {
        MultiVector expected = cobracket_value(g, omega1, j) +
                               Rational(-1) * schouten(g, nu, basis_multivector(g, {j}));
        if (!(cobracket_value(g, omega2, j) == expected))
            return std::nullopt;
    }
    return nu;
}

std::optional<MultiVector> coboundary_detect(const LieAlgebra& g, const CobracketMap& omega) {
    if (!is_cocycle_l2(g, omega))
        throw std::invalid_argument("coboundary_detect: omega is not a cocycle");
    const int n = g.dim();
    Representation sq = exterior_square_rep(adjoint_rep(g));
    Vec coords(static_cast<std::size_t>(omega.matrix.rows()) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < omega.matrix.rows(); ++i)
            coords[static_cast<std::size_t>(j) * omega.matrix.rows() + i] = omega.matrix(i, j);
    auto primitive = coboundary_primitive(sq, Cochain{1, coords});
    if (!primitive)
        return std::nullopt;
    // D^0 m = omega means u.m = omega(u); [mu, u] = -u.mu, so mu = -m.
    return MultiVector{2, Rational(-1) * primitive->coords};
}

} // namespace alglab

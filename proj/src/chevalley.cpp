#include "alglab/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace alglab {

Matrix ce_differential(const Representation& r, int degree) {
    if (degree < 0)
        throw std::invalid_argument("ce_differential: negative degree");
    const int n = r.algebra().dim();
    const int m = r.module_dim();
    CochainSpace source(r, degree);
    CochainSpace target(r, degree + 1);
    Matrix d(target.dimension(), source.dimension());

    for (int t = 0; t < target.subsets().count(); ++t) {
        const std::vector<int>& T = target.subsets().subset(t);
        const int row0 = target.index(t, 0);

        // sum_i (-1)^i u_i . w(T \ u_i)
        for (int i = 0; i <= degree; ++i) {
            std::vector<int> rest;
            rest.reserve(degree);
            for (int p = 0; p <= degree; ++p)
                if (p != i)
                    rest.push_back(T[p]);
            const int s = source.subsets().rank_of_sorted(rest);
            d.add_block(row0, source.index(s, 0), r.action(T[i]),
                        Rational(i % 2 == 0 ? 1 : -1));
        }

        // sum_{i<j} (-1)^{i+j} w([u_i,u_j] ^ rest)
        for (int i = 0; i <= degree; ++i)
            for (int j = i + 1; j <= degree; ++j) {
                std::vector<int> rest;
                rest.reserve(degree - 1);
                for (int p = 0; p <= degree; ++p)
                    if (p != i && p != j)
                        rest.push_back(T[p]);
                const Rational pair_sign((i + j) % 2 == 0 ? 1 : -1);
                for (int l = 0; l < n; ++l) {
                    const Rational& c = r.algebra().c(T[i], T[j], l);
                    if (c == 0)
                        continue;
                    std::vector<int> merged;
                    merged.reserve(degree);
                    merged.push_back(l);
                    merged.insert(merged.end(), rest.begin(), rest.end());
                    const int sgn = sort_sign(merged);
                    if (sgn == 0)
                        continue;
                    const int s = source.subsets().rank_of_sorted(merged);
                    d.add_identity_block(row0, source.index(s, 0), m, pair_sign * c * sgn);
                }
            }
    }
    return d;
}

std::vector<Vec> select_representatives(const Subspace& cocycles, const Subspace& coboundaries) {
    std::vector<Vec> reps;
    Subspace span = coboundaries;
    for (int i = 0; i < cocycles.dim(); ++i) {
        Vec z = cocycles.basis().row(i);
        if (!span.contains(z)) {
            reps.push_back(z);
            span = sum(span, Subspace::from_span(from_rows(cocycles.ambient(), {z})));
        }
    }
    return reps;
}

CohomologyBasis cohomology(const Representation& r, int degree) {
    Matrix d_out = ce_differential(r, degree);
    Subspace z = kernel_basis(d_out);
    Subspace b = degree == 0 ? Subspace::zero(CochainSpace(r, 0).dimension())
                             : image_basis(ce_differential(r, degree - 1));
    CohomologyBasis result;
    result.degree = degree;
    result.representatives = select_representatives(z, b);
    result.dim = static_cast<int>(result.representatives.size());
    result.cocycles = std::move(z);
    result.coboundaries = std::move(b);
    return result;
}

bool is_cocycle(const Representation& r, const Cochain& w) {
    return is_zero(ce_differential(r, w.degree) * w.coords);
}

std::optional<Cochain> coboundary_primitive(const Representation& r, const Cochain& w) {
    if (w.degree == 0) {
        if (is_zero(w.coords))
            return Cochain{-1, {}};
        return std::nullopt;
    }
    auto x = solve(ce_differential(r, w.degree - 1), w.coords);
    if (!x)
        return std::nullopt;
    return Cochain{w.degree - 1, std::move(*x)};
}

Vec class_coordinates(const CohomologyBasis& basis, const Vec& cocycle) {
    if (!basis.cocycles.contains(cocycle))
        throw std::invalid_argument("class_coordinates: input is not a cocycle");
    const int h = basis.dim;
    const int ambient = basis.cocycles.ambient();
    // Unique expansion cocycle = sum_i a_i rep_i + (coboundary).
    Matrix columns(ambient, h + basis.coboundaries.dim());
    for (int i = 0; i < h; ++i)
        for (int row = 0; row < ambient; ++row)
            columns(row, i) = basis.representatives[i][row];
    for (int i = 0; i < basis.coboundaries.dim(); ++i)
        for (int row = 0; row < ambient; ++row)
            columns(row, h + i) = basis.coboundaries.basis()(i, row);
    auto sol = solve(columns, cocycle);
    if (!sol)
        throw std::invalid_argument("class_coordinates: inconsistent system");
    return Vec(sol->begin(), sol->begin() + h);
}

} // namespace alglab

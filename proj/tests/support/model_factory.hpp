#pragma once

#include "alglab/algebroid.hpp"
#include "support/algebras.hpp"
#include "support/testutil.hpp"

#include <optional>

namespace alglab::testutil {

enum class FiberKind { Abelian2Trivial, HeisenbergAdjoint, Sl2Adjoint };

struct ModelParams {
    int max_vertices = 4;
    int max_total_edges = 6;
    int max_cells = 2;
    bool tree_only = false;
    std::optional<FiberKind> fiber;
};

/// Automorphism of the Heisenberg algebra in the (x, y, z) basis: GL2 on the
/// (x, y) plane plus central shears; z scales by the determinant.
inline Matrix heis_automorphism(Rng& rng) {
    while (true) {
        const int a = uniform_int(rng, -2, 2), b = uniform_int(rng, -2, 2);
        const int c = uniform_int(rng, -2, 2), d = uniform_int(rng, -2, 2);
        const int det = a * d - b * c;
        if (det == 0)
            continue;
        const int e = uniform_int(rng, -2, 2), f = uniform_int(rng, -2, 2);
        return Matrix{{Rational(a), Rational(b), 0},
                      {Rational(c), Rational(d), 0},
                      {Rational(e), Rational(f), Rational(det)}};
    }
}

/// Central shear x -> x + e z, y -> y + f z. These commute with each other.
inline Matrix heis_shear(Rng& rng) {
    const int e = uniform_int(rng, -2, 2), f = uniform_int(rng, -2, 2);
    return Matrix{{1, 0, 0}, {0, 1, 0}, {Rational(e), Rational(f), 1}};
}

/// exp(t ad) for a nilpotent basis element of sl2 (ad^3 = 0, so the series is
/// a polynomial and stays rational).
inline Matrix sl2_unipotent(const Rational& t, bool use_e) {
    LieAlgebra g = sl2();
    Matrix n = g.ad(use_e ? 1 : 2);
    Matrix n2 = multiply(n, n);
    Matrix r = Matrix::identity(3);
    r.add_block(0, 0, n, t);
    r.add_block(0, 0, n2, t * t / 2);
    return r;
}

/// Product of a few unipotent factors: an inner automorphism of sl2.
inline Matrix sl2_inner_automorphism(Rng& rng) {
    Matrix r = Matrix::identity(3);
    const int factors = uniform_int(rng, 1, 3);
    for (int i = 0; i < factors; ++i) {
        Rational t = Rational(uniform_int(rng, -2, 2)) / uniform_int(rng, 1, 2);
        r = multiply(sl2_unipotent(t, i % 2 == 0), r);
    }
    return r;
}

/// One-parameter commuting family for sl2: exp(t ad_e).
inline Matrix sl2_unipotent_family(Rng& rng) {
    return sl2_unipotent(Rational(uniform_int(rng, -2, 2)), true);
}

/// Plane shear for the abelian fiber (any invertible matrix is an
/// automorphism; shears are used where commuting choices are needed).
inline Matrix plane_shear(Rng& rng) {
    Matrix m = Matrix::identity(2);
    m(0, 1) = uniform_int(rng, -2, 2);
    return m;
}

/// Random valid algebroid model. All vertices carry the same fiber type
/// dressed by per-vertex basis changes; edge maps compose a standard-frame
/// automorphism pair with the dressings, so cell flatness can be arranged in
/// the standard frame.
inline AlgebroidModel random_model(Rng& rng, const ModelParams& params = {}) {
    const FiberKind kind =
        params.fiber ? *params.fiber
                     : static_cast<FiberKind>(uniform_int(rng, 0, 2));

    Representation std_rep = [&] {
        switch (kind) {
        case FiberKind::Abelian2Trivial:
            return Representation::trivial(LieAlgebra::abelian(2), 2);
        case FiberKind::HeisenbergAdjoint:
            return adjoint_rep(heisenberg());
        default:
            return adjoint_rep(sl2());
        }
    }();
    const int n = std_rep.algebra().dim();
    const int m = std_rep.module_dim();

    auto sample_free = [&](Matrix& phi, Matrix& psi) {
        switch (kind) {
        case FiberKind::Abelian2Trivial:
            phi = random_unimodular(rng, 2);
            psi = random_unimodular(rng, 2);
            break;
        case FiberKind::HeisenbergAdjoint:
            phi = heis_automorphism(rng);
            psi = phi;
            break;
        default:
            phi = sl2_inner_automorphism(rng);
            psi = phi;
            break;
        }
    };
    auto sample_family = [&](Matrix& phi, Matrix& psi) {
        switch (kind) {
        case FiberKind::Abelian2Trivial:
            phi = plane_shear(rng);
            psi = plane_shear(rng);
            break;
        case FiberKind::HeisenbergAdjoint:
            phi = heis_shear(rng);
            psi = phi;
            break;
        default:
            phi = sl2_unipotent_family(rng);
            psi = phi;
            break;
        }
    };

    const int vcount = uniform_int(rng, 1, params.max_vertices);
    std::vector<Edge> edges;
    for (int v = 1; v < vcount; ++v)
        edges.push_back({uniform_int(rng, 0, v - 1), v});
    const int tree_edges = static_cast<int>(edges.size());
    const int extra =
        params.tree_only ? 0 : uniform_int(rng, 0, params.max_total_edges - tree_edges);
    for (int i = 0; i < extra; ++i)
        edges.push_back({uniform_int(rng, 0, vcount - 1), uniform_int(rng, 0, vcount - 1)});

    // Standard-frame transports. Edges of the BFS spanning tree are trivial in
    // the standard frame; the dressings below still make the final edge maps
    // generic. Loop words below run through tree paths, so cell flatness only
    // depends on the generators' standard-frame transports.
    BaseComplex skeleton = BaseComplex::create(vcount, edges, {}, 0);
    SpanningTree tree = spanning_tree(skeleton, 0);
    enum class Role { Tree, Free, Identity, Family };
    std::vector<Role> role(edges.size(), Role::Free);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (tree.in_tree[e])
            role[e] = Role::Tree;
    auto loop_through = [&](int e) {
        Word w = tree.path_from_root(edges[e].src, skeleton);
        w.push_back({e, false});
        Word back = reversed(tree.path_from_root(edges[e].dst, skeleton));
        w.insert(w.end(), back.begin(), back.end());
        return w;
    };

    std::vector<Word> cells;
    if (!params.tree_only && !edges.empty()) {
        std::vector<int> nontree;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!tree.in_tree[e])
                nontree.push_back(static_cast<int>(e));
        const int cellcount = uniform_int(rng, 0, params.max_cells);
        for (int c = 0; c < cellcount; ++c) {
            const int style = uniform_int(rng, 0, 2);
            if (style == 0 && !nontree.empty()) {
                // Disc: kill one generator by forcing its transport to the identity.
                const int e = nontree[uniform_int(rng, 0, static_cast<int>(nontree.size()) - 1)];
                role[e] = Role::Identity;
                cells.push_back(loop_through(e));
            } else if (style == 1 && nontree.size() >= 2) {
                // Commutator of two generators drawn from a commuting family.
                const int a = nontree[uniform_int(rng, 0, static_cast<int>(nontree.size()) - 1)];
                int b = nontree[uniform_int(rng, 0, static_cast<int>(nontree.size()) - 1)];
                if (a == b)
                    continue;
                if (role[a] != Role::Identity)
                    role[a] = Role::Family;
                if (role[b] != Role::Identity)
                    role[b] = Role::Family;
                Word w = loop_through(a);
                Word wb = loop_through(b);
                w.insert(w.end(), wb.begin(), wb.end());
                Word ra = reversed(loop_through(a));
                Word rb = reversed(loop_through(b));
                w.insert(w.end(), ra.begin(), ra.end());
                w.insert(w.end(), rb.begin(), rb.end());
                cells.push_back(w);
            } else {
                // Null-homotopic word: flat for any transports.
                int at = uniform_int(rng, 0, vcount - 1);
                Word w;
                const int len = uniform_int(rng, 1, 2);
                for (int s = 0; s < len; ++s) {
                    std::vector<Step> options;
                    for (std::size_t e = 0; e < edges.size(); ++e) {
                        if (edges[e].src == at)
                            options.push_back({static_cast<int>(e), false});
                        if (edges[e].dst == at)
                            options.push_back({static_cast<int>(e), true});
                    }
                    if (options.empty())
                        break;
                    Step pick =
                        options[uniform_int(rng, 0, static_cast<int>(options.size()) - 1)];
                    w.push_back(pick);
                    at = skeleton.step_end(pick);
                }
                if (w.empty())
                    continue;
                Word back = reversed(w);
                w.insert(w.end(), back.begin(), back.end());
                cells.push_back(w);
            }
        }
    }

    std::vector<Matrix> phi(edges.size()), psi(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        switch (role[e]) {
        case Role::Tree:
        case Role::Identity:
            phi[e] = Matrix::identity(n);
            psi[e] = Matrix::identity(m);
            break;
        case Role::Family:
            sample_family(phi[e], psi[e]);
            break;
        case Role::Free:
            sample_free(phi[e], psi[e]);
            break;
        }
    }

    std::vector<Matrix> dress_r, dress_s, dress_r_inv, dress_s_inv;
    for (int v = 0; v < vcount; ++v) {
        dress_r.push_back(random_unimodular(rng, n));
        dress_s.push_back(random_unimodular(rng, m));
        dress_r_inv.push_back(inverse(dress_r.back()));
        dress_s_inv.push_back(inverse(dress_s.back()));
    }

    std::vector<Representation> reps;
    for (int v = 0; v < vcount; ++v)
        reps.push_back(change_basis(std_rep, dress_r[v], dress_s[v]));
    std::vector<EdgeMaps> maps;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& edge = edges[e];
        maps.push_back({multiply(multiply(dress_r_inv[edge.dst], phi[e]), dress_r[edge.src]),
                        multiply(multiply(dress_s_inv[edge.dst], psi[e]), dress_s[edge.src])});
    }

    const int basepoint = uniform_int(rng, 0, vcount - 1);
    return AlgebroidModel::create(BaseComplex::create(vcount, edges, cells, basepoint),
                                  std::move(reps), std::move(maps));
}

} // namespace alglab::testutil

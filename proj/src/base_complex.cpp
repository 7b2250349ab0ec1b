#include "alglab/base_complex.hpp"

#include "alglab/chevalley.hpp"

#include <deque>
#include <stdexcept>

namespace alglab {

Word reversed(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->edge, !it->reversed});
    return out;
}

std::vector<BaseViolation> BaseComplex::validate(int vertex_count, const std::vector<Edge>& edges,
                                                 const std::vector<Word>& cells, int basepoint) {
    std::vector<BaseViolation> out;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].src < 0 || edges[e].src >= vertex_count || edges[e].dst < 0 ||
            edges[e].dst >= vertex_count)
            out.push_back({BaseViolation::Kind::EdgeRange, static_cast<int>(e)});
    if (basepoint < 0 || basepoint >= vertex_count)
        out.push_back({BaseViolation::Kind::BasepointRange, -1});
    if (!out.empty())
        return out; // range errors make the remaining checks meaningless

    if (vertex_count > 0) {
        std::vector<bool> seen(vertex_count, false);
        std::deque<int> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const Edge& e : edges) {
                if (e.src == v && !seen[e.dst]) {
                    seen[e.dst] = true;
                    queue.push_back(e.dst);
                }
                if (e.dst == v && !seen[e.src]) {
                    seen[e.src] = true;
                    queue.push_back(e.src);
                }
            }
        }
        for (int v = 0; v < vertex_count; ++v)
            if (!seen[v]) {
                out.push_back({BaseViolation::Kind::NotConnected, -1});
                break;
            }
    }

    for (std::size_t c = 0; c < cells.size(); ++c) {
        bool in_range = true;
        for (const Step& s : cells[c])
            if (s.edge < 0 || s.edge >= static_cast<int>(edges.size())) {
                out.push_back({BaseViolation::Kind::CellEdgeRange, static_cast<int>(c)});
                in_range = false;
                break;
            }
        if (!in_range)
            continue;
        const Word& w = cells[c];
        bool closed = !w.empty();
        for (std::size_t i = 0; closed && i < w.size(); ++i) {
            const Step& cur = w[i];
            const Step& next = w[(i + 1) % w.size()];
            const int cur_end = cur.reversed ? edges[cur.edge].src : edges[cur.edge].dst;
            const int next_start = next.reversed ? edges[next.edge].dst : edges[next.edge].src;
            closed = cur_end == next_start;
        }
        if (!closed)
            out.push_back({BaseViolation::Kind::OpenCell, static_cast<int>(c)});
    }
    return out;
}

BaseComplex BaseComplex::create(int vertex_count, std::vector<Edge> edges, std::vector<Word> cells,
                                int basepoint) {
    auto violations = validate(vertex_count, edges, cells, basepoint);
    if (!violations.empty())
        throw std::invalid_argument("BaseComplex: invalid presentation complex (violation kind " +
                                    std::to_string(static_cast<int>(violations.front().kind)) +
                                    ")");
    return BaseComplex(vertex_count, std::move(edges), std::move(cells), basepoint);
}

bool BaseComplex::word_is_path(const Word& w, int* start, int* end) const {
    int at = -1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].edge < 0 || w[i].edge >= static_cast<int>(edges_.size()))
            return false;
        const int s = step_start(w[i]);
        if (i == 0) {
            if (start)
                *start = s;
            at = s;
        }
        if (s != at)
            return false;
        at = step_end(w[i]);
    }
    if (end)
        *end = at;
    return true;
}

SpanningTree spanning_tree(const BaseComplex& base, int root) {
    const int n = base.vertex_count();
    SpanningTree tree;
    tree.root = root;
    tree.parent_vertex.assign(n, -1);
    tree.parent_edge.assign(n, -1);
    tree.parent_forward.assign(n, true);
    tree.in_tree.assign(base.edges().size(), false);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        tree.bfs_order.push_back(v);
        for (std::size_t e = 0; e < base.edges().size(); ++e) {
            const Edge& edge = base.edges()[e];
            if (edge.src == v && !seen[edge.dst]) {
                seen[edge.dst] = true;
                tree.parent_vertex[edge.dst] = v;
                tree.parent_edge[edge.dst] = static_cast<int>(e);
                tree.parent_forward[edge.dst] = true;
                tree.in_tree[e] = true;
                queue.push_back(edge.dst);
            } else if (edge.dst == v && !seen[edge.src]) {
                seen[edge.src] = true;
                tree.parent_vertex[edge.src] = v;
                tree.parent_edge[edge.src] = static_cast<int>(e);
                tree.parent_forward[edge.src] = false;
                tree.in_tree[e] = true;
                queue.push_back(edge.src);
            }
        }
    }
    return tree;
}

Word SpanningTree::path_from_root(int v, const BaseComplex&) const {
    Word back; // steps v -> root; a parent->v tree edge is walked against its orientation
    while (v != root) {
        back.push_back({parent_edge[v], parent_forward[v]});
        v = parent_vertex[v];
    }
    return reversed(back);
}

Word SpanningTree::path(int u, int v, const BaseComplex& base) const {
    Word w = reversed(path_from_root(u, base));
    Word down = path_from_root(v, base);
    w.insert(w.end(), down.begin(), down.end());
    return w;
}

std::vector<LocalSystemViolation> LocalSystem::validate(const BaseComplex& base, int fiber_dim,
                                                        const std::vector<Matrix>& transports) {
    std::vector<LocalSystemViolation> out;
    if (static_cast<int>(transports.size()) != static_cast<int>(base.edges().size())) {
        out.push_back({LocalSystemViolation::Kind::Shape, -1});
        return out;
    }
    bool all_invertible = true;
    for (std::size_t e = 0; e < transports.size(); ++e) {
        if (transports[e].rows() != fiber_dim || transports[e].cols() != fiber_dim) {
            out.push_back({LocalSystemViolation::Kind::Shape, static_cast<int>(e)});
            all_invertible = false;
        } else if (rank(transports[e]) != fiber_dim) {
            out.push_back({LocalSystemViolation::Kind::Singular, static_cast<int>(e)});
            all_invertible = false;
        }
    }
    if (!all_invertible)
        return out;
    LocalSystem probe(base, fiber_dim, transports);
    for (std::size_t c = 0; c < base.cells().size(); ++c)
        if (holonomy(probe, base.cells()[c]) != Matrix::identity(fiber_dim))
            out.push_back({LocalSystemViolation::Kind::CellHolonomy, static_cast<int>(c)});
    return out;
}

LocalSystem LocalSystem::create(BaseComplex base, int fiber_dim, std::vector<Matrix> transports) {
    auto violations = validate(base, fiber_dim, transports);
    if (!violations.empty())
        throw std::invalid_argument("LocalSystem: invalid transports (violation kind " +
                                    std::to_string(static_cast<int>(violations.front().kind)) +
                                    ")");
    return LocalSystem(std::move(base), fiber_dim, std::move(transports));
}

Matrix holonomy(const LocalSystem& ls, const Word& w) {
    if (!ls.base().word_is_path(w))
        throw std::invalid_argument("holonomy: word is not a composable path");
    Matrix h = Matrix::identity(ls.fiber_dim());
    for (const Step& s : w) {
        const Matrix& t = ls.transport(s.edge);
        h = multiply(s.reversed ? inverse(t) : t, h);
    }
    return h;
}

TwistedComplex twisted_complex(const LocalSystem& ls) {
    const int m = ls.fiber_dim();
    const auto& base = ls.base();
    const int ecount = static_cast<int>(base.edges().size());
    const int ccount = static_cast<int>(base.cells().size());

    Matrix d0(ecount * m, base.vertex_count() * m);
    for (int e = 0; e < ecount; ++e) {
        d0.add_block(e * m, base.edges()[e].src * m, ls.transport(e));
        d0.add_identity_block(e * m, base.edges()[e].dst * m, m, Rational(-1));
    }

    // Accumulated boundary value: Theta(s_1..s_k) = T(s_k) Theta(s_1..s_{k-1}) + th(s_k),
    // where a reversed step contributes th(-e) = -T_e^{-1} th_e and transport T_e^{-1}.
    Matrix d1(ccount * m, ecount * m);
    for (int c = 0; c < ccount; ++c) {
        const Word& w = base.cells()[c];
        Matrix suffix = Matrix::identity(m); // transport applied after step i
        for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
            const Step& s = w[i];
            if (!s.reversed) {
                d1.add_block(c * m, s.edge * m, suffix);
                suffix = multiply(suffix, ls.transport(s.edge));
            } else {
                Matrix inv = inverse(ls.transport(s.edge));
                d1.add_block(c * m, s.edge * m, multiply(suffix, inv), Rational(-1));
                suffix = multiply(suffix, inv);
            }
        }
    }

    TwistedComplex result{std::move(d0), std::move(d1)};
    if (!multiply(result.d1, result.d0).is_zero())
        throw std::logic_error("twisted_complex: d1 * d0 != 0 (flatness violated)");
    return result;
}

LocalCohomology h_dims(const LocalSystem& ls) {
    TwistedComplex tc = twisted_complex(ls);
    LocalCohomology out;
    out.h0 = kernel_basis(tc.d0).dim();
    out.cocycles = kernel_basis(tc.d1);
    out.coboundaries = image_basis(tc.d0);
    out.representatives = select_representatives(out.cocycles, out.coboundaries);
    out.h1 = static_cast<int>(out.representatives.size());
    return out;
}

} // namespace alglab

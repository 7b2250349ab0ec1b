#pragma once

#include "alglab/linalg.hpp"

#include <string>

namespace alglab {

struct Edge {
    int src, dst;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// One traversal of an edge; forward means src -> dst.
struct Step {
    int edge;
    bool reversed;
    friend bool operator==(const Step&, const Step&) = default;
};

using Word = std::vector<Step>;

Word reversed(const Word& w);

struct BaseViolation {
    enum class Kind { EdgeRange, BasepointRange, NotConnected, OpenCell, CellEdgeRange };
    Kind kind;
    int index; // edge / cell index where applicable, else -1
};

/// Presentation 2-complex: a connected multigraph plus attached 2-cells given
/// by closed boundary words.
class BaseComplex {
public:
    static std::vector<BaseViolation> validate(int vertex_count, const std::vector<Edge>& edges,
                                               const std::vector<Word>& cells, int basepoint);
    /// Throws std::invalid_argument on the first violation.
    static BaseComplex create(int vertex_count, std::vector<Edge> edges, std::vector<Word> cells,
                              int basepoint);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Word>& cells() const { return cells_; }
    int basepoint() const { return basepoint_; }

    int step_start(const Step& s) const {
        return s.reversed ? edges_[s.edge].dst : edges_[s.edge].src;
    }
    int step_end(const Step& s) const {
        return s.reversed ? edges_[s.edge].src : edges_[s.edge].dst;
    }
    /// True iff consecutive steps compose; writes endpoints when they do.
    bool word_is_path(const Word& w, int* start = nullptr, int* end = nullptr) const;

    friend bool operator==(const BaseComplex&, const BaseComplex&) = default;

private:
    BaseComplex(int vertex_count, std::vector<Edge> edges, std::vector<Word> cells, int basepoint)
        : vertex_count_(vertex_count), edges_(std::move(edges)), cells_(std::move(cells)),
          basepoint_(basepoint) {}

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Word> cells_;
    int basepoint_ = 0;
};

/// BFS spanning tree rooted at `root`.
struct SpanningTree {
    int root = 0;
    std::vector<int> parent_vertex;   // -1 at root
    std::vector<int> parent_edge;     // -1 at root
    std::vector<bool> parent_forward; // tree edge oriented parent -> vertex
    std::vector<int> bfs_order;
    std::vector<bool> in_tree; // per edge

    Word path_from_root(int v, const BaseComplex& base) const;
    /// Path u -> root -> v inside the tree.
    Word path(int u, int v, const BaseComplex& base) const;
};

SpanningTree spanning_tree(const BaseComplex& base, int root);

struct LocalSystemViolation {
    enum class Kind { Shape, Singular, CellHolonomy };
    Kind kind;
    int index; // edge or cell
};

/// Flat system of coefficients: one invertible transport per edge, trivial
/// holonomy around every 2-cell.
class LocalSystem {
public:
    static std::vector<LocalSystemViolation> validate(const BaseComplex& base, int fiber_dim,
                                                      const std::vector<Matrix>& transports);
    static LocalSystem create(BaseComplex base, int fiber_dim, std::vector<Matrix> transports);

    const BaseComplex& base() const { return base_; }
    int fiber_dim() const { return fiber_dim_; }
    const Matrix& transport(int edge) const { return transports_[edge]; }

private:
    LocalSystem(BaseComplex base, int fiber_dim, std::vector<Matrix> transports)
        : base_(std::move(base)), fiber_dim_(fiber_dim), transports_(std::move(transports)) {}

    BaseComplex base_;
    int fiber_dim_ = 0;
    std::vector<Matrix> transports_;
};

/// Ordered transport product along a path word; throws on non-composable words.
Matrix holonomy(const LocalSystem& ls, const Word& w);

/// Degree <= 1 twisted cellular complex:
///   (d0 m)(e)    = T_e m_src - m_dst
///   (d1 th)(cell) = the transport-twisted sum of th along the boundary word.
struct TwistedComplex {
    Matrix d0;
    Matrix d1;
};

TwistedComplex twisted_complex(const LocalSystem& ls);

struct LocalCohomology {
    int h0 = 0;
    int h1 = 0;
    std::vector<Vec> representatives; // H^1, coordinates over the edge cochains
    Subspace cocycles;                // Z^1
    Subspace coboundaries;            // B^1
};

LocalCohomology h_dims(const LocalSystem& ls);

} // namespace alglab

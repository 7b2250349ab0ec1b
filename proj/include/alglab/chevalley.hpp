#pragma once

#include "alglab/combinatorics.hpp"
#include "alglab/representation.hpp"

#include <optional>

namespace alglab {

/// Degree-k cochain space C^k(g, V). Coordinates are indexed by
/// (lexicographic k-subset of the g-basis) x (V-basis), subset-major:
/// index = subset_rank * dim V + v.
class CochainSpace {
public:
    CochainSpace(const Representation& r, int degree)
        : degree_(degree), module_dim_(r.module_dim()), subsets_(r.algebra().dim(), degree) {}

    int degree() const { return degree_; }
    int dimension() const { return subsets_.count() * module_dim_; }
    const SubsetTable& subsets() const { return subsets_; }
    int index(int subset_rank, int v) const { return subset_rank * module_dim_ + v; }

private:
    int degree_;
    int module_dim_;
    SubsetTable subsets_;
};

/// A cochain is a coordinate vector in its space.
struct Cochain {
    int degree = 0;
    Vec coords;
};

/// Matrix of the differential C^k -> C^(k+1) for the convention
/// (D w)(u_0..u_k) = sum_i (-1)^i u_i.w(..^u_i..)
///                 + sum_{i<j} (-1)^{i+j} w([u_i,u_j], ..^u_i..^u_j..).
Matrix ce_differential(const Representation& r, int degree);

struct CohomologyBasis {
    int degree = 0;
    int dim = 0;                       // dim H^k
    std::vector<Vec> representatives;  // cocycles whose classes form a basis
    Subspace cocycles;                 // Z^k
    Subspace coboundaries;             // B^k
};

/// H^k = Ker D^k / Im D^(k-1); H^0 = Ker D^0.
CohomologyBasis cohomology(const Representation& r, int degree);

bool is_cocycle(const Representation& r, const Cochain& w);

/// A degree-(k-1) primitive m with D m = w, or nullopt. For degree 0 the
/// only primitive candidate is the empty cochain, so w must be zero.
std::optional<Cochain> coboundary_primitive(const Representation& r, const Cochain& w);

/// Coordinates of [w] with respect to basis.representatives. The input must
/// be a cocycle; throws std::invalid_argument otherwise.
Vec class_coordinates(const CohomologyBasis& basis, const Vec& cocycle);

/// Canonical class representatives: greedy selection from the canonical Z
/// basis of rows independent modulo B.
std::vector<Vec> select_representatives(const Subspace& cocycles, const Subspace& coboundaries);

} // namespace alglab

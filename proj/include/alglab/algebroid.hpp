#pragma once

#include "alglab/base_complex.hpp"
#include "alglab/chevalley.hpp"

#include <array>

namespace alglab {

/// Per-edge structure maps: an isomorphism of the vertex Lie algebras and a
/// compatible isomorphism of the coefficient modules.
struct EdgeMaps {
    Matrix algebra_map; // A_e : g_src -> g_dst
    Matrix module_map;  // T_e : V_src -> V_dst
    friend bool operator==(const EdgeMaps&, const EdgeMaps&) = default;
};

struct ModelViolation {
    enum class Kind {
        Shape,           // fiber dimensions do not match across the model
        BracketMap,      // A_e fails to respect brackets at basis pair (i, j)
        Intertwine,      // T_e action_src(e_j) != action_dst(A_e e_j) T_e
        AlgebraHolonomy, // cell holonomy of the A system is not the identity
        ModuleHolonomy,  // cell holonomy of the T system is not the identity
        Singular,        // an edge map is not invertible
    };
    Kind kind;
    int index; // edge index, or cell index for holonomy kinds
    int i = -1, j = -1;
};

/// Discrete flat model of a transitive Lie algebroid: a presentation
/// 2-complex base, a Lie algebra with a representation at each vertex, and
/// flat edge transports for both.
class AlgebroidModel {
public:
    static std::vector<ModelViolation> validate(const BaseComplex& base,
                                                const std::vector<Representation>& vertex_reps,
                                                const std::vector<EdgeMaps>& edge_maps);
    /// Throws std::invalid_argument on the first violation.
    static AlgebroidModel create(BaseComplex base, std::vector<Representation> vertex_reps,
                                 std::vector<EdgeMaps> edge_maps);

    const BaseComplex& base() const { return base_; }
    const Representation& rep(int vertex) const { return vertex_reps_[vertex]; }
    const EdgeMaps& edge(int e) const { return edge_maps_[e]; }
    int algebra_dim() const { return vertex_reps_.empty() ? 0 : vertex_reps_[0].algebra().dim(); }
    int module_dim() const { return vertex_reps_.empty() ? 0 : vertex_reps_[0].module_dim(); }

    /// The coefficient bundle as a local system (the T_e side).
    LocalSystem module_system() const;

private:
    AlgebroidModel(BaseComplex base, std::vector<Representation> vertex_reps,
                   std::vector<EdgeMaps> edge_maps)
        : base_(std::move(base)), vertex_reps_(std::move(vertex_reps)),
          edge_maps_(std::move(edge_maps)) {}

    BaseComplex base_;
    std::vector<Representation> vertex_reps_;
    std::vector<EdgeMaps> edge_maps_;
};

/// Degree-1 mixed cochain: a vertical part delta_v : g_v -> V_v per vertex
/// and a horizontal part theta_e in V_dst(e) per edge.
struct MixedCochain {
    std::vector<Matrix> delta; // m x n matrices
    std::vector<Vec> theta;
    friend bool operator==(const MixedCochain&, const MixedCochain&) = default;
};

MixedCochain operator+(const MixedCochain& a, const MixedCochain& b);
MixedCochain operator-(const MixedCochain& a, const MixedCochain& b);
MixedCochain operator*(const Rational& s, const MixedCochain& w);

/// Flat coordinates for mixed cochains: per-vertex delta blocks (column-major,
/// matching the degree-1 Chevalley indexing), then per-edge theta blocks.
class MixedLayout {
public:
    MixedLayout() = default;
    explicit MixedLayout(const AlgebroidModel& model);

    int algebra_dim() const { return n_; }
    int module_dim() const { return m_; }
    int delta_offset(int v) const { return v * n_ * m_; }
    int theta_offset(int e) const { return vertex_count_ * n_ * m_ + e * m_; }
    int total() const { return vertex_count_ * n_ * m_ + edge_count_ * m_; }

    Vec flatten(const MixedCochain& w) const;
    MixedCochain unflatten(const Vec& coords) const;
    MixedCochain zero() const;

    friend bool operator==(const MixedLayout&, const MixedLayout&) = default;

private:
    int n_ = 0, m_ = 0, vertex_count_ = 0, edge_count_ = 0;
};

/// The three exact condition families a cocycle satisfies, stacked:
/// per-vertex Chevalley closedness of delta, the per-edge compatibility
/// T_e delta_src(u) - delta_dst(A_e u) = (A_e u) . theta_e, and vanishing of
/// the twisted boundary sum of theta around every cell.
Matrix cocycle_conditions(const AlgebroidModel& model);

/// Matrix of mu |-> (delta_v = action_v(.) mu_v, theta_e = T_e mu_src - mu_dst).
Matrix coboundary_map(const AlgebroidModel& model);

MixedCochain coboundary(const AlgebroidModel& model, const std::vector<Vec>& mu);
bool is_cocycle(const AlgebroidModel& model, const MixedCochain& w);

struct H1Report {
    MixedLayout layout;
    int z1_dim = 0;
    int b1_dim = 0;
    int h1_dim = 0;
    std::vector<MixedCochain> representatives;
    std::vector<Vec> flat_representatives;
    Subspace cocycles;     // Z^1 in flat coordinates
    Subspace coboundaries; // B^1 in flat coordinates
    /// Per-vertex degree-1 Chevalley cohomology of (g_v, V_v).
    std::vector<CohomologyBasis> vertex_cohomology;
    /// Per-vertex localization matrices: column i holds the class coordinates
    /// of representative i restricted to the vertex fiber.
    std::vector<Matrix> localization;
};

H1Report h1(const AlgebroidModel& model);

/// Class coordinates of a cocycle with respect to data.representatives.
Vec class_coordinates(const H1Report& data, const MixedCochain& w);

/// Localization at a vertex: the Chevalley class of delta_x. Requires a
/// cocycle; well-defined on classes.
Vec localize(const H1Report& data, const MixedCochain& w, int vertex);

struct KernelUpsilonReport {
    int dim = 0;
    /// Coefficients with respect to the H1 representatives.
    Subspace coefficients;
    std::vector<MixedCochain> representatives;
};

KernelUpsilonReport kernel_upsilon(const AlgebroidModel& model, const H1Report& data, int vertex);
KernelUpsilonReport kernel_upsilon(const AlgebroidModel& model, int vertex);

/// The invariant sub-bundle F0 with its restricted transports, plus the
/// per-vertex bases embedding its coordinates into V.
struct InvariantSystem {
    LocalSystem system;
    std::vector<Matrix> bases; // rows span invariants(rep(v))
};

InvariantSystem invariant_subsystem(const AlgebroidModel& model);

/// F0 as an algebroid model: same base and algebras, zero fiber action,
/// restricted transports.
AlgebroidModel invariant_model(const AlgebroidModel& model, const InvariantSystem& inv);

/// The quotient bundle F/F0 as an algebroid model, with the projections and
/// sections used to build it.
struct QuotientModel {
    AlgebroidModel model;
    std::vector<Matrix> projections;
    std::vector<Matrix> sections;
};

QuotientModel quotient_model(const AlgebroidModel& model, const InvariantSystem& inv);

/// theta0: per-edge vectors in V coordinates, valued in the invariant
/// sub-bundle and closed under the twisted boundary operator. Returns the
/// mixed cocycle with zero vertical part. Throws on precondition violation.
MixedCochain rho_pullback(const AlgebroidModel& model, const std::vector<Vec>& theta0);

struct KernelTheoremReport {
    int vertex = 0;
    int ker_upsilon_dim = 0;
    int h1_invariants = 0; // dim H^1(base, F0)
    Matrix rho_star;       // class coordinates of the pulled-back generators
    bool dims_equal = false;
    bool rho_star_injective = false;
    bool image_is_kernel = false;
    bool pass = false;
};

/// Computes dim Ker Upsilon^1_x and dim H^1(base, F0) by independent routes
/// and checks that [rho^*] is an isomorphism onto the kernel.
KernelTheoremReport verify_kernel_theorem(const AlgebroidModel& model, int vertex);

struct SixStatementsReport {
    std::array<bool, 6> statement{};
    bool all_agree = false;
    /// Indices (0-based) of statements disagreeing with statement 1, if any.
    std::vector<int> disagreeing;
};

/// Evaluates the six equivalent coboundary characterizations of a cocycle by
/// independent linear systems and reports whether they agree.
SixStatementsReport verify_six_statements(const AlgebroidModel& model, const MixedCochain& w,
                                          int vertex);

struct LesReport {
    int h1_f0 = 0;
    int h1_f = 0;
    int h1_fbar = 0;
    Matrix i_star; // H^1(F0) -> H^1(F) on representatives
    Matrix j_star; // H^1(F) -> H^1(Fbar) on representatives
    bool i_injective = false;
    bool kernel_equals_image = false;
    bool localization_square_commutes = false
        ; // diagram check at the chosen vertex, reported but not gating
    bool pass = false;
};

LesReport verify_les(const AlgebroidModel& model, int vertex);

struct ImageComparisonReport {
    int x = 0, y = 0;
    int dim_x = 0, dim_y = 0;
    bool dims_equal = false;
    bool transport_maps_images = false; // J along the tree path carries Im(x) onto Im(y)
    bool commutes = false;              // J o Upsilon_x = Upsilon_y along the tree path
    bool loops_fix_image = false;       // generator loops act as the identity on Im(x)
    bool pass = false;
};

ImageComparisonReport compare_images(const AlgebroidModel& model, int x, int y);

} // namespace alglab

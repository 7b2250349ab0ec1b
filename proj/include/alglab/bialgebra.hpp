#pragma once

#include "alglab/chevalley.hpp"

#include <optional>

namespace alglab {

/// Element of Lambda^k g over the lexicographic k-subset basis, k <= 3.
struct MultiVector {
    int degree = 0;
    Vec coords;
    friend bool operator==(const MultiVector&, const MultiVector&) = default;
};

MultiVector zero_multivector(const LieAlgebra& g, int degree);
/// e_{indices[0]} ^ e_{indices[1]} ^ ... (normalized; zero on repeats).
MultiVector basis_multivector(const LieAlgebra& g, const std::vector<int>& indices);
bool is_zero(const MultiVector& v);
MultiVector operator+(const MultiVector& a, const MultiVector& b);
MultiVector operator*(const Rational& s, const MultiVector& v);

/// Schouten bracket, the graded biderivation extension of the Lie bracket:
/// degree (p, q) -> p + q - 1, with [u, v] the bracket in degree (1, 1) and
/// scalars central. Throws when the result degree would exceed 3.
MultiVector schouten(const LieAlgebra& g, const MultiVector& p, const MultiVector& q);

/// Linear map g -> Lambda^2 g as a C(n,2) x n matrix (column j = image of e_j).
struct CobracketMap {
    Matrix matrix;
    friend bool operator==(const CobracketMap&, const CobracketMap&) = default;
};

MultiVector cobracket_value(const LieAlgebra& g, const CobracketMap& omega, int basis_index);

/// Extension of the cobracket as a degree-+1 derivation of the exterior
/// algebra: Lambda^k -> Lambda^(k+1), zero in degree 0, and on decomposables
/// w(A_1 ^ ... ^ A_k) = sum_i (-1)^(i+1) A_1 ^ ... ^ w(A_i) ^ ... ^ A_k.
Matrix extend_derivation(const LieAlgebra& g, const CobracketMap& omega, int degree);

/// Cocycle test for the adjoint action on Lambda^2:
/// omega[u, v] = [omega(u), v] + [u, omega(v)]. Evaluated both directly and
/// through the Chevalley complex with Lambda^2-adjoint coefficients.
bool is_cocycle_l2(const LieAlgebra& g, const CobracketMap& omega);

struct CompatiblePairReport {
    bool cocycle = false;
    /// [ (1/2)[L,L] + omega(L), . ] + omega^2 = 0 as a map g -> Lambda^3 g.
    bool bracket_condition = false;
    bool pass = false;
    bool omega_exact = false; // omega = [mu, .] for some mu in Lambda^2
    bool triangular = false;  // omega_exact and [L, L] = 0
};

CompatiblePairReport compatible_pair_check(const LieAlgebra& g, const MultiVector& lambda,
                                           const CobracketMap& omega);

struct DualBracketReport {
    int dim = 0;
    std::vector<Rational> structure_constants; // candidate bracket on g*
    bool jacobi_ok = false;
    std::vector<StructureViolation> violations;
};

/// Candidate bracket on the dual from d* = [lambda, .] + omega via
/// <[xi, eta]*, u> = -(d* u)(xi, eta). Defined for any inputs; the report
/// carries the exact Jacobi validation of the result.
DualBracketReport dual_bracket(const LieAlgebra& g, const MultiVector& lambda,
                               const CobracketMap& omega);

/// A witness nu with lambda2 = lambda1 + nu and omega2 = omega1 - [nu, .],
/// or nullopt.
std::optional<MultiVector> pairs_equivalent(const LieAlgebra& g, const MultiVector& lambda1,
                                            const CobracketMap& omega1,
                                            const MultiVector& lambda2,
                                            const CobracketMap& omega2);

/// mu in Lambda^2 g with omega = [mu, .], or nullopt. Requires a cocycle;
/// throws std::invalid_argument otherwise.
std::optional<MultiVector> coboundary_detect(const LieAlgebra& g, const CobracketMap& omega);

} // namespace alglab

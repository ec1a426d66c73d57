#pragma once

#include "gkm/faces.hpp"

#include <functional>

namespace gkm {

using BettiVector = std::vector<long long>;

/// Pluggable builder for the per-edge divisibility constraint block; the
/// default is divisibility_constraints. Tests inject an independent
/// division-after-coordinate-change oracle here.
using ConstraintBuilder = std::function<QMatrix(int rank, int degree, const QVector& alpha)>;

/// Top degree of the ordinary cohomology range: 2·valence (even graphs) or
/// 2·valence + 1 (odd graphs).
int top_degree(const EvenGkmGraph& g);
int top_degree(const OddGkmGraph& g);

/// dim H^m_T of the graph. Even graphs: 0 in odd degrees; tuples (f_v) with
/// f_{i(e)} - f_{t(e)} divisible by alpha(e). Odd graphs: P-part (even m) with
/// the sign-free congruences across grounded squares, Q-part (odd m) with the
/// signed sum relation at every square.
long long equivariant_dim(const EvenGkmGraph& g, int m, const ConstraintBuilder& builder = {});
long long equivariant_dim(const OddGkmGraph& g, int m, const ConstraintBuilder& builder = {});

/// A basis of H^m_T, flattened per site (vertex/circle) into coefficient
/// blocks of size `block` in the deterministic monomial order.
struct GradedBasis {
    int m = 0;
    std::size_t sites = 0;
    std::size_t block = 0;
    std::vector<QVector> vectors;
    long long dim() const { return static_cast<long long>(vectors.size()); }
};
GradedBasis equivariant_basis(const EvenGkmGraph& g, int m, const ConstraintBuilder& builder = {});
GradedBasis equivariant_basis(const OddGkmGraph& g, int m, const ConstraintBuilder& builder = {});

/// An element of H^m_T as per-site polynomials; checked against the graph's
/// divisibility relations on construction.
struct GradedClass {
    int m = 0;
    std::vector<HomogeneousPoly> parts;  // one per vertex/circle

    static GradedClass make(const EvenGkmGraph& g, int m, std::vector<HomogeneousPoly> parts);
    static GradedClass make(const OddGkmGraph& g, int m, std::vector<HomogeneousPoly> parts);
};

/// Betti numbers b_0..b_top: b_m = dim H^m_T - dim(sum_i x_i · H^{m-2}_T).
BettiVector ordinary_betti(const EvenGkmGraph& g, const ConstraintBuilder& builder = {});
BettiVector ordinary_betti(const OddGkmGraph& g, const ConstraintBuilder& builder = {});

/// Same computation on an arbitrary degree range (diagnostics above top).
BettiVector betti_range(const EvenGkmGraph& g, int max_degree, const ConstraintBuilder& builder = {});
BettiVector betti_range(const OddGkmGraph& g, int max_degree, const ConstraintBuilder& builder = {});

struct FormalityReport {
    bool formal = false;       // total Betti equals the fixed-set contribution
    long long total = 0;       // sum of Betti numbers over 0..top
    long long expected = 0;    // #vertices (even) or 2·#circles (odd)
    bool free_module = true;   // dim H^m_T = sum_j b_j·dim S^{(m-j)/2} up to 2·top
};
FormalityReport formality_check(const EvenGkmGraph& g);
FormalityReport formality_check(const OddGkmGraph& g);

/// True iff b_{2n} >= 1 where n is the valence.
bool orientability_check(const EvenGkmGraph& g);

struct SplitDivision {
    bool divisible = false;
    BettiVector quotient;
};
/// Divides the Poincaré polynomial of b by (1 + t^{2k+1}); succeeds iff the
/// quotient has non-negative coefficients supported in even degrees and the
/// remainder vanishes.
SplitDivision polynomial_split_check(const BettiVector& b, int k);

/// A finite-order automorphism of an odd GKM graph together with its action
/// on classes: (P_c) -> (P_{σ⁻¹(c)} ∘ L), (Q_c) -> (η_c · Q_{σ⁻¹(c)} ∘ L).
struct GraphAutomorphism {
    std::vector<int> circle_perm;   // σ: index -> image index
    std::vector<int> square_perm;   // τ
    std::vector<int> theta_sign;    // η_c ∈ {±1} per circle
    std::vector<QVector> linear;    // row i = image of variable i; empty = identity
};

/// Derives τ from σ by matching incidences and transformed weights.
GraphAutomorphism automorphism_from_circle_perm(const OddGkmGraph& g,
                                                std::vector<int> circle_perm,
                                                std::vector<int> theta_sign,
                                                std::vector<QVector> linear = {});

/// Betti vector of the invariant subalgebra under the cyclic group generated
/// by sigma, via the exact averaging projector. Throws if sigma is not
/// weight/incidence-compatible with the graph.
BettiVector automorphism_invariant_betti(const OddGkmGraph& g, const GraphAutomorphism& sigma);

struct CohomologyReport {
    std::map<int, long long> equivariant_dims;
    BettiVector betti;
    bool formal = false;
    std::optional<bool> orientable;  // even graphs only
};
CohomologyReport cohomology_report(const EvenGkmGraph& g, int max_degree = -1);
CohomologyReport cohomology_report(const OddGkmGraph& g, int max_degree = -1);

}  // namespace gkm

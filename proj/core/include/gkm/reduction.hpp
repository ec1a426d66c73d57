#pragma once

#include "gkm/cohomology.hpp"

#include <variant>

namespace gkm {

/// Result of collapsing an odd GKM graph: circles become vertices, 2-valent
/// squares become edges carrying the square weight, floating squares drop out.
struct ReductionResult {
    EvenGkmGraph graph;  // with inferred GKM_3 connection
    int floating_number = 0;
    std::vector<int> circle_to_vertex;             // by index (identity layout)
    std::map<std::string, std::string> square_to_edge;
};

/// Requires validate_odd(g, 3), square valences <= 2 and a constant floating
/// profile; throws otherwise.
ReductionResult reduce_odd_to_even(const OddGkmGraph& g);

/// The degree-(2k+1) class ω with ω_c = a_c · Π(floating weights at c).
struct OmegaClass {
    int k = 0;
    QVector a;                          // one nonzero scalar per circle
    std::vector<HomogeneousPoly> omega; // realized per-circle polynomials
};

struct OmegaObstruction {
    std::string reason;
    long long solution_dim = 0;
    std::vector<std::string> zero_circles;  // circles forced to a_c = 0
};

/// Solves the linear system over the a_c. Success requires a one-dimensional
/// solution space whose generator has all a_c != 0.
std::variant<OmegaClass, OmegaObstruction> find_omega(const OddGkmGraph& g);

struct SplitDegreeRow {
    int m = 0;
    std::string check;
    long long lhs = 0;
    long long rhs = 0;
    bool ok = false;
};

struct SplittingReport {
    int k = 0;
    int cutoff = 0;
    bool omega_found = false;
    std::optional<OmegaObstruction> obstruction;
    bool gamma_orientable = false;
    long long dim_h_2k1 = 0;  // must be exactly 1 when the splitting holds
    std::vector<SplitDegreeRow> rows;
    BettiVector betti_odd;
    BettiVector betti_gamma;
    SplitDivision corollary;   // betti_odd = betti_gamma ⊗ (1 + t^{2k+1})
    bool verdict = false;
};

/// Degreewise verification of the sphere-splitting statement up to `cutoff`
/// (default 2 · top degree of g): even-part dimension match with the reduced
/// graph, odd vanishing below 2k+1, the dimension shift by 2k+1, injectivity
/// of multiplication by ω, and the ordinary-cohomology factorization.
SplittingReport splitting_check(const OddGkmGraph& g, int cutoff = -1);

}  // namespace gkm

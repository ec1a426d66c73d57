#pragma once

#include "gkm/poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gkm {

/// A weight in t*_Q / {±1}, stored canonically: denominators cleared to a
/// primitive integer vector whose first nonzero entry is positive.
struct ProjectiveWeight {
    std::vector<Integer> rep;

    static ProjectiveWeight from(const QVector& v);  // throws on zero vector
    QVector rational() const;
    bool operator==(const ProjectiveWeight&) const = default;
    auto operator<=>(const ProjectiveWeight&) const = default;
};

/// One orientation of an unoriented edge. `rev == false` runs from -> to.
struct Dart {
    int edge = -1;
    bool rev = false;
    bool operator==(const Dart&) const = default;
    auto operator<=>(const Dart&) const = default;
};

struct EvenEdge {
    std::string id;
    int from = -1;
    int to = -1;
    QVector weight;  // canonical projective rep (unsigned) or the actual
                     // from->to weight vector (signed graphs)
};

/// Connection: for each dart e, a bijection darts(i(e)) -> darts(t(e)).
struct Connection {
    std::map<Dart, std::map<Dart, Dart>> maps;
};

struct EvenGkmGraph {
    int torus_rank = 1;
    bool signed_weights = false;
    std::vector<std::string> vertices;
    std::vector<EvenEdge> edges;  // each unoriented edge listed once
    std::optional<Connection> connection;

    int vertex_index(const std::string& name) const;  // -1 if absent
    std::vector<Dart> darts_at(int v) const;
    int dart_from(const Dart& d) const;
    int dart_to(const Dart& d) const;
    /// weight(ē) = weight(e) for unsigned graphs, -weight(e) for signed ones.
    QVector dart_weight(const Dart& d) const;
    int valence() const;  // valence of the first vertex (0 for empty graph)
};

struct Incidence {
    int circle = -1;
    int sign = 1;                          // ε of the (D3)-type relation
    std::optional<QVector> edge_weight;    // signed decoration, ±class = square weight
};

struct OddSquare {
    std::string id;
    ProjectiveWeight weight;
    std::vector<Incidence> incidences;
};

struct OddGkmGraph {
    int torus_rank = 1;
    std::vector<std::string> circles;
    std::vector<OddSquare> squares;

    int circle_index(const std::string& name) const;  // -1 if absent
    /// Square indices incident to circle c, one entry per incidence.
    std::vector<int> squares_at(int c) const;
    int square_valence(int s) const;
    bool is_floating(int s) const;  // valence 1
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    std::map<std::string, int> floating_counts;  // odd graphs: per circle
    bool valid() const { return violations.empty(); }
};

/// Checks uniform valence, reversal weights, the GKM_k independence condition
/// at every vertex, and (when present) the connection axioms. Structurally
/// malformed graphs (dangling endpoints) throw before any check runs.
ValidationReport validate_even(const EvenGkmGraph& g, int k);

/// Builds the canonical GKM_3 connection by solving
/// alpha(e') = ±alpha(f) + c·alpha(e) for the unique candidate e'.
/// Throws if a candidate is missing or ambiguous. Non-integer constants c
/// pass but are reported through validate_even as warnings.
EvenGkmGraph infer_connection_gkm3(const EvenGkmGraph& g);

ValidationReport validate_odd(const OddGkmGraph& g, int k);

/// The canonical odd connection: for every grounded square s0 and circles
/// c1, c2 incident to it, a bijection between the squares at c1 and at c2.
struct OddConnectionTable {
    /// key (s0, c1, c2) -> square-to-square map
    std::map<std::tuple<int, int, int>, std::map<int, int>> maps;
    std::vector<std::string> warnings;
};
OddConnectionTable infer_odd_connection_gkm3(const OddGkmGraph& g);

struct FloatingProfile {
    std::vector<int> per_circle;
    bool constant = true;
    int common = 0;  // meaningful when constant
};
FloatingProfile floating_profile(const OddGkmGraph& g);

struct AlternatingResult {
    bool alternating = true;
    std::vector<std::string> witnesses;  // ids of squares whose edge weights do not sum to 0
};
/// Requires every incidence to carry a signed edge weight whose ±class equals
/// the square's weight; throws "graph is not signed" otherwise.
AlternatingResult alternating_check(const OddGkmGraph& g);

}  // namespace gkm

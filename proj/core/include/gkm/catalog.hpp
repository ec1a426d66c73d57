#pragma once

#include "gkm/reduction.hpp"

namespace gkm {

// Even model graphs.
EvenGkmGraph make_point();              // 1 vertex, r = 1
EvenGkmGraph make_s2_interval();        // 2 vertices, edge weight (1)
EvenGkmGraph make_s4_lune();            // 2 vertices, edges (1,0), (0,1)
EvenGkmGraph make_cp2_triangle();       // edges (1,0), (0,1), (1,-1)
EvenGkmGraph make_s2xs2_quadrangle();   // 4-cycle, alternating (1,0), (0,1)
EvenGkmGraph make_cube3();              // 3-cube, direction-i edges e_i, r = 3

/// Pads all weights with zeros up to new_rank.
EvenGkmGraph lift_rank(const EvenGkmGraph& g, int new_rank);

/// Odd graph with one 2-valent square per edge of g and no floating squares;
/// incidence signs (+1, -1) in vertex-index order.
OddGkmGraph cross_with_circle(const EvenGkmGraph& g);

/// cross_with_circle plus one floating square per element of w at every
/// circle. Throws if a floating weight is dependent with an incident weight.
OddGkmGraph cross_with_odd_sphere(const EvenGkmGraph& g, const std::vector<QVector>& w);

// Odd model graphs.
OddGkmGraph make_pinwheel(int n);       // 1 circle, floating squares e_1..e_n
OddGkmGraph make_chain();               // interval × odd sphere, k = 1
OddGkmGraph make_lune_odd();
OddGkmGraph make_triangle_odd();
OddGkmGraph make_quadrangle_odd();
OddGkmGraph make_m9();                  // cube3 × odd sphere in rank 4

/// Name-based constructor for the CLI: point, s2_interval, s4_lune,
/// cp2_triangle, s2xs2_quadrangle, cube3, pinwheel(n), chain, lune_odd,
/// triangle_odd, quadrangle_odd, m9. Throws on unknown names.
std::variant<EvenGkmGraph, OddGkmGraph> make_standard(const std::string& name);
std::vector<std::string> catalog_names();

/// Signed decorations used by the signed-layer checks.
EvenGkmGraph with_default_signs(EvenGkmGraph g);
OddGkmGraph with_alternating_signs(OddGkmGraph g);  // (+w, -w) on 2-valent squares

/// The antipodal cube involution on m9 with η ≡ -1 and identity on t*.
GraphAutomorphism m9_antipodal(const OddGkmGraph& m9);
/// The factor-swap involution on quadrangle_odd with η ≡ +1 and coordinate swap.
GraphAutomorphism quadrangle_factor_swap(const OddGkmGraph& quad);

}  // namespace gkm

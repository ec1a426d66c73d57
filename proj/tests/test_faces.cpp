#include "gkm/catalog.hpp"

#include <doctest.h>

using namespace gkm;

namespace {

std::vector<FaceShape> shapes_of(const OddGkmGraph& g) {
    std::vector<FaceShape> out;
    for (const OddFace& f : enumerate_two_faces(g)) out.push_back(classify_face_shape(g, f));
    return out;
}

bool all_shapes(const OddGkmGraph& g, FaceShape expected) {
    const auto shapes = shapes_of(g);
    if (shapes.empty()) return false;
    for (FaceShape s : shapes)
        if (s != expected) return false;
    return true;
}

}  // namespace

TEST_CASE("catalog odd graphs have the advertised face shapes") {
    CHECK(all_shapes(make_pinwheel(2), FaceShape::Pinwheel1));
    CHECK(all_shapes(make_pinwheel(3), FaceShape::Pinwheel1));
    CHECK(all_shapes(make_chain(), FaceShape::Chain2A));
    CHECK(all_shapes(make_lune_odd(), FaceShape::Lune2B));
    CHECK(all_shapes(make_triangle_odd(), FaceShape::Triangle3));
    CHECK(all_shapes(make_quadrangle_odd(), FaceShape::Quadrangle4));
}

TEST_CASE("m9 mixes quadrangle and chain faces") {
    const OddGkmGraph g = make_m9();
    int quadrangles = 0, chains = 0;
    for (FaceShape s : shapes_of(g)) {
        if (s == FaceShape::Quadrangle4) ++quadrangles;
        else if (s == FaceShape::Chain2A) ++chains;
        else FAIL("unexpected face shape");
    }
    CHECK(quadrangles == 6);  // the cube's 2-faces
    CHECK(chains == 12);      // one per cube edge
}

TEST_CASE("span-membership and connection transport extract the same faces") {
    for (const auto* name : {"s4_lune", "cp2_triangle", "s2xs2_quadrangle", "cube3"}) {
        const auto g = std::get<EvenGkmGraph>(make_standard(name));
        CAPTURE(name);
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            const auto darts = g.darts_at(static_cast<int>(v));
            for (std::size_t i = 0; i < darts.size(); ++i)
                for (std::size_t j = i + 1; j < darts.size(); ++j) {
                    if (span_rank({g.dart_weight(darts[i]), g.dart_weight(darts[j])},
                                  static_cast<std::size_t>(g.torus_rank)) != 2)
                        continue;
                    const EvenFace a =
                        extract_two_face(g, static_cast<int>(v), darts[i], darts[j]);
                    const EvenFace b =
                        extract_two_face_transport(g, static_cast<int>(v), darts[i], darts[j]);
                    CHECK(a == b);
                }
        }
    }

    for (const auto* name : {"chain", "lune_odd", "triangle_odd", "quadrangle_odd", "m9"}) {
        const auto g = std::get<OddGkmGraph>(make_standard(name));
        CAPTURE(name);
        const OddConnectionTable table = infer_odd_connection_gkm3(g);
        for (std::size_t c = 0; c < g.circles.size(); ++c) {
            const auto sqs = g.squares_at(static_cast<int>(c));
            for (std::size_t i = 0; i < sqs.size(); ++i)
                for (std::size_t j = i + 1; j < sqs.size(); ++j) {
                    if (span_rank({g.squares[sqs[i]].weight.rational(),
                                   g.squares[sqs[j]].weight.rational()},
                                  static_cast<std::size_t>(g.torus_rank)) != 2)
                        continue;
                    const OddFace a = extract_two_face(g, static_cast<int>(c), sqs[i], sqs[j]);
                    const OddFace b = extract_two_face_transport(g, table, static_cast<int>(c),
                                                                 sqs[i], sqs[j]);
                    CHECK(a == b);
                }
        }
    }
}

TEST_CASE("extract_two_face rejects dependent spanning weights") {
    const EvenGkmGraph g = make_s4_lune();
    const auto darts = g.darts_at(0);
    CHECK_THROWS_AS(extract_two_face(g, 0, darts[0], darts[0]), std::invalid_argument);
}

TEST_CASE("biangles appear exactly on the lune") {
    CHECK_FALSE(detect_biangles(make_s4_lune()).empty());
    CHECK(detect_biangles(make_cp2_triangle()).empty());
    CHECK(detect_biangles(make_s2xs2_quadrangle()).empty());
    CHECK(detect_biangles(make_cube3()).empty());
}

TEST_CASE("curvature gates") {
    SUBCASE("positive accepts exactly the pinwheels") {
        for (int n = 1; n <= 4; ++n)
            CHECK(curvature_gate(make_pinwheel(n), CurvatureMode::Positive).pass);
        for (const auto* name : {"chain", "lune_odd", "triangle_odd", "quadrangle_odd", "m9"}) {
            const auto g = std::get<OddGkmGraph>(make_standard(name));
            CAPTURE(name);
            CHECK_FALSE(curvature_gate(g, CurvatureMode::Positive).pass);
        }
    }
    SUBCASE("nonneg accepts every catalog odd graph") {
        for (const auto* name :
             {"chain", "lune_odd", "triangle_odd", "quadrangle_odd", "m9"}) {
            const auto g = std::get<OddGkmGraph>(make_standard(name));
            CAPTURE(name);
            CHECK(curvature_gate(g, CurvatureMode::NonNegative).pass);
        }
        CHECK(curvature_gate(make_pinwheel(3), CurvatureMode::NonNegative).pass);
    }
    SUBCASE("a 3-valent square fails the nonneg gate") {
        OddGkmGraph g = make_triangle_odd();
        g.squares[0].incidences.push_back(Incidence{2, 1, std::nullopt});
        const GateReport r = curvature_gate(g, CurvatureMode::NonNegative);
        CHECK_FALSE(r.pass);
        CHECK(r.offending_squares == std::vector<std::string>{g.squares[0].id});
    }
}

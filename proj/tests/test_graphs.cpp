#include "gkm/catalog.hpp"

#include <doctest.h>

using namespace gkm;

TEST_CASE("projective weights canonicalize scale and sign") {
    const ProjectiveWeight a = ProjectiveWeight::from({Rational(-2, 3), Rational(4, 3)});
    const ProjectiveWeight b = ProjectiveWeight::from({Rational(1), Rational(-2)});
    CHECK(a == b);
    CHECK(a.rep == std::vector<Integer>{Integer(1), Integer(-2)});
    CHECK_THROWS_AS(ProjectiveWeight::from({Rational(0), Rational(0)}), std::invalid_argument);
}

TEST_CASE("catalog even graphs validate") {
    for (const auto* name : {"point", "s2_interval", "s4_lune", "cp2_triangle",
                             "s2xs2_quadrangle", "cube3"}) {
        const auto g = std::get<EvenGkmGraph>(make_standard(name));
        const ValidationReport r = validate_even(g, 2);
        CAPTURE(name);
        CHECK(r.valid());
    }
}

TEST_CASE("validate_even flags structural problems") {
    EvenGkmGraph g = make_s2_interval();
    g.edges[0].to = 0;  // loop
    CHECK_FALSE(validate_even(g, 2).valid());

    EvenGkmGraph h = make_s4_lune();
    h.edges.push_back(h.edges[0]);
    h.edges.back().id = "extra";
    h.edges.back().to = 0;
    h.edges.back().from = 1;
    // vertex valences still uniform but the duplicate weight breaks GKM_2
    CHECK_FALSE(validate_even(h, 2).valid());

    EvenGkmGraph dangling = make_s2_interval();
    dangling.edges[0].to = 5;
    CHECK_THROWS_AS(validate_even(dangling, 2), std::invalid_argument);
}

TEST_CASE("validate_even catches nonuniform valence") {
    EvenGkmGraph g;
    g.torus_rank = 2;
    g.vertices = {"a", "b", "c"};
    EvenEdge e1{"e1", 0, 1, {Rational(1), Rational(0)}};
    EvenEdge e2{"e2", 0, 2, {Rational(0), Rational(1)}};
    g.edges = {e1, e2};
    const ValidationReport r = validate_even(g, 2);
    CHECK_FALSE(r.valid());
}

TEST_CASE("single-edge graph: the inferred connection is just the reversal") {
    const EvenGkmGraph g = infer_connection_gkm3(make_s2_interval());
    REQUIRE(g.connection.has_value());
    CHECK(g.connection->maps.size() == 2);
    const Dart fwd{0, false};
    const Dart rev{0, true};
    CHECK(g.connection->maps.at(fwd).at(fwd) == rev);
    CHECK(g.connection->maps.at(rev).at(rev) == fwd);
    CHECK(validate_even(g, 2).valid());
}

TEST_CASE("inferred connections pass validation on the even catalog") {
    for (const auto* name : {"s4_lune", "cp2_triangle", "s2xs2_quadrangle", "cube3"}) {
        const auto g = std::get<EvenGkmGraph>(make_standard(name));
        const EvenGkmGraph with = infer_connection_gkm3(g);
        CAPTURE(name);
        CHECK(validate_even(with, 2).valid());
    }
}

TEST_CASE("catalog odd graphs validate and report floating counts") {
    const OddGkmGraph chain = make_chain();
    const ValidationReport r = validate_odd(chain, 3);
    CHECK(r.valid());
    CHECK(r.floating_counts.at("v1") == 1);
    CHECK(r.floating_counts.at("v2") == 1);

    for (const auto* name : {"lune_odd", "triangle_odd", "quadrangle_odd", "m9"}) {
        const auto g = std::get<OddGkmGraph>(make_standard(name));
        CAPTURE(name);
        CHECK(validate_odd(g, 3).valid());
    }
    CHECK(validate_odd(make_pinwheel(3), 3).valid());
}

TEST_CASE("validate_odd flags a disconnected graph") {
    OddGkmGraph g = make_lune_odd();
    g.circles.push_back("stray1");
    g.circles.push_back("stray2");
    OddSquare s;
    s.id = "stray_sq";
    s.weight = ProjectiveWeight::from({Rational(1), Rational(0)});
    s.incidences.push_back(Incidence{2, 1, std::nullopt});
    s.incidences.push_back(Incidence{3, -1, std::nullopt});
    OddSquare s2 = s;
    s2.id = "stray_sq2";
    s2.weight = ProjectiveWeight::from({Rational(0), Rational(1)});
    g.squares.push_back(s);
    g.squares.push_back(s2);
    const ValidationReport r = validate_odd(g, 2);
    CHECK_FALSE(r.valid());
}

TEST_CASE("odd connection transport preserves square valence") {
    for (const auto* name : {"chain", "lune_odd", "triangle_odd", "quadrangle_odd", "m9"}) {
        const auto g = std::get<OddGkmGraph>(make_standard(name));
        CAPTURE(name);
        const OddConnectionTable table = infer_odd_connection_gkm3(g);
        for (const auto& [key, map] : table.maps)
            for (const auto& [s, sp] : map)
                CHECK(g.square_valence(s) == g.square_valence(sp));
    }
}

TEST_CASE("floating profile of the catalog") {
    CHECK(floating_profile(make_chain()).common == 1);
    CHECK(floating_profile(make_m9()).common == 1);
    CHECK(floating_profile(make_pinwheel(3)).common == 3);
    const FloatingProfile quad = floating_profile(make_quadrangle_odd());
    CHECK(quad.constant);
    CHECK(quad.common == 0);
}

TEST_CASE("alternating_check requires a signed graph") {
    CHECK_THROWS_WITH_AS(alternating_check(make_lune_odd()), "graph is not signed",
                         std::invalid_argument);
}

TEST_CASE("alternating_check on decorated graphs") {
    for (const auto* name : {"lune_odd", "triangle_odd", "quadrangle_odd"}) {
        OddGkmGraph g = with_alternating_signs(std::get<OddGkmGraph>(make_standard(name)));
        CAPTURE(name);
        CHECK(alternating_check(g).alternating);
        // flipping one edge sign breaks the balance at exactly that square
        g.squares[0].incidences[0].edge_weight =
            negated(*g.squares[0].incidences[0].edge_weight);
        const AlternatingResult r = alternating_check(g);
        CHECK_FALSE(r.alternating);
        CHECK(r.witnesses == std::vector<std::string>{g.squares[0].id});
    }
    // a floating square cannot balance its single signed edge
    CHECK_FALSE(alternating_check(with_alternating_signs(make_chain())).alternating);
}

TEST_CASE("alternating_check rejects a decoration outside the weight class") {
    OddGkmGraph g = with_alternating_signs(make_lune_odd());
    g.squares[0].incidences[0].edge_weight = QVector{Rational(1), Rational(1)};
    CHECK_THROWS_AS(alternating_check(g), std::invalid_argument);
}

TEST_CASE("with_default_signs finds a signed structure where one exists") {
    for (const auto* name : {"s2_interval", "cp2_triangle", "s2xs2_quadrangle", "cube3"}) {
        const auto g = std::get<EvenGkmGraph>(make_standard(name));
        const EvenGkmGraph s = with_default_signs(g);
        CAPTURE(name);
        CHECK(s.signed_weights);
        REQUIRE(s.connection.has_value());
        CHECK(validate_even(s, 2).valid());
    }
    // the lune has a biangle, which certifies that no sign structure exists
    CHECK_THROWS_AS(with_default_signs(make_s4_lune()), std::runtime_error);
}

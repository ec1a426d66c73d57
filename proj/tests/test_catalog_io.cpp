#include "gkm/catalog.hpp"
#include "gkm/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace gkm;

TEST_CASE("make_standard covers the catalog and rejects unknown names") {
    for (const auto& name : catalog_names()) {
        if (name == "pinwheel(n)") continue;
        CHECK_NOTHROW(make_standard(name));
    }
    CHECK_NOTHROW(make_standard("pinwheel(3)"));
    CHECK_THROWS_AS(make_standard("dodecahedron"), std::invalid_argument);
    CHECK_THROWS_AS(make_standard("pinwheel(0)"), std::invalid_argument);
    CHECK_THROWS_AS(make_standard("pinwheel(x)"), std::invalid_argument);
}

TEST_CASE("JSON round trip is the identity on canonical output") {
    for (const auto& name : catalog_names()) {
        if (name == "pinwheel(n)") continue;
        CAPTURE(name);
        const auto g = make_standard(name);
        const AnyGraph any = std::holds_alternative<EvenGkmGraph>(g)
                                 ? AnyGraph{std::get<EvenGkmGraph>(g)}
                                 : AnyGraph{std::get<OddGkmGraph>(g)};
        const std::string text = graph_to_json(any);
        const AnyGraph parsed = parse_graph(text);
        CHECK(graph_to_json(parsed) == text);
    }
}

TEST_CASE("connections survive serialization") {
    const EvenGkmGraph g = infer_connection_gkm3(make_cp2_triangle());
    const std::string text = graph_to_json(AnyGraph{g});
    const AnyGraph parsed = parse_graph(text);
    REQUIRE(std::holds_alternative<EvenGkmGraph>(parsed));
    const EvenGkmGraph& back = std::get<EvenGkmGraph>(parsed);
    REQUIRE(back.connection.has_value());
    CHECK(validate_even(back, 3).valid());
    CHECK(graph_to_json(parsed) == text);
}

TEST_CASE("schema violations carry a JSON pointer") {
    auto pointer_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const SchemaError& e) {
            return e.pointer;
        }
        return std::string("no error");
    };
    CHECK(pointer_of("{") == "/");
    CHECK(pointer_of("{\"kind\": \"weird\"}") == "/kind");
    CHECK(pointer_of("{\"kind\": \"even\", \"torus_rank\": 0}") == "/torus_rank");
    CHECK(pointer_of(R"({"kind": "even", "torus_rank": 1,
                         "vertices": ["a", "a"], "edges": []})") == "/vertices/1");
    CHECK(pointer_of(R"({"kind": "even", "torus_rank": 2, "vertices": ["a", "b"],
                         "edges": [{"id": "e", "from": "a", "to": "b",
                                    "weight": [1]}]})") == "/edges/0/weight");
    CHECK(pointer_of(R"({"kind": "odd", "torus_rank": 1, "circles": ["c"],
                         "squares": [{"id": "s", "weight": [1],
                                      "incidences": [{"circle": "c", "sign": 2}]}]})") ==
          "/squares/0/incidences/0/sign");
}

TEST_CASE("fractional weights parse and normalize") {
    const std::string text = R"({"kind": "even", "torus_rank": 2,
        "vertices": ["a", "b"],
        "edges": [{"id": "e1", "from": "a", "to": "b", "weight": ["1/2", 0]},
                  {"id": "e2", "from": "a", "to": "b", "weight": [0, "-2/3"]}]})";
    const AnyGraph g = parse_graph(text);
    const EvenGkmGraph& e = std::get<EvenGkmGraph>(g);
    // unsigned weights normalize to primitive representatives
    CHECK(e.edges[0].weight == QVector{Rational(1), Rational(0)});
    CHECK(e.edges[1].weight == QVector{Rational(0), Rational(1)});
}

TEST_CASE("signed graphs keep their weight vectors verbatim") {
    const std::string text = R"({"kind": "even", "torus_rank": 1, "signed": true,
        "vertices": ["a", "b"],
        "edges": [{"id": "e", "from": "a", "to": "b", "weight": [-2]}]})";
    const EvenGkmGraph e = std::get<EvenGkmGraph>(parse_graph(text));
    CHECK(e.signed_weights);
    CHECK(e.edges[0].weight == QVector{Rational(-2)});
    CHECK(e.dart_weight(Dart{0, true}) == QVector{Rational(2)});
}

TEST_CASE("automorphism files load and derive the square map") {
    const OddGkmGraph quad = make_quadrangle_odd();
    const char* path = "test_aut_swap.json";
    {
        std::ofstream out(path);
        out << R"({"circle_map": {"v1": "v1", "v2": "v4", "v3": "v3", "v4": "v2"},
                   "theta_sign": {"v1": 1, "v2": 1, "v3": 1, "v4": 1},
                   "linear": [[0, 1], [1, 0]]})";
    }
    const GraphAutomorphism aut = load_automorphism(path, quad);
    const GraphAutomorphism expected = quadrangle_factor_swap(quad);
    CHECK(aut.circle_perm == expected.circle_perm);
    CHECK(aut.square_perm == expected.square_perm);
    std::remove(path);
}

TEST_CASE("automorphism files reject a wrong square map") {
    const OddGkmGraph lune = make_lune_odd();
    const char* path = "test_aut_bad.json";
    {
        std::ofstream out(path);
        out << R"({"circle_map": {"v1": "v1", "v2": "v2"},
                   "square_map": {"s_e1": "s_e2"}})";
    }
    CHECK_THROWS_AS(load_automorphism(path, lune), SchemaError);
    std::remove(path);
}

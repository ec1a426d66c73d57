#include "gkm/catalog.hpp"

#include <doctest.h>

using namespace gkm;

namespace {

/// Same vertex names and the same (endpoints, weight class) edge multiset.
bool same_shape(const EvenGkmGraph& a, const EvenGkmGraph& b) {
    if (a.torus_rank != b.torus_rank) return false;
    std::vector<std::string> va = a.vertices, vb = b.vertices;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    if (va != vb) return false;
    if (a.edges.size() != b.edges.size()) return false;

    using Key = std::tuple<std::string, std::string, std::vector<Integer>>;
    auto keys = [](const EvenGkmGraph& g) {
        std::vector<Key> out;
        for (const auto& e : g.edges) {
            std::string u = g.vertices[static_cast<std::size_t>(e.from)];
            std::string v = g.vertices[static_cast<std::size_t>(e.to)];
            if (v < u) std::swap(u, v);
            out.emplace_back(u, v, ProjectiveWeight::from(e.weight).rep);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return keys(a) == keys(b);
}

}  // namespace

TEST_CASE("reduction collapses the catalog as expected") {
    SUBCASE("pinwheel -> point") {
        for (int n = 1; n <= 4; ++n) {
            const ReductionResult r = reduce_odd_to_even(make_pinwheel(n));
            CHECK(r.floating_number == n);
            CHECK(r.graph.vertices.size() == 1);
            CHECK(r.graph.edges.empty());
        }
    }
    SUBCASE("chain -> interval") {
        const ReductionResult r = reduce_odd_to_even(make_chain());
        CHECK(r.floating_number == 1);
        CHECK(same_shape(r.graph, lift_rank(make_s2_interval(), 2)));
        CHECK(r.square_to_edge.at("s_e") == "s_e");
    }
    SUBCASE("lune_odd -> lune") {
        const ReductionResult r = reduce_odd_to_even(make_lune_odd());
        CHECK(r.floating_number == 0);
        CHECK(same_shape(r.graph, make_s4_lune()));
    }
    SUBCASE("triangle_odd -> triangle") {
        const ReductionResult r = reduce_odd_to_even(make_triangle_odd());
        CHECK(r.floating_number == 0);
        CHECK(same_shape(r.graph, make_cp2_triangle()));
    }
    SUBCASE("quadrangle_odd -> quadrangle") {
        const ReductionResult r = reduce_odd_to_even(make_quadrangle_odd());
        CHECK(r.floating_number == 0);
        CHECK(same_shape(r.graph, make_s2xs2_quadrangle()));
    }
    SUBCASE("m9 -> cube3") {
        const ReductionResult r = reduce_odd_to_even(make_m9());
        CHECK(r.floating_number == 1);
        CHECK(same_shape(r.graph, lift_rank(make_cube3(), 4)));
    }
}

TEST_CASE("reduced graphs carry a validated connection") {
    for (const auto* name : {"chain", "lune_odd", "triangle_odd", "quadrangle_odd", "m9"}) {
        const auto g = std::get<OddGkmGraph>(make_standard(name));
        CAPTURE(name);
        const ReductionResult r = reduce_odd_to_even(g);
        REQUIRE(r.graph.connection.has_value());
        CHECK(validate_even(r.graph, 3).valid());
    }
}

TEST_CASE("reduction refuses a 3-valent square") {
    OddGkmGraph g = make_triangle_odd();
    g.squares[0].incidences.push_back(Incidence{2, 1, std::nullopt});
    CHECK_THROWS_AS(reduce_odd_to_even(g), std::invalid_argument);
}

TEST_CASE("reduction refuses a non-constant floating profile") {
    OddGkmGraph g = make_chain();
    OddSquare extra;
    extra.id = "f_extra";
    extra.weight = ProjectiveWeight::from({Rational(1), Rational(1)});
    extra.incidences.push_back(Incidence{0, 1, std::nullopt});
    g.squares.push_back(extra);
    CHECK_THROWS_AS(reduce_odd_to_even(g), std::invalid_argument);
}

TEST_CASE("find_omega produces the degree-(2k+1) class") {
    SUBCASE("chain") {
        const auto result = find_omega(make_chain());
        REQUIRE(std::holds_alternative<OmegaClass>(result));
        const OmegaClass& w = std::get<OmegaClass>(result);
        CHECK(w.k == 1);
        CHECK(w.a.size() == 2);
        CHECK(w.a[0] == w.a[1]);
        CHECK(w.a[0] != 0);
        for (const auto& p : w.omega) CHECK(p.degree == 1);
    }
    SUBCASE("quadrangle_odd has the constant class") {
        const auto result = find_omega(make_quadrangle_odd());
        REQUIRE(std::holds_alternative<OmegaClass>(result));
        const OmegaClass& w = std::get<OmegaClass>(result);
        CHECK(w.k == 0);
        for (const auto& x : w.a) CHECK(x == w.a[0]);
    }
    SUBCASE("m9") {
        const auto result = find_omega(make_m9());
        REQUIRE(std::holds_alternative<OmegaClass>(result));
        CHECK(std::get<OmegaClass>(result).k == 1);
    }
    SUBCASE("non-constant floating profile is an obstruction") {
        OddGkmGraph g = make_chain();
        OddSquare extra;
        extra.id = "f_extra";
        extra.weight = ProjectiveWeight::from({Rational(1), Rational(1)});
        extra.incidences.push_back(Incidence{0, 1, std::nullopt});
        g.squares.push_back(extra);
        const auto result = find_omega(g);
        REQUIRE(std::holds_alternative<OmegaObstruction>(result));
        CHECK_FALSE(std::get<OmegaObstruction>(result).reason.empty());
    }
}

TEST_CASE("omega classes satisfy the odd-degree relations") {
    for (const auto* name : {"chain", "lune_odd", "triangle_odd", "quadrangle_odd"}) {
        const auto g = std::get<OddGkmGraph>(make_standard(name));
        CAPTURE(name);
        const auto result = find_omega(g);
        REQUIRE(std::holds_alternative<OmegaClass>(result));
        const OmegaClass& w = std::get<OmegaClass>(result);
        CHECK_NOTHROW(GradedClass::make(g, 2 * w.k + 1, w.omega));
    }
}

TEST_CASE("splitting verification on the five-dimensional catalog") {
    for (const auto* name : {"chain", "lune_odd", "triangle_odd", "quadrangle_odd"}) {
        const auto g = std::get<OddGkmGraph>(make_standard(name));
        CAPTURE(name);
        const SplittingReport r = splitting_check(g);
        CHECK(r.verdict);
        CHECK(r.dim_h_2k1 == 1);
        CHECK(r.gamma_orientable);
        for (const auto& row : r.rows) {
            CAPTURE(row.m);
            CAPTURE(row.check);
            CHECK(row.ok);
        }
        CHECK(r.corollary.divisible);
        CHECK(r.corollary.quotient == r.betti_gamma);
    }
}

TEST_CASE("splitting verification respects a custom cutoff") {
    const SplittingReport r = splitting_check(make_chain(), 6);
    CHECK(r.cutoff == 6);
    CHECK(r.verdict);
}

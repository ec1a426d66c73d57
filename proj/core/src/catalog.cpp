#include "gkm/catalog.hpp"

#include <stdexcept>

namespace gkm {

namespace {

QVector unit(int rank, int i) {
    QVector v(static_cast<std::size_t>(rank), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

EvenEdge edge(std::string id, int from, int to, QVector w) {
    EvenEdge e;
    e.id = std::move(id);
    e.from = from;
    e.to = to;
    e.weight = std::move(w);
    return e;
}

}  // namespace

EvenGkmGraph make_point() {
    EvenGkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"v"};
    return g;
}

EvenGkmGraph make_s2_interval() {
    EvenGkmGraph g;
    g.torus_rank = 1;
    g.vertices = {"v1", "v2"};
    g.edges.push_back(edge("e", 0, 1, unit(1, 0)));
    return g;
}

EvenGkmGraph make_s4_lune() {
    EvenGkmGraph g;
    g.torus_rank = 2;
    g.vertices = {"v1", "v2"};
    g.edges.push_back(edge("e1", 0, 1, unit(2, 0)));
    g.edges.push_back(edge("e2", 0, 1, unit(2, 1)));
    return g;
}

EvenGkmGraph make_cp2_triangle() {
    EvenGkmGraph g;
    g.torus_rank = 2;
    g.vertices = {"v1", "v2", "v3"};
    g.edges.push_back(edge("e12", 0, 1, unit(2, 0)));
    g.edges.push_back(edge("e13", 0, 2, unit(2, 1)));
    g.edges.push_back(edge("e23", 1, 2, QVector{Rational(1), Rational(-1)}));
    return g;
}

EvenGkmGraph make_s2xs2_quadrangle() {
    EvenGkmGraph g;
    g.torus_rank = 2;
    g.vertices = {"v1", "v2", "v3", "v4"};
    g.edges.push_back(edge("e1", 0, 1, unit(2, 0)));
    g.edges.push_back(edge("e2", 1, 2, unit(2, 1)));
    g.edges.push_back(edge("e3", 2, 3, unit(2, 0)));
    g.edges.push_back(edge("e4", 3, 0, unit(2, 1)));
    return g;
}

EvenGkmGraph make_cube3() {
    EvenGkmGraph g;
    g.torus_rank = 3;
    for (int b = 0; b < 8; ++b) {
        std::string name = "v";
        for (int i = 0; i < 3; ++i) name += ((b >> i) & 1) ? '1' : '0';
        g.vertices.push_back(name);
    }
    for (int b = 0; b < 8; ++b) {
        for (int i = 0; i < 3; ++i) {
            if ((b >> i) & 1) continue;
            const int u = b | (1 << i);
            g.edges.push_back(edge("e" + std::to_string(i + 1) + "_" + g.vertices[b], b, u,
                                   unit(3, i)));
        }
    }
    return g;
}

EvenGkmGraph lift_rank(const EvenGkmGraph& g, int new_rank) {
    if (new_rank < g.torus_rank) throw std::invalid_argument("lift_rank: rank would shrink");
    EvenGkmGraph out = g;
    out.torus_rank = new_rank;
    for (auto& e : out.edges) e.weight.resize(static_cast<std::size_t>(new_rank), Rational(0));
    return out;
}

OddGkmGraph cross_with_circle(const EvenGkmGraph& g) {
    OddGkmGraph out;
    out.torus_rank = g.torus_rank;
    out.circles = g.vertices;
    for (const auto& e : g.edges) {
        OddSquare s;
        s.id = "s_" + e.id;
        s.weight = ProjectiveWeight::from(e.weight);
        s.incidences.push_back(Incidence{e.from, 1, std::nullopt});
        s.incidences.push_back(Incidence{e.to, -1, std::nullopt});
        out.squares.push_back(std::move(s));
    }
    return out;
}

OddGkmGraph cross_with_odd_sphere(const EvenGkmGraph& g, const std::vector<QVector>& w) {
    OddGkmGraph out = cross_with_circle(g);
    for (std::size_t c = 0; c < out.circles.size(); ++c) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            OddSquare s;
            s.id = "f" + std::to_string(j + 1) + "_" + out.circles[c];
            s.weight = ProjectiveWeight::from(w[j]);
            s.incidences.push_back(Incidence{static_cast<int>(c), 1, std::nullopt});
            out.squares.push_back(std::move(s));
        }
    }
    const ValidationReport check = validate_odd(out, 2);
    if (!check.valid())
        throw std::invalid_argument("cross_with_odd_sphere: dependent weights: " +
                                    check.violations.front());
    return out;
}

OddGkmGraph make_pinwheel(int n) {
    if (n < 1) throw std::invalid_argument("make_pinwheel: n must be >= 1");
    std::vector<QVector> w;
    for (int i = 0; i < n; ++i) w.push_back(unit(n, i));
    return cross_with_odd_sphere(lift_rank(make_point(), n), w);
}

OddGkmGraph make_chain() {
    return cross_with_odd_sphere(lift_rank(make_s2_interval(), 2), {unit(2, 1)});
}

OddGkmGraph make_lune_odd() { return cross_with_circle(make_s4_lune()); }

OddGkmGraph make_triangle_odd() { return cross_with_circle(make_cp2_triangle()); }

OddGkmGraph make_quadrangle_odd() { return cross_with_circle(make_s2xs2_quadrangle()); }

OddGkmGraph make_m9() {
    return cross_with_odd_sphere(lift_rank(make_cube3(), 4), {unit(4, 3)});
}

std::variant<EvenGkmGraph, OddGkmGraph> make_standard(const std::string& name) {
    if (name == "point") return make_point();
    if (name == "s2_interval") return make_s2_interval();
    if (name == "s4_lune") return make_s4_lune();
    if (name == "cp2_triangle") return make_cp2_triangle();
    if (name == "s2xs2_quadrangle") return make_s2xs2_quadrangle();
    if (name == "cube3") return make_cube3();
    if (name == "chain") return make_chain();
    if (name == "lune_odd") return make_lune_odd();
    if (name == "triangle_odd") return make_triangle_odd();
    if (name == "quadrangle_odd") return make_quadrangle_odd();
    if (name == "m9") return make_m9();
    if (name == "pinwheel") return make_pinwheel(1);
    if (name.rfind("pinwheel(", 0) == 0 && name.back() == ')') {
        const std::string arg = name.substr(9, name.size() - 10);
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(arg, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("make_standard: bad pinwheel argument '" + arg + "'");
        }
        if (used != arg.size() || n < 1)
            throw std::invalid_argument("make_standard: bad pinwheel argument '" + arg + "'");
        return make_pinwheel(n);
    }
    throw std::invalid_argument("make_standard: unknown graph '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"point",          "s2_interval",      "s4_lune", "cp2_triangle",
            "s2xs2_quadrangle", "cube3",          "pinwheel(n)", "chain",
            "lune_odd",       "triangle_odd",     "quadrangle_odd", "m9"};
}

EvenGkmGraph with_default_signs(EvenGkmGraph g) {
    g.signed_weights = true;
    g.connection.reset();
    const std::size_t n = g.edges.size();
    if (n > 20) throw std::invalid_argument("with_default_signs: too many edges to search");
    const std::vector<QVector> original = [&] {
        std::vector<QVector> ws;
        for (const auto& e : g.edges) ws.push_back(e.weight);
        return ws;
    }();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            g.edges[i].weight = ((mask >> i) & 1) ? negated(original[i]) : original[i];
        try {
            EvenGkmGraph candidate = infer_connection_gkm3(g);
            if (validate_even(candidate, 3).valid()) return candidate;
        } catch (const std::exception&) {
            // no connection for this sign choice; keep searching
        }
    }
    throw std::runtime_error("with_default_signs: no consistent sign structure exists");
}

OddGkmGraph with_alternating_signs(OddGkmGraph g) {
    for (auto& s : g.squares) {
        const QVector w = s.weight.rational();
        if (s.incidences.size() == 2) {
            s.incidences[0].edge_weight = w;
            s.incidences[1].edge_weight = negated(w);
        } else {
            for (auto& inc : s.incidences) inc.edge_weight = w;
        }
    }
    return g;
}

GraphAutomorphism m9_antipodal(const OddGkmGraph& m9) {
    std::vector<int> perm(m9.circles.size(), -1);
    for (std::size_t c = 0; c < m9.circles.size(); ++c) {
        std::string flipped = m9.circles[c];
        for (std::size_t i = 1; i < flipped.size(); ++i)
            flipped[i] = (flipped[i] == '0') ? '1' : '0';
        const int target = m9.circle_index(flipped);
        if (target < 0) throw std::invalid_argument("m9_antipodal: unexpected circle names");
        perm[c] = target;
    }
    return automorphism_from_circle_perm(m9, std::move(perm),
                                         std::vector<int>(m9.circles.size(), -1));
}

GraphAutomorphism quadrangle_factor_swap(const OddGkmGraph& quad) {
    const int v1 = quad.circle_index("v1");
    const int v2 = quad.circle_index("v2");
    const int v3 = quad.circle_index("v3");
    const int v4 = quad.circle_index("v4");
    if (v1 < 0 || v2 < 0 || v3 < 0 || v4 < 0)
        throw std::invalid_argument("quadrangle_factor_swap: unexpected circle names");
    std::vector<int> perm(quad.circles.size());
    perm[static_cast<std::size_t>(v1)] = v1;
    perm[static_cast<std::size_t>(v2)] = v4;
    perm[static_cast<std::size_t>(v3)] = v3;
    perm[static_cast<std::size_t>(v4)] = v2;
    std::vector<QVector> swap_xy = {QVector{Rational(0), Rational(1)},
                                    QVector{Rational(1), Rational(0)}};
    return automorphism_from_circle_perm(quad, std::move(perm),
                                         std::vector<int>(quad.circles.size(), 1),
                                         std::move(swap_xy));
}

}  // namespace gkm

#include "gkm/faces.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace gkm {

namespace {

bool in_span(const QVector& a, const QVector& b, const QVector& w, std::size_t rank) {
    return span_rank({a, b, w}, rank) == 2;
}

EvenFace face_from_sets(std::set<int> vertices, std::set<int> edges) {
    EvenFace f;
    f.vertices.assign(vertices.begin(), vertices.end());
    f.edges.assign(edges.begin(), edges.end());
    return f;
}

OddFace face_from_sets_odd(std::set<int> circles, std::set<int> squares) {
    OddFace f;
    f.circles.assign(circles.begin(), circles.end());
    f.squares.assign(squares.begin(), squares.end());
    return f;
}

}  // namespace

std::string to_string(FaceShape s) {
    switch (s) {
        case FaceShape::Pinwheel1: return "pinwheel";
        case FaceShape::Chain2A: return "chain";
        case FaceShape::Lune2B: return "lune";
        case FaceShape::Triangle3: return "triangle";
        case FaceShape::Quadrangle4: return "quadrangle";
        case FaceShape::Other: return "other";
    }
    return "other";
}

EvenFace extract_two_face(const EvenGkmGraph& g, int base, const Dart& a, const Dart& b) {
    const QVector wa = g.dart_weight(a);
    const QVector wb = g.dart_weight(b);
    const std::size_t rank = static_cast<std::size_t>(g.torus_rank);
    if (span_rank({wa, wb}, rank) != 2)
        throw std::invalid_argument("extract_two_face: spanning weights are dependent");

    std::set<int> vertices{base};
    std::set<int> edges;
    std::queue<int> frontier;
    frontier.push(base);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (const Dart& d : g.darts_at(v)) {
            if (!in_span(wa, wb, g.dart_weight(d), rank)) continue;
            edges.insert(d.edge);
            const int u = g.dart_to(d);
            if (vertices.insert(u).second) frontier.push(u);
        }
    }
    return face_from_sets(std::move(vertices), std::move(edges));
}

OddFace extract_two_face(const OddGkmGraph& g, int base_circle, int square_a, int square_b) {
    const QVector wa = g.squares[square_a].weight.rational();
    const QVector wb = g.squares[square_b].weight.rational();
    const std::size_t rank = static_cast<std::size_t>(g.torus_rank);
    if (span_rank({wa, wb}, rank) != 2)
        throw std::invalid_argument("extract_two_face: spanning weights are dependent");

    std::set<int> circles{base_circle};
    std::set<int> squares;
    std::queue<int> frontier;
    frontier.push(base_circle);
    while (!frontier.empty()) {
        const int c = frontier.front();
        frontier.pop();
        for (int s : g.squares_at(c)) {
            if (!in_span(wa, wb, g.squares[s].weight.rational(), rank)) continue;
            squares.insert(s);
            for (const auto& inc : g.squares[s].incidences)
                if (circles.insert(inc.circle).second) frontier.push(inc.circle);
        }
    }
    return face_from_sets_odd(std::move(circles), std::move(squares));
}

EvenFace extract_two_face_transport(const EvenGkmGraph& g, int base, const Dart& a,
                                    const Dart& b) {
    const EvenGkmGraph* graph = &g;
    EvenGkmGraph with_conn;
    if (!g.connection) {
        with_conn = infer_connection_gkm3(g);
        graph = &with_conn;
    }
    const Connection& conn = *graph->connection;

    std::map<int, std::pair<Dart, Dart>> state;  // vertex -> the two face darts
    state.emplace(base, std::make_pair(a, b));
    std::set<int> edges;
    std::queue<int> frontier;
    frontier.push(base);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        const auto [da, db] = state.at(v);
        for (const Dart& d : {da, db}) {
            edges.insert(d.edge);
            const int u = graph->dart_to(d);
            if (state.count(u)) continue;
            const auto& map = conn.maps.at(d);
            state.emplace(u, std::make_pair(map.at(da), map.at(db)));
            frontier.push(u);
        }
    }
    std::set<int> vertices;
    for (const auto& [v, darts] : state) vertices.insert(v);
    return face_from_sets(std::move(vertices), std::move(edges));
}

OddFace extract_two_face_transport(const OddGkmGraph& g, const OddConnectionTable& table,
                                   int base_circle, int square_a, int square_b) {
    std::map<int, std::pair<int, int>> state;  // circle -> the two face squares
    state.emplace(base_circle, std::make_pair(square_a, square_b));
    std::set<int> squares{square_a, square_b};
    std::queue<int> frontier;
    frontier.push(base_circle);
    while (!frontier.empty()) {
        const int c = frontier.front();
        frontier.pop();
        const auto [sa, sb] = state.at(c);
        for (const auto& [lead, other] : {std::pair{sa, sb}, std::pair{sb, sa}}) {
            if (g.is_floating(lead)) continue;
            for (const auto& inc : g.squares[lead].incidences) {
                const int c2 = inc.circle;
                if (c2 == c || state.count(c2)) continue;
                const auto& map = table.maps.at({lead, c, c2});
                const int mapped = map.at(other);
                state.emplace(c2, std::make_pair(lead, mapped));
                squares.insert(mapped);
                frontier.push(c2);
            }
        }
    }
    std::set<int> circles;
    for (const auto& [c, pair] : state) circles.insert(c);
    return face_from_sets_odd(std::move(circles), std::move(squares));
}

FaceShape classify_face_shape(const OddGkmGraph& g, const OddFace& face) {
    const std::set<int> face_circles(face.circles.begin(), face.circles.end());
    int val1 = 0, val2 = 0;
    for (int s : face.squares) {
        int in_face = 0;
        for (const auto& inc : g.squares[s].incidences)
            if (face_circles.count(inc.circle)) ++in_face;
        if (in_face == 1) ++val1;
        else if (in_face == 2) ++val2;
        else return FaceShape::Other;
    }
    const int circles = static_cast<int>(face.circles.size());
    if (circles == 1 && val1 == 2 && val2 == 0) return FaceShape::Pinwheel1;
    if (circles == 2 && val1 == 2 && val2 == 1) return FaceShape::Chain2A;
    if (circles == 2 && val1 == 0 && val2 == 2) return FaceShape::Lune2B;
    if (circles == 3 && val1 == 0 && val2 == 3) return FaceShape::Triangle3;
    if (circles == 4 && val1 == 0 && val2 == 4) return FaceShape::Quadrangle4;
    return FaceShape::Other;
}

std::vector<OddFace> enumerate_two_faces(const OddGkmGraph& g) {
    const std::size_t rank = static_cast<std::size_t>(g.torus_rank);
    std::vector<OddFace> faces;
    for (std::size_t c = 0; c < g.circles.size(); ++c) {
        const auto sqs = g.squares_at(static_cast<int>(c));
        for (std::size_t i = 0; i < sqs.size(); ++i) {
            for (std::size_t j = i + 1; j < sqs.size(); ++j) {
                if (span_rank({g.squares[sqs[i]].weight.rational(),
                               g.squares[sqs[j]].weight.rational()}, rank) != 2)
                    continue;
                OddFace f = extract_two_face(g, static_cast<int>(c), sqs[i], sqs[j]);
                if (std::find(faces.begin(), faces.end(), f) == faces.end())
                    faces.push_back(std::move(f));
            }
        }
    }
    return faces;
}

std::vector<EvenFace> enumerate_two_faces(const EvenGkmGraph& g) {
    const std::size_t rank = static_cast<std::size_t>(g.torus_rank);
    std::vector<EvenFace> faces;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto darts = g.darts_at(static_cast<int>(v));
        for (std::size_t i = 0; i < darts.size(); ++i) {
            for (std::size_t j = i + 1; j < darts.size(); ++j) {
                if (span_rank({g.dart_weight(darts[i]), g.dart_weight(darts[j])}, rank) != 2)
                    continue;
                EvenFace f = extract_two_face(g, static_cast<int>(v), darts[i], darts[j]);
                if (std::find(faces.begin(), faces.end(), f) == faces.end())
                    faces.push_back(std::move(f));
            }
        }
    }
    return faces;
}

GateReport curvature_gate(const OddGkmGraph& g, CurvatureMode mode) {
    GateReport report;
    const int max_valence = (mode == CurvatureMode::Positive) ? 1 : 2;
    for (std::size_t s = 0; s < g.squares.size(); ++s)
        if (g.square_valence(static_cast<int>(s)) > max_valence)
            report.offending_squares.push_back(g.squares[s].id);

    if (mode == CurvatureMode::NonNegative) {
        for (const OddFace& f : enumerate_two_faces(g)) {
            if (classify_face_shape(g, f) != FaceShape::Other) continue;
            std::string desc = "{";
            for (std::size_t i = 0; i < f.squares.size(); ++i)
                desc += (i ? "," : "") + g.squares[f.squares[i]].id;
            report.offending_faces.push_back(desc + "}");
        }
    }
    report.pass = report.offending_squares.empty() && report.offending_faces.empty();
    return report;
}

std::vector<EvenFace> detect_biangles(const EvenGkmGraph& g) {
    std::vector<EvenFace> out;
    for (const EvenFace& f : enumerate_two_faces(g))
        if (f.vertices.size() == 2) out.push_back(f);
    return out;
}

}  // namespace gkm

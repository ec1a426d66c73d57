#include "gkm/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gkm {

namespace {

Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Solves w' = s·f + c·e with s ∈ {±1}, c ∈ Q. Returns (s, c) or nothing.
std::optional<std::pair<int, Rational>> solve_slide(const QVector& w_prime,
                                                    const QVector& f,
                                                    const QVector& e) {
    for (int s : {1, -1}) {
        QVector diff(w_prime.size());
        for (std::size_t i = 0; i < diff.size(); ++i)
            diff[i] = w_prime[i] - Rational(s) * f[i];
        if (is_zero(diff)) return std::make_pair(s, Rational(0));

        // diff must be parallel to e.
        std::size_t p = 0;
        while (p < e.size() && e[p] == 0) ++p;
        if (p == e.size()) continue;  // e = 0 cannot absorb a nonzero diff
        const Rational c = diff[p] / e[p];
        bool ok = true;
        for (std::size_t i = 0; i < diff.size(); ++i)
            if (diff[i] != c * e[i]) { ok = false; break; }
        if (ok) return std::make_pair(s, c);
    }
    return std::nullopt;
}

bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// Enumerates all k-subsets of [0, n) into `out`.
void k_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> pick;
    // iterative combination walk
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n || k <= 0) return;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool weights_independent(const std::vector<QVector>& ws, int rank) {
    return span_rank(ws, static_cast<std::size_t>(rank)) == ws.size();
}

}  // namespace

ProjectiveWeight ProjectiveWeight::from(const QVector& v) {
    if (is_zero(v)) throw std::invalid_argument("zero weight");
    Integer lcm = 1;
    for (const auto& x : v) {
        const Integer den = boost::multiprecision::denominator(x);
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Rational scaled = v[i] * Rational(lcm);
        ints[i] = boost::multiprecision::numerator(scaled);
        g = gcd(g, ints[i]);
    }
    for (auto& x : ints) x /= g;
    for (const auto& x : ints) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : ints) y = -y;
        break;
    }
    ProjectiveWeight w;
    w.rep = std::move(ints);
    return w;
}

QVector ProjectiveWeight::rational() const {
    QVector out(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) out[i] = Rational(rep[i]);
    return out;
}

int EvenGkmGraph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<Dart> EvenGkmGraph::darts_at(int v) const {
    std::vector<Dart> out;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].from == v) out.push_back(Dart{static_cast<int>(e), false});
        if (edges[e].to == v) out.push_back(Dart{static_cast<int>(e), true});
    }
    return out;
}

int EvenGkmGraph::dart_from(const Dart& d) const {
    return d.rev ? edges[d.edge].to : edges[d.edge].from;
}

int EvenGkmGraph::dart_to(const Dart& d) const {
    return d.rev ? edges[d.edge].from : edges[d.edge].to;
}

QVector EvenGkmGraph::dart_weight(const Dart& d) const {
    const QVector& w = edges[d.edge].weight;
    if (signed_weights && d.rev) return negated(w);
    return w;
}

int EvenGkmGraph::valence() const {
    if (vertices.empty()) return 0;
    return static_cast<int>(darts_at(0).size());
}

int OddGkmGraph::circle_index(const std::string& name) const {
    for (std::size_t i = 0; i < circles.size(); ++i)
        if (circles[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> OddGkmGraph::squares_at(int c) const {
    std::vector<int> out;
    for (std::size_t s = 0; s < squares.size(); ++s)
        for (const auto& inc : squares[s].incidences)
            if (inc.circle == c) out.push_back(static_cast<int>(s));
    return out;
}

int OddGkmGraph::square_valence(int s) const {
    return static_cast<int>(squares[s].incidences.size());
}

bool OddGkmGraph::is_floating(int s) const { return square_valence(s) == 1; }

ValidationReport validate_even(const EvenGkmGraph& g, int k) {
    if (k < 2) throw std::invalid_argument("validate_even: k must be >= 2");
    const int n_vertices = static_cast<int>(g.vertices.size());
    for (const auto& e : g.edges) {
        if (e.from < 0 || e.from >= n_vertices || e.to < 0 || e.to >= n_vertices)
            throw std::invalid_argument("dangling edge endpoint on edge '" + e.id + "'");
        if (static_cast<int>(e.weight.size()) != g.torus_rank)
            throw std::invalid_argument("weight length mismatch on edge '" + e.id + "'");
    }

    ValidationReport report;
    for (const auto& e : g.edges) {
        if (e.from == e.to)
            report.violations.push_back("edge '" + e.id + "' connects a vertex to itself");
        if (is_zero(e.weight))
            report.violations.push_back("edge '" + e.id + "' carries the zero weight");
    }

    // Uniform valence.
    int valence = -1;
    for (int v = 0; v < n_vertices; ++v) {
        const int d = static_cast<int>(g.darts_at(v).size());
        if (valence < 0) valence = d;
        else if (d != valence)
            report.violations.push_back("vertex '" + g.vertices[v] + "' has valence " +
                                        std::to_string(d) + ", expected " + std::to_string(valence));
    }

    // GKM_k independence at every vertex.
    for (int v = 0; v < n_vertices; ++v) {
        const auto darts = g.darts_at(v);
        std::vector<std::vector<int>> subsets;
        k_subsets(static_cast<int>(darts.size()), k, subsets);
        for (const auto& subset : subsets) {
            std::vector<QVector> ws;
            std::string names;
            for (int i : subset) {
                ws.push_back(g.dart_weight(darts[i]));
                names += (names.empty() ? "" : ",") + g.edges[darts[i].edge].id;
            }
            if (!weights_independent(ws, g.torus_rank))
                report.violations.push_back("dependent " + std::to_string(k) +
                                            "-subset {" + names + "} at vertex '" +
                                            g.vertices[v] + "'");
        }
    }

    if (g.connection) {
        const Connection& conn = *g.connection;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            for (bool rev : {false, true}) {
                const Dart d{static_cast<int>(e), rev};
                const Dart dbar{static_cast<int>(e), !rev};
                auto it = conn.maps.find(d);
                if (it == conn.maps.end()) {
                    report.violations.push_back("connection missing for edge '" +
                                                g.edges[e].id + "'");
                    continue;
                }
                const auto& map = it->second;
                const auto tail_darts = g.darts_at(g.dart_from(d));

                // nabla_e(e) = ebar
                auto self = map.find(d);
                if (self == map.end() || !(self->second == dbar))
                    report.violations.push_back("connection along '" + g.edges[e].id +
                                                "' does not send the edge to its reversal");

                std::set<Dart> images;
                for (const Dart& f : tail_darts) {
                    auto fit = map.find(f);
                    if (fit == map.end()) {
                        report.violations.push_back("connection along '" + g.edges[e].id +
                                                    "' undefined on edge '" +
                                                    g.edges[f.edge].id + "'");
                        continue;
                    }
                    const Dart fp = fit->second;
                    images.insert(fp);
                    if (g.dart_from(fp) != g.dart_to(d))
                        report.violations.push_back("connection along '" + g.edges[e].id +
                                                    "' maps outside the head vertex");
                    // nabla_ebar = nabla_e^{-1}
                    auto rit = conn.maps.find(dbar);
                    if (rit != conn.maps.end()) {
                        auto back = rit->second.find(fp);
                        if (back == rit->second.end() || !(back->second == f))
                            report.violations.push_back("connection along '" + g.edges[e].id +
                                                        "' is not inverted by its reversal");
                    }
                    if (f == d) continue;
                    auto sc = solve_slide(g.dart_weight(fp), g.dart_weight(f), g.dart_weight(d));
                    if (!sc) {
                        report.violations.push_back(
                            "no slide relation along '" + g.edges[e].id + "' for edge '" +
                            g.edges[f.edge].id + "'");
                        continue;
                    }
                    if (g.signed_weights && sc->first != 1)
                        report.violations.push_back("signed graph requires the + branch along '" +
                                                    g.edges[e].id + "' for edge '" +
                                                    g.edges[f.edge].id + "'");
                    if (!is_integer(sc->second))
                        report.warnings.push_back("non-integer connection constant " +
                                                  format_rational(sc->second) + " along '" +
                                                  g.edges[e].id + "' for edge '" +
                                                  g.edges[f.edge].id + "'");
                }
                if (images.size() != tail_darts.size())
                    report.violations.push_back("connection along '" + g.edges[e].id +
                                                "' is not a bijection");
            }
        }
    }
    return report;
}

EvenGkmGraph infer_connection_gkm3(const EvenGkmGraph& g) {
    {
        EvenGkmGraph bare = g;
        bare.connection.reset();
        const ValidationReport pre = validate_even(bare, 3);
        if (!pre.valid())
            throw std::invalid_argument("infer_connection_gkm3: graph is not GKM_3-valid: " +
                                        pre.violations.front());
    }

    EvenGkmGraph out = g;
    Connection conn;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        for (bool rev : {false, true}) {
            const Dart d{static_cast<int>(e), rev};
            const Dart dbar{static_cast<int>(e), !rev};
            const QVector we = g.dart_weight(d);
            std::map<Dart, Dart> map;
            map[d] = dbar;
            const auto head_darts = g.darts_at(g.dart_to(d));
            for (const Dart& f : g.darts_at(g.dart_from(d))) {
                if (f == d) continue;
                const QVector wf = g.dart_weight(f);
                std::vector<Dart> candidates;
                for (const Dart& c : head_darts) {
                    if (c == dbar) continue;
                    if (solve_slide(g.dart_weight(c), wf, we)) candidates.push_back(c);
                }
                if (candidates.size() != 1)
                    throw std::runtime_error(
                        "connection not well-defined for edges ('" + g.edges[e].id + "', '" +
                        g.edges[f.edge].id + "'): " + std::to_string(candidates.size()) +
                        " candidates");
                map[f] = candidates.front();
            }
            std::set<Dart> images;
            for (const auto& [from, to] : map) images.insert(to);
            if (images.size() != map.size())
                throw std::runtime_error("connection not well-defined along edge '" +
                                         g.edges[e].id + "': images collide");
            conn.maps[d] = std::move(map);
        }
    }
    out.connection = std::move(conn);
    return out;
}

ValidationReport validate_odd(const OddGkmGraph& g, int k) {
    if (k < 2) throw std::invalid_argument("validate_odd: k must be >= 2");
    const int n_circles = static_cast<int>(g.circles.size());
    for (const auto& s : g.squares) {
        if (static_cast<int>(s.weight.rep.size()) != g.torus_rank)
            throw std::invalid_argument("weight length mismatch on square '" + s.id + "'");
        for (const auto& inc : s.incidences) {
            if (inc.circle < 0 || inc.circle >= n_circles)
                throw std::invalid_argument("malformed incidence on square '" + s.id + "'");
            if (inc.sign != 1 && inc.sign != -1)
                throw std::invalid_argument("incidence sign must be ±1 on square '" + s.id + "'");
        }
    }

    ValidationReport report;
    for (const auto& s : g.squares)
        if (s.incidences.empty())
            report.violations.push_back("square '" + s.id + "' has no incidences");

    int valence = -1;
    for (int c = 0; c < n_circles; ++c) {
        const int d = static_cast<int>(g.squares_at(c).size());
        if (valence < 0) valence = d;
        else if (d != valence)
            report.violations.push_back("circle '" + g.circles[c] + "' has valence " +
                                        std::to_string(d) + ", expected " + std::to_string(valence));
    }

    for (int c = 0; c < n_circles; ++c) {
        const auto sqs = g.squares_at(c);
        std::vector<std::vector<int>> subsets;
        k_subsets(static_cast<int>(sqs.size()), k, subsets);
        for (const auto& subset : subsets) {
            std::vector<QVector> ws;
            std::string names;
            for (int i : subset) {
                ws.push_back(g.squares[sqs[i]].weight.rational());
                names += (names.empty() ? "" : ",") + g.squares[sqs[i]].id;
            }
            if (!weights_independent(ws, g.torus_rank))
                report.violations.push_back("dependent " + std::to_string(k) +
                                            "-subset {" + names + "} at circle '" +
                                            g.circles[c] + "'");
        }
    }

    // Connectivity over circles through shared squares.
    if (n_circles > 1) {
        std::vector<bool> seen(n_circles, false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            for (int s : g.squares_at(c))
                for (const auto& inc : g.squares[s].incidences)
                    if (!seen[inc.circle]) {
                        seen[inc.circle] = true;
                        stack.push_back(inc.circle);
                    }
        }
        for (int c = 0; c < n_circles; ++c)
            if (!seen[c]) {
                report.violations.push_back("graph is not connected (circle '" +
                                            g.circles[c] + "' unreachable)");
                break;
            }
    }

    const FloatingProfile profile = floating_profile(g);
    for (int c = 0; c < n_circles; ++c)
        report.floating_counts[g.circles[c]] = profile.per_circle[c];
    return report;
}

OddConnectionTable infer_odd_connection_gkm3(const OddGkmGraph& g) {
    {
        const ValidationReport pre = validate_odd(g, 3);
        if (!pre.valid())
            throw std::invalid_argument("infer_odd_connection_gkm3: graph is not GKM_3-valid: " +
                                        pre.violations.front());
    }

    OddConnectionTable table;
    for (std::size_t s0 = 0; s0 < g.squares.size(); ++s0) {
        std::set<int> circles;
        for (const auto& inc : g.squares[s0].incidences) circles.insert(inc.circle);
        if (circles.size() < 2) continue;
        const QVector w0 = g.squares[s0].weight.rational();
        for (int c1 : circles) {
            for (int c2 : circles) {
                if (c1 == c2) continue;
                std::map<int, int> map;
                map[static_cast<int>(s0)] = static_cast<int>(s0);
                for (int s : g.squares_at(c1)) {
                    if (s == static_cast<int>(s0)) continue;
                    const QVector ws = g.squares[s].weight.rational();
                    std::vector<int> candidates;
                    for (int sp : g.squares_at(c2)) {
                        if (sp == static_cast<int>(s0)) continue;
                        auto sc = solve_slide(g.squares[sp].weight.rational(), ws, w0);
                        if (sc) {
                            candidates.push_back(sp);
                            if (!is_integer(sc->second))
                                table.warnings.push_back(
                                    "non-integer constant " + format_rational(sc->second) +
                                    " transporting '" + g.squares[s].id + "' across '" +
                                    g.squares[s0].id + "'");
                        }
                    }
                    std::sort(candidates.begin(), candidates.end());
                    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                                     candidates.end());
                    if (candidates.size() != 1)
                        throw std::runtime_error(
                            "odd connection not well-defined for (circle '" + g.circles[c1] +
                            "', circle '" + g.circles[c2] + "', square '" + g.squares[s0].id +
                            "', square '" + g.squares[s].id + "'): " +
                            std::to_string(candidates.size()) + " candidates");
                    map[s] = candidates.front();
                }
                table.maps[{static_cast<int>(s0), c1, c2}] = std::move(map);
            }
        }
    }

    // Property (2): the opposite transport inverts.
    for (const auto& [key, map] : table.maps) {
        const auto& [s0, c1, c2] = key;
        const auto& back = table.maps.at({s0, c2, c1});
        for (const auto& [s, sp] : map)
            if (back.at(sp) != s)
                throw std::runtime_error("odd connection transport across '" +
                                         g.squares[s0].id + "' is not invertible");
    }
    return table;
}

FloatingProfile floating_profile(const OddGkmGraph& g) {
    FloatingProfile profile;
    profile.per_circle.resize(g.circles.size(), 0);
    for (std::size_t c = 0; c < g.circles.size(); ++c)
        for (int s : g.squares_at(static_cast<int>(c)))
            if (g.is_floating(s)) ++profile.per_circle[c];
    if (!profile.per_circle.empty()) {
        profile.common = profile.per_circle.front();
        for (int k : profile.per_circle)
            if (k != profile.common) { profile.constant = false; break; }
    }
    return profile;
}

AlternatingResult alternating_check(const OddGkmGraph& g) {
    for (const auto& s : g.squares)
        for (const auto& inc : s.incidences) {
            if (!inc.edge_weight)
                throw std::invalid_argument("graph is not signed");
            if (!(ProjectiveWeight::from(*inc.edge_weight) == s.weight))
                throw std::invalid_argument("signed edge weight on square '" + s.id +
                                            "' is not in the square's weight class");
        }

    AlternatingResult result;
    for (const auto& s : g.squares) {
        QVector sum(g.torus_rank, Rational(0));
        for (const auto& inc : s.incidences)
            for (int i = 0; i < g.torus_rank; ++i) sum[i] += (*inc.edge_weight)[i];
        if (!is_zero(sum)) {
            result.alternating = false;
            result.witnesses.push_back(s.id);
        }
    }
    return result;
}

}  // namespace gkm

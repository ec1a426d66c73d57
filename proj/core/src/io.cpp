#include "gkm/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gkm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational rational_at(const json& j, const std::string& ptr) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw SchemaError(ptr, e.what());
        }
    }
    throw SchemaError(ptr, "expected an integer or a 'p/q' string");
}

QVector vector_at(const json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) throw SchemaError(ptr, "expected a non-empty array");
    QVector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rational_at(j[i], ptr + "/" + std::to_string(i)));
    return v;
}

std::string string_at(const json& parent, const char* key, const std::string& ptr) {
    auto it = parent.find(key);
    if (it == parent.end() || !it->is_string())
        throw SchemaError(ptr + "/" + key, "expected a string");
    return it->get<std::string>();
}

json rational_out(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1 && num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
        return static_cast<long long>(num);
    return format_rational(q);
}

json vector_out(const QVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_out(x));
    return out;
}

std::string dart_id(const EvenGkmGraph& g, const Dart& d) {
    return (d.rev ? "~" : "") + g.edges[static_cast<std::size_t>(d.edge)].id;
}

Dart dart_from_id(const EvenGkmGraph& g, const std::string& id, const std::string& ptr) {
    Dart d;
    std::string name = id;
    if (!name.empty() && name.front() == '~') {
        d.rev = true;
        name = name.substr(1);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (g.edges[e].id == name) {
            d.edge = static_cast<int>(e);
            return d;
        }
    throw SchemaError(ptr, "unknown edge '" + name + "'");
}

EvenGkmGraph parse_even(const json& j) {
    EvenGkmGraph g;
    if (!j.contains("torus_rank") || !j["torus_rank"].is_number_integer())
        throw SchemaError("/torus_rank", "expected an integer");
    g.torus_rank = j["torus_rank"].get<int>();
    if (g.torus_rank < 1) throw SchemaError("/torus_rank", "must be >= 1");
    g.signed_weights = j.value("signed", false);

    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw SchemaError("/vertices", "expected an array");
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& v = j["vertices"][i];
        if (!v.is_string()) throw SchemaError("/vertices/" + std::to_string(i), "expected a string");
        if (g.vertex_index(v.get<std::string>()) >= 0)
            throw SchemaError("/vertices/" + std::to_string(i), "duplicate vertex name");
        g.vertices.push_back(v.get<std::string>());
    }

    if (!j.contains("edges") || !j["edges"].is_array())
        throw SchemaError("/edges", "expected an array");
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const std::string ptr = "/edges/" + std::to_string(i);
        const auto& je = j["edges"][i];
        if (!je.is_object()) throw SchemaError(ptr, "expected an object");
        EvenEdge e;
        e.id = string_at(je, "id", ptr);
        e.from = g.vertex_index(string_at(je, "from", ptr));
        e.to = g.vertex_index(string_at(je, "to", ptr));
        if (e.from < 0) throw SchemaError(ptr + "/from", "unknown vertex");
        if (e.to < 0) throw SchemaError(ptr + "/to", "unknown vertex");
        if (!je.contains("weight")) throw SchemaError(ptr + "/weight", "missing");
        e.weight = vector_at(je["weight"], ptr + "/weight");
        if (e.weight.size() != static_cast<std::size_t>(g.torus_rank))
            throw SchemaError(ptr + "/weight", "length must equal torus_rank");
        if (!g.signed_weights) {
            if (is_zero(e.weight)) throw SchemaError(ptr + "/weight", "zero weight");
            e.weight = ProjectiveWeight::from(e.weight).rational();
        }
        for (const auto& other : g.edges)
            if (other.id == e.id) throw SchemaError(ptr + "/id", "duplicate edge id");
        g.edges.push_back(std::move(e));
    }

    if (j.contains("connection")) {
        if (!j["connection"].is_array()) throw SchemaError("/connection", "expected an array");
        Connection conn;
        for (std::size_t i = 0; i < j["connection"].size(); ++i) {
            const std::string ptr = "/connection/" + std::to_string(i);
            const auto& jc = j["connection"][i];
            if (!jc.is_object() || !jc.contains("along") || !jc.contains("maps"))
                throw SchemaError(ptr, "expected {along, maps}");
            const Dart along = dart_from_id(g, string_at(jc, "along", ptr), ptr + "/along");
            if (!jc["maps"].is_object()) throw SchemaError(ptr + "/maps", "expected an object");
            std::map<Dart, Dart> map;
            for (const auto& [key, value] : jc["maps"].items()) {
                if (!value.is_string()) throw SchemaError(ptr + "/maps", "expected string values");
                map[dart_from_id(g, key, ptr + "/maps")] =
                    dart_from_id(g, value.get<std::string>(), ptr + "/maps");
            }
            conn.maps[along] = std::move(map);
        }
        g.connection = std::move(conn);
    }
    return g;
}

OddGkmGraph parse_odd(const json& j) {
    OddGkmGraph g;
    if (!j.contains("torus_rank") || !j["torus_rank"].is_number_integer())
        throw SchemaError("/torus_rank", "expected an integer");
    g.torus_rank = j["torus_rank"].get<int>();
    if (g.torus_rank < 1) throw SchemaError("/torus_rank", "must be >= 1");

    if (!j.contains("circles") || !j["circles"].is_array())
        throw SchemaError("/circles", "expected an array");
    for (std::size_t i = 0; i < j["circles"].size(); ++i) {
        const auto& c = j["circles"][i];
        if (!c.is_string()) throw SchemaError("/circles/" + std::to_string(i), "expected a string");
        if (g.circle_index(c.get<std::string>()) >= 0)
            throw SchemaError("/circles/" + std::to_string(i), "duplicate circle name");
        g.circles.push_back(c.get<std::string>());
    }

    if (!j.contains("squares") || !j["squares"].is_array())
        throw SchemaError("/squares", "expected an array");
    for (std::size_t i = 0; i < j["squares"].size(); ++i) {
        const std::string ptr = "/squares/" + std::to_string(i);
        const auto& js = j["squares"][i];
        if (!js.is_object()) throw SchemaError(ptr, "expected an object");
        OddSquare s;
        s.id = string_at(js, "id", ptr);
        if (!js.contains("weight")) throw SchemaError(ptr + "/weight", "missing");
        const QVector w = vector_at(js["weight"], ptr + "/weight");
        if (w.size() != static_cast<std::size_t>(g.torus_rank))
            throw SchemaError(ptr + "/weight", "length must equal torus_rank");
        if (is_zero(w)) throw SchemaError(ptr + "/weight", "zero weight");
        s.weight = ProjectiveWeight::from(w);

        if (!js.contains("incidences") || !js["incidences"].is_array())
            throw SchemaError(ptr + "/incidences", "expected an array");
        for (std::size_t t = 0; t < js["incidences"].size(); ++t) {
            const std::string iptr = ptr + "/incidences/" + std::to_string(t);
            const auto& ji = js["incidences"][t];
            if (!ji.is_object()) throw SchemaError(iptr, "expected an object");
            Incidence inc;
            inc.circle = g.circle_index(string_at(ji, "circle", iptr));
            if (inc.circle < 0) throw SchemaError(iptr + "/circle", "unknown circle");
            if (!ji.contains("sign") || !ji["sign"].is_number_integer())
                throw SchemaError(iptr + "/sign", "expected ±1");
            inc.sign = ji["sign"].get<int>();
            if (inc.sign != 1 && inc.sign != -1) throw SchemaError(iptr + "/sign", "expected ±1");
            if (ji.contains("edge_weight")) {
                inc.edge_weight = vector_at(ji["edge_weight"], iptr + "/edge_weight");
                if (inc.edge_weight->size() != static_cast<std::size_t>(g.torus_rank))
                    throw SchemaError(iptr + "/edge_weight", "length must equal torus_rank");
            }
            s.incidences.push_back(std::move(inc));
        }
        for (const auto& other : g.squares)
            if (other.id == s.id) throw SchemaError(ptr + "/id", "duplicate square id");
        g.squares.push_back(std::move(s));
    }
    return g;
}

}  // namespace

AnyGraph parse_graph(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError("/", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("/", "expected an object");
    const auto kind = j.find("kind");
    if (kind == j.end() || !kind->is_string())
        throw SchemaError("/kind", "expected \"even\" or \"odd\"");
    if (*kind == "even") return parse_even(j);
    if (*kind == "odd") return parse_odd(j);
    throw SchemaError("/kind", "expected \"even\" or \"odd\"");
}

AnyGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string graph_to_json(const AnyGraph& g, const std::string& meta_name,
                          const std::string& meta_description) {
    ordered_json j;
    if (!meta_name.empty() || !meta_description.empty()) {
        ordered_json meta;
        if (!meta_name.empty()) meta["name"] = meta_name;
        if (!meta_description.empty()) meta["description"] = meta_description;
        j["meta"] = meta;
    }

    if (std::holds_alternative<EvenGkmGraph>(g)) {
        const EvenGkmGraph& e = std::get<EvenGkmGraph>(g);
        j["kind"] = "even";
        j["torus_rank"] = e.torus_rank;
        j["signed"] = e.signed_weights;
        std::vector<std::string> vertices = e.vertices;
        std::sort(vertices.begin(), vertices.end());
        j["vertices"] = vertices;

        std::vector<std::size_t> order(e.edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return e.edges[a].id < e.edges[b].id; });
        ordered_json edges = ordered_json::array();
        for (std::size_t i : order) {
            const EvenEdge& ed = e.edges[i];
            ordered_json je;
            je["id"] = ed.id;
            je["from"] = e.vertices[static_cast<std::size_t>(ed.from)];
            je["to"] = e.vertices[static_cast<std::size_t>(ed.to)];
            je["weight"] = vector_out(ed.weight);
            edges.push_back(std::move(je));
        }
        j["edges"] = edges;

        if (e.connection) {
            ordered_json conn = ordered_json::array();
            for (const auto& [along, map] : e.connection->maps) {
                ordered_json jc;
                jc["along"] = dart_id(e, along);
                ordered_json maps;
                for (const auto& [from, to] : map) maps[dart_id(e, from)] = dart_id(e, to);
                jc["maps"] = std::move(maps);
                conn.push_back(std::move(jc));
            }
            j["connection"] = conn;
        }
    } else {
        const OddGkmGraph& o = std::get<OddGkmGraph>(g);
        j["kind"] = "odd";
        j["torus_rank"] = o.torus_rank;
        std::vector<std::string> circles = o.circles;
        std::sort(circles.begin(), circles.end());
        j["circles"] = circles;

        std::vector<std::size_t> order(o.squares.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return o.squares[a].id < o.squares[b].id; });
        ordered_json squares = ordered_json::array();
        for (std::size_t i : order) {
            const OddSquare& s = o.squares[i];
            ordered_json js;
            js["id"] = s.id;
            js["weight"] = vector_out(s.weight.rational());
            ordered_json incs = ordered_json::array();
            for (const auto& inc : s.incidences) {
                ordered_json ji;
                ji["circle"] = o.circles[static_cast<std::size_t>(inc.circle)];
                ji["sign"] = inc.sign;
                if (inc.edge_weight) ji["edge_weight"] = vector_out(*inc.edge_weight);
                incs.push_back(std::move(ji));
            }
            js["incidences"] = incs;
            squares.push_back(std::move(js));
        }
        j["squares"] = squares;
    }
    return j.dump(2) + "\n";
}

void save_graph(const AnyGraph& g, const std::string& path, const std::string& meta_name) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << graph_to_json(g, meta_name);
}

GraphAutomorphism load_automorphism(const std::string& path, const OddGkmGraph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("/", std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("circle_map") || !j["circle_map"].is_object())
        throw SchemaError("/circle_map", "expected an object");

    const std::size_t n = g.circles.size();
    std::vector<int> perm(n, -1);
    for (const auto& [from, to] : j["circle_map"].items()) {
        const int c = g.circle_index(from);
        if (c < 0) throw SchemaError("/circle_map", "unknown circle '" + from + "'");
        if (!to.is_string()) throw SchemaError("/circle_map", "expected string values");
        const int t = g.circle_index(to.get<std::string>());
        if (t < 0)
            throw SchemaError("/circle_map", "unknown circle '" + to.get<std::string>() + "'");
        perm[static_cast<std::size_t>(c)] = t;
    }
    for (std::size_t c = 0; c < n; ++c)
        if (perm[c] < 0)
            throw SchemaError("/circle_map", "missing image for circle '" + g.circles[c] + "'");

    std::vector<int> theta(n, 1);
    if (j.contains("theta_sign")) {
        if (!j["theta_sign"].is_object()) throw SchemaError("/theta_sign", "expected an object");
        for (const auto& [name, value] : j["theta_sign"].items()) {
            const int c = g.circle_index(name);
            if (c < 0) throw SchemaError("/theta_sign", "unknown circle '" + name + "'");
            if (!value.is_number_integer() ||
                (value.get<int>() != 1 && value.get<int>() != -1))
                throw SchemaError("/theta_sign", "expected ±1");
            theta[static_cast<std::size_t>(c)] = value.get<int>();
        }
    }

    std::vector<QVector> linear;
    if (j.contains("linear")) {
        if (!j["linear"].is_array()) throw SchemaError("/linear", "expected an array of rows");
        for (std::size_t i = 0; i < j["linear"].size(); ++i)
            linear.push_back(vector_at(j["linear"][i], "/linear/" + std::to_string(i)));
    }

    GraphAutomorphism aut;
    try {
        aut = automorphism_from_circle_perm(g, std::move(perm), std::move(theta),
                                            std::move(linear));
    } catch (const std::invalid_argument& e) {
        throw SchemaError("/circle_map", e.what());
    }

    if (j.contains("square_map")) {
        if (!j["square_map"].is_object()) throw SchemaError("/square_map", "expected an object");
        for (const auto& [from, to] : j["square_map"].items()) {
            int s = -1;
            for (std::size_t i = 0; i < g.squares.size(); ++i)
                if (g.squares[i].id == from) s = static_cast<int>(i);
            if (s < 0) throw SchemaError("/square_map", "unknown square '" + from + "'");
            if (!to.is_string() ||
                g.squares[static_cast<std::size_t>(aut.square_perm[static_cast<std::size_t>(s)])]
                        .id != to.get<std::string>())
                throw SchemaError("/square_map",
                                  "square map disagrees with the derived image of '" + from + "'");
        }
    }
    return aut;
}

}  // namespace gkm

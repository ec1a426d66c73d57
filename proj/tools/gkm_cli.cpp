#include "gkm/catalog.hpp"
#include "gkm/io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <variant>

namespace {

using gkm::AnyGraph;
using gkm::EvenGkmGraph;
using gkm::OddGkmGraph;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

ordered_json betti_json(const gkm::BettiVector& b) {
    ordered_json out = ordered_json::array();
    for (long long x : b) out.push_back(x);
    return out;
}

std::string betti_text(const gkm::BettiVector& b) {
    std::string out = "(";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    return out + ")";
}

int run_validate(const std::string& path, int k, const std::string& curvature, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    gkm::ValidationReport report;
    gkm::GateReport gate;
    bool gated = !curvature.empty();
    if (std::holds_alternative<EvenGkmGraph>(g)) {
        if (gated) throw std::runtime_error("--curvature applies to odd graphs only");
        report = gkm::validate_even(std::get<EvenGkmGraph>(g), k);
    } else {
        const OddGkmGraph& odd = std::get<OddGkmGraph>(g);
        report = gkm::validate_odd(odd, k);
        if (gated)
            gate = gkm::curvature_gate(odd, curvature == "positive"
                                                ? gkm::CurvatureMode::Positive
                                                : gkm::CurvatureMode::NonNegative);
    }
    const bool ok = report.valid() && (!gated || gate.pass);
    if (json_out) {
        ordered_json j;
        j["valid"] = report.valid();
        j["violations"] = report.violations;
        j["warnings"] = report.warnings;
        if (!report.floating_counts.empty()) j["floating_counts"] = report.floating_counts;
        if (gated) {
            j["curvature_gate"] = gate.pass;
            j["offending_squares"] = gate.offending_squares;
            j["offending_faces"] = gate.offending_faces;
        }
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (report.valid() ? "valid" : "invalid") << " (GKM_" << k << ")\n";
        for (const auto& v : report.violations) std::cout << "  violation: " << v << "\n";
        for (const auto& w : report.warnings) std::cout << "  warning: " << w << "\n";
        if (gated) {
            std::cout << "curvature gate (" << curvature << "): "
                      << (gate.pass ? "pass" : "fail") << "\n";
            for (const auto& s : gate.offending_squares)
                std::cout << "  offending square: " << s << "\n";
            for (const auto& f : gate.offending_faces)
                std::cout << "  offending face: " << f << "\n";
        }
    }
    return ok ? kExitOk : kExitFalse;
}

int run_betti(const std::string& path, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    const gkm::BettiVector b = std::holds_alternative<EvenGkmGraph>(g)
                                   ? gkm::ordinary_betti(std::get<EvenGkmGraph>(g))
                                   : gkm::ordinary_betti(std::get<OddGkmGraph>(g));
    if (json_out) {
        ordered_json j;
        j["betti"] = betti_json(b);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << betti_text(b) << "\n";
    }
    return kExitOk;
}

int run_equivariant(const std::string& path, int max_degree, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    std::map<int, long long> dims;
    for (int m = 0; m <= max_degree; ++m)
        dims[m] = std::holds_alternative<EvenGkmGraph>(g)
                      ? gkm::equivariant_dim(std::get<EvenGkmGraph>(g), m)
                      : gkm::equivariant_dim(std::get<OddGkmGraph>(g), m);
    if (json_out) {
        ordered_json j;
        ordered_json d;
        for (const auto& [m, dim] : dims) d[std::to_string(m)] = dim;
        j["equivariant_dims"] = d;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [m, dim] : dims)
            std::cout << "dim H^" << m << "_T = " << dim << "\n";
    }
    return kExitOk;
}

int run_reduce(const std::string& path, const std::string& out_path, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    if (!std::holds_alternative<OddGkmGraph>(g))
        throw std::runtime_error("reduce applies to odd graphs only");
    const gkm::ReductionResult red = gkm::reduce_odd_to_even(std::get<OddGkmGraph>(g));
    const std::string graph_json = gkm::graph_to_json(AnyGraph{red.graph});
    if (!out_path.empty()) gkm::save_graph(AnyGraph{red.graph}, out_path);
    if (json_out) {
        ordered_json j;
        j["floating_number"] = red.floating_number;
        j["square_to_edge"] = red.square_to_edge;
        j["graph"] = ordered_json::parse(graph_json);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "floating number k = " << red.floating_number << "\n" << graph_json;
    }
    return kExitOk;
}

int run_orientable(const std::string& path, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    if (!std::holds_alternative<EvenGkmGraph>(g))
        throw std::runtime_error("orientable applies to even graphs only");
    const bool orientable = gkm::orientability_check(std::get<EvenGkmGraph>(g));
    if (json_out) {
        ordered_json j;
        j["orientable"] = orientable;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (orientable ? "orientable" : "non-orientable") << "\n";
    }
    return orientable ? kExitOk : kExitFalse;
}

int run_split_check(const std::string& path, int max_degree, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    if (!std::holds_alternative<OddGkmGraph>(g))
        throw std::runtime_error("split-check applies to odd graphs only");
    const gkm::SplittingReport r = gkm::splitting_check(std::get<OddGkmGraph>(g), max_degree);
    if (json_out) {
        ordered_json j;
        j["k"] = r.k;
        j["cutoff"] = r.cutoff;
        j["omega_found"] = r.omega_found;
        if (r.obstruction) {
            ordered_json o;
            o["reason"] = r.obstruction->reason;
            o["solution_dim"] = r.obstruction->solution_dim;
            o["zero_circles"] = r.obstruction->zero_circles;
            j["obstruction"] = o;
        }
        j["gamma_orientable"] = r.gamma_orientable;
        j["dim_h_2k1"] = r.dim_h_2k1;
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.rows) {
            ordered_json jr;
            jr["m"] = row.m;
            jr["check"] = row.check;
            jr["lhs"] = row.lhs;
            jr["rhs"] = row.rhs;
            jr["ok"] = row.ok;
            rows.push_back(std::move(jr));
        }
        j["rows"] = rows;
        j["betti"] = betti_json(r.betti_odd);
        j["betti_reduced"] = betti_json(r.betti_gamma);
        j["factorization"] = r.corollary.divisible;
        if (r.corollary.divisible) j["quotient"] = betti_json(r.corollary.quotient);
        j["verdict"] = r.verdict;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "k = " << r.k << ", cutoff = " << r.cutoff << "\n";
        std::cout << "omega class: " << (r.omega_found ? "found" : "obstructed") << "\n";
        if (r.obstruction) std::cout << "  obstruction: " << r.obstruction->reason << "\n";
        std::cout << "dim H^" << (2 * r.k + 1) << "_T = " << r.dim_h_2k1 << "\n";
        std::cout << "reduced graph orientable: " << (r.gamma_orientable ? "yes" : "no") << "\n";
        for (const auto& row : r.rows)
            std::cout << "  m=" << row.m << "  " << row.check << ": " << row.lhs
                      << (row.ok ? " == " : " != ") << row.rhs << "\n";
        std::cout << "betti:         " << betti_text(r.betti_odd) << "\n";
        std::cout << "betti reduced: " << betti_text(r.betti_gamma) << "\n";
        std::cout << "factorization by (1 + t^" << (2 * r.k + 1)
                  << "): " << (r.corollary.divisible ? "yes" : "no") << "\n";
        std::cout << "verdict: " << (r.verdict ? "pass" : "fail") << "\n";
    }
    return r.verdict ? kExitOk : kExitFalse;
}

int run_faces(const std::string& path, bool classify, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    ordered_json faces = ordered_json::array();
    if (std::holds_alternative<EvenGkmGraph>(g)) {
        const EvenGkmGraph& e = std::get<EvenGkmGraph>(g);
        for (const gkm::EvenFace& f : gkm::enumerate_two_faces(e)) {
            ordered_json jf;
            ordered_json vs = ordered_json::array();
            for (int v : f.vertices) vs.push_back(e.vertices[static_cast<std::size_t>(v)]);
            ordered_json es = ordered_json::array();
            for (int ed : f.edges) es.push_back(e.edges[static_cast<std::size_t>(ed)].id);
            jf["vertices"] = vs;
            jf["edges"] = es;
            if (classify) jf["biangle"] = (f.vertices.size() == 2);
            faces.push_back(std::move(jf));
        }
    } else {
        const OddGkmGraph& o = std::get<OddGkmGraph>(g);
        for (const gkm::OddFace& f : gkm::enumerate_two_faces(o)) {
            ordered_json jf;
            ordered_json cs = ordered_json::array();
            for (int c : f.circles) cs.push_back(o.circles[static_cast<std::size_t>(c)]);
            ordered_json ss = ordered_json::array();
            for (int s : f.squares) ss.push_back(o.squares[static_cast<std::size_t>(s)].id);
            jf["circles"] = cs;
            jf["squares"] = ss;
            if (classify) jf["shape"] = gkm::to_string(gkm::classify_face_shape(o, f));
            faces.push_back(std::move(jf));
        }
    }
    if (json_out) {
        ordered_json j;
        j["faces"] = faces;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& jf : faces) std::cout << jf.dump() << "\n";
    }
    return kExitOk;
}

int run_alternating(const std::string& path, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    if (!std::holds_alternative<OddGkmGraph>(g))
        throw std::runtime_error("alternating applies to odd graphs only");
    const gkm::AlternatingResult r = gkm::alternating_check(std::get<OddGkmGraph>(g));
    if (json_out) {
        ordered_json j;
        j["alternating"] = r.alternating;
        j["witnesses"] = r.witnesses;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (r.alternating ? "alternating" : "not alternating") << "\n";
        for (const auto& w : r.witnesses) std::cout << "  witness: " << w << "\n";
    }
    return r.alternating ? kExitOk : kExitFalse;
}

int run_invariants(const std::string& path, const std::string& aut_path, bool json_out) {
    const AnyGraph g = gkm::load_graph(path);
    if (!std::holds_alternative<OddGkmGraph>(g))
        throw std::runtime_error("invariants applies to odd graphs only");
    const OddGkmGraph& odd = std::get<OddGkmGraph>(g);
    const gkm::GraphAutomorphism aut = gkm::load_automorphism(aut_path, odd);
    const gkm::BettiVector b = gkm::automorphism_invariant_betti(odd, aut);
    if (json_out) {
        ordered_json j;
        j["invariant_betti"] = betti_json(b);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << betti_text(b) << "\n";
    }
    return kExitOk;
}

int run_catalog(const std::string& name, const std::string& out_path, bool json_out) {
    const auto g = gkm::make_standard(name);
    const AnyGraph any = std::holds_alternative<EvenGkmGraph>(g)
                             ? AnyGraph{std::get<EvenGkmGraph>(g)}
                             : AnyGraph{std::get<OddGkmGraph>(g)};
    if (!out_path.empty()) gkm::save_graph(any, out_path, name);
    const std::string text = gkm::graph_to_json(any, name);
    (void)json_out;  // the catalog payload is JSON either way
    std::cout << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GKM graph toolkit: validation, cohomology, reduction, splitting checks"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "machine-readable output");

    std::string file, out_path, curvature, aut_path, name;
    int k = 2;
    int max_degree = -1;

    auto* validate = app.add_subcommand("validate", "check GKM_k structure");
    validate->add_option("file", file)->required();
    validate->add_option("--k", k, "independence level (default 2)");
    validate->add_option("--curvature", curvature, "nonneg|positive gate (odd graphs)")
        ->check(CLI::IsMember({"nonneg", "positive"}));

    auto* betti = app.add_subcommand("betti", "ordinary Betti numbers");
    betti->add_option("file", file)->required();

    auto* equivariant = app.add_subcommand("equivariant", "graded equivariant dimensions");
    equivariant->add_option("file", file)->required();
    equivariant->add_option("--max-degree", max_degree)->required();

    auto* reduce = app.add_subcommand("reduce", "collapse an odd graph to its even reduction");
    reduce->add_option("file", file)->required();
    reduce->add_option("-o,--output", out_path);

    auto* orientable = app.add_subcommand("orientable", "top Betti number check");
    orientable->add_option("file", file)->required();

    auto* split = app.add_subcommand("split-check", "degreewise sphere-splitting verification");
    split->add_option("file", file)->required();
    split->add_option("--max-degree", max_degree, "cutoff (default 2·top)");

    auto* faces = app.add_subcommand("faces", "enumerate 2-faces");
    faces->add_option("file", file)->required();
    bool classify = false;
    faces->add_flag("--classify", classify, "label face shapes");

    auto* alternating = app.add_subcommand("alternating", "signed alternating condition");
    alternating->add_option("file", file)->required();

    auto* invariants = app.add_subcommand("invariants", "Betti numbers of the invariant subalgebra");
    invariants->add_option("file", file)->required();
    invariants->add_option("--automorphism", aut_path)->required();

    auto* catalog = app.add_subcommand("catalog", "emit a standard graph");
    catalog->add_option("name", name)->required();
    catalog->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (validate->parsed()) return run_validate(file, k, curvature, json_out);
        if (betti->parsed()) return run_betti(file, json_out);
        if (equivariant->parsed()) return run_equivariant(file, max_degree, json_out);
        if (reduce->parsed()) return run_reduce(file, out_path, json_out);
        if (orientable->parsed()) return run_orientable(file, json_out);
        if (split->parsed()) return run_split_check(file, max_degree, json_out);
        if (faces->parsed()) return run_faces(file, classify, json_out);
        if (alternating->parsed()) return run_alternating(file, json_out);
        if (invariants->parsed()) return run_invariants(file, aut_path, json_out);
        if (catalog->parsed()) return run_catalog(name, out_path, json_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

#pragma once

#include "gkm/cohomology.hpp"

#include <stdexcept>
#include <variant>

namespace gkm {

using AnyGraph = std::variant<EvenGkmGraph, OddGkmGraph>;

/// Schema violation with a JSON-pointer-style path to the offending element.
struct SchemaError : std::runtime_error {
    std::string pointer;
    SchemaError(const std::string& ptr, const std::string& what)
        : std::runtime_error(what + " at " + ptr), pointer(ptr) {}
};

AnyGraph parse_graph(const std::string& json_text);
AnyGraph load_graph(const std::string& path);

/// Canonical serialization: sorted ids, reduced rationals, stable key order.
std::string graph_to_json(const AnyGraph& g, const std::string& meta_name = "",
                          const std::string& meta_description = "");
void save_graph(const AnyGraph& g, const std::string& path,
                const std::string& meta_name = "");

/// Automorphism file: {"circle_map": {...}, "theta_sign": {...},
/// "square_map": {...} (optional, derived when absent),
/// "linear": [[...]] (optional, identity when absent)}.
GraphAutomorphism load_automorphism(const std::string& path, const OddGkmGraph& g);

}  // namespace gkm

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "arbor/graph.hpp"
#include "arbor/numeric.hpp"

namespace arbor {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AnyGraph = std::variant<DirectedMultigraph, UndirectedMultigraph>;

// Edge-list format:
//   header  "digraph <n>" | "graph <n>"
//   body    "<u> <v> [mult]"   0-indexed, mult defaults to 1
// '#' starts a comment, blank lines are ignored. For "graph" each unordered
// pair may appear at most once; for "digraph" repeated ordered pairs
// accumulate.
AnyGraph parse_graph(std::istream& in);
AnyGraph parse_graph_string(const std::string& text);

std::string serialize(const DirectedMultigraph& d);
std::string serialize(const UndirectedMultigraph& g);
std::string serialize(const AnyGraph& g);

// DOT export; one line per edge copy, so a tournament gets exactly C(n,2)
// directed edges.
std::string to_dot(const DirectedMultigraph& d);
std::string to_dot(const UndirectedMultigraph& g);

}  // namespace arbor

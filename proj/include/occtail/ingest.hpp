#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "occtail/instance.hpp"

namespace occtail {

using Edge = std::pair<std::string, std::string>; // (source, target)

/// Parses "SOURCE -> TARGET" lines. '#' starts a comment line, blank lines
/// are skipped, surrounding whitespace is tolerated. Identifiers are
/// non-empty, contain no whitespace and not the literal "->". Pairs come back
/// in file order with duplicates preserved so derive_instance can diagnose
/// them. Malformed lines raise InputError naming the line number and content.
std::vector<Edge> parse_edge_list(std::istream& in);
std::vector<Edge> parse_edge_list(const std::string& text);

/// One identifier per line, same comment/blank/whitespace rules.
std::vector<std::string> parse_identifier_list(std::istream& in);
std::vector<std::string> parse_identifier_list(const std::string& text);

/// Validated network: the universe of element identifiers, the distinct
/// directed edges (no self-loops), and the designated regulator set.
struct RegulatoryNetworkInput {
    std::set<std::string> universe;
    std::set<Edge> edges;
    std::set<std::string> regulators;

    friend bool operator==(const RegulatoryNetworkInput&, const RegulatoryNetworkInput&) = default;
};

/// Serializes the edge set back to edge-list text ("A -> B" per line).
/// Re-parsing the output reproduces the edge set.
std::string to_edge_list_text(const RegulatoryNetworkInput& net);

struct DerivePolicy {
    bool dedupe_edges = false;       // otherwise duplicate edges are an error
    bool drop_self_loops = false;    // otherwise self-loops are an error
    bool allow_unknown_regulators = false; // drop with warning instead of error
};

struct DerivedInstance {
    RegulatoryNetworkInput network;
    ProblemInstance instance;        // z = distinct regulators seen as a source
    bool universe_inferred = false;  // universe built from files, not given
    std::vector<std::string> warnings;
};

/// Derives (n, x, y, z) from parsed inputs:
///   n = |universe| (explicit, or the union of endpoints and regulators),
///   x = distinct edges, y = distinct regulators,
///   z = distinct regulators occurring as the source of at least one edge.
/// Policy decides whether self-loops, duplicate edges and unknown regulators
/// are errors or dropped with a warning. Identifier comparison is exact byte
/// equality.
DerivedInstance derive_instance(const std::vector<Edge>& edges,
                                const std::vector<std::string>& regulators,
                                const std::optional<std::vector<std::string>>& universe,
                                const DerivePolicy& policy = {});

} // namespace occtail

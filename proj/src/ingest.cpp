#include "occtail/ingest.hpp"

#include <istream>
#include <sstream>

#include "occtail/errors.hpp"

namespace occtail {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool skippable(std::string_view line) {
    return line.empty() || line.front() == '#';
}

[[noreturn]] void line_error(std::size_t line_no, std::string_view line,
                             const std::string& why) {
    throw InputError("line " + std::to_string(line_no) + ": " + why + " in \"" +
                     std::string(line) + "\"");
}

void check_identifier(std::string_view token, std::size_t line_no, std::string_view line,
                      const char* role) {
    const std::string what = *role ? std::string(role) + " identifier" : "identifier";
    if (token.empty()) {
        line_error(line_no, line, "empty " + what);
    }
    if (token.find_first_of(" \t") != std::string_view::npos) {
        line_error(line_no, line, what + " contains whitespace");
    }
    if (token.find("->") != std::string_view::npos) {
        line_error(line_no, line, what + " contains \"->\"");
    }
}

} // namespace

std::vector<Edge> parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (skippable(line)) {
            continue;
        }
        const std::size_t arrow = line.find("->");
        if (arrow == std::string_view::npos) {
            line_error(line_no, line, "expected \"SOURCE -> TARGET\"");
        }
        const std::string_view source = trim(line.substr(0, arrow));
        const std::string_view target = trim(line.substr(arrow + 2));
        check_identifier(source, line_no, line, "source");
        check_identifier(target, line_no, line, "target");
        edges.emplace_back(std::string(source), std::string(target));
    }
    return edges;
}

std::vector<Edge> parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::vector<std::string> parse_identifier_list(std::istream& in) {
    std::vector<std::string> ids;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (skippable(line)) {
            continue;
        }
        check_identifier(line, line_no, line, "");
        ids.emplace_back(line);
    }
    return ids;
}

std::vector<std::string> parse_identifier_list(const std::string& text) {
    std::istringstream in(text);
    return parse_identifier_list(in);
}

std::string to_edge_list_text(const RegulatoryNetworkInput& net) {
    std::string out;
    for (const auto& [source, target] : net.edges) {
        out += source;
        out += " -> ";
        out += target;
        out += "\n";
    }
    return out;
}

DerivedInstance derive_instance(const std::vector<Edge>& edges,
                                const std::vector<std::string>& regulators,
                                const std::optional<std::vector<std::string>>& universe,
                                const DerivePolicy& policy) {
    DerivedInstance out;
    RegulatoryNetworkInput& net = out.network;

    if (universe.has_value()) {
        net.universe.insert(universe->begin(), universe->end());
    } else {
        out.universe_inferred = true;
        for (const auto& [source, target] : edges) {
            net.universe.insert(source);
            net.universe.insert(target);
        }
        net.universe.insert(regulators.begin(), regulators.end());
    }

    for (const auto& edge : edges) {
        if (edge.first == edge.second) {
            if (!policy.drop_self_loops) {
                throw InputError("self-loop \"" + edge.first + " -> " + edge.second +
                                 "\" (pass --allow-self-loops-drop to drop it)");
            }
            out.warnings.push_back("dropped self-loop " + edge.first + " -> " + edge.second);
            continue;
        }
        if (!net.universe.contains(edge.first) || !net.universe.contains(edge.second)) {
            throw InputError("edge \"" + edge.first + " -> " + edge.second +
                             "\" has an endpoint outside the universe");
        }
        if (!net.edges.insert(edge).second) {
            if (!policy.dedupe_edges) {
                throw InputError("duplicate edge \"" + edge.first + " -> " + edge.second +
                                 "\" (pass --dedupe to deduplicate)");
            }
            out.warnings.push_back("deduplicated edge " + edge.first + " -> " + edge.second);
        }
    }

    for (const auto& regulator : regulators) {
        if (!net.universe.contains(regulator)) {
            if (!policy.allow_unknown_regulators) {
                throw InputError("regulator \"" + regulator +
                                 "\" is outside the universe (pass --allow-unknown to drop it)");
            }
            out.warnings.push_back("dropped unknown regulator " + regulator);
            continue;
        }
        net.regulators.insert(regulator);
    }

    std::set<std::string> sources_seen;
    for (const auto& [source, target] : net.edges) {
        if (net.regulators.contains(source)) {
            sources_seen.insert(source);
        }
    }

    ProblemInstance inst;
    inst.n = static_cast<std::int64_t>(net.universe.size());
    inst.x = static_cast<std::int64_t>(net.edges.size());
    inst.y = static_cast<std::int64_t>(net.regulators.size());
    inst.z = static_cast<std::int64_t>(sources_seen.size());
    if (inst.n >= 2 && inst.x > inst.positions()) {
        throw InputError("internal consistency error: more distinct edges than n*(n-1)");
    }
    inst.validate();
    out.instance = inst;
    return out;
}

} // namespace occtail

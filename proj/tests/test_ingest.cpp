#include <doctest.h>

#include <algorithm>
#include <random>

#include "occtail/errors.hpp"
#include "occtail/ingest.hpp"

using namespace occtail;

TEST_CASE("parse_edge_list: well-formed lines, comments, whitespace") {
    const auto edges = parse_edge_list("G1 -> G2\nG2 -> G3");
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == Edge{"G1", "G2"});
    CHECK(edges[1] == Edge{"G2", "G3"});

    const auto tolerant = parse_edge_list("# header\n A ->  B \n\n");
    REQUIRE(tolerant.size() == 1);
    CHECK(tolerant[0] == Edge{"A", "B"});

    CHECK(parse_edge_list("A->B").at(0) == Edge{"A", "B"});
    // duplicates are preserved for later diagnosis
    CHECK(parse_edge_list("A -> B\nA -> B").size() == 2);
}

TEST_CASE("parse_edge_list: malformed lines name the line") {
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_edge_list("A -> ")),
                         doctest::Contains("line 1"), InputError);
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_edge_list("A -> B\nnonsense")),
                         doctest::Contains("line 2"), InputError);
    CHECK_THROWS_AS(static_cast<void>(parse_edge_list(" -> B")), InputError);
    CHECK_THROWS_AS(static_cast<void>(parse_edge_list("A -> B -> C")), InputError);
    CHECK_THROWS_AS(static_cast<void>(parse_edge_list("A B -> C")), InputError);
}

TEST_CASE("parse_identifier_list: basics") {
    const auto ids = parse_identifier_list("# regulators\nA\n B \n\nC");
    REQUIRE(ids == std::vector<std::string>{"A", "B", "C"});
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_identifier_list("A B")),
                         doctest::Contains("whitespace"), InputError);
}

TEST_CASE("derive_instance: the regulator-enrichment example") {
    const std::vector<Edge> edges = {{"A", "B"}, {"A", "C"}, {"B", "C"}};
    const std::vector<std::string> regulators = {"A", "D"};
    const std::vector<std::string> universe = {"A", "B", "C", "D"};

    const DerivedInstance derived = derive_instance(edges, regulators, universe);
    CHECK(derived.instance == ProblemInstance{4, 3, 2, 1}); // only A is a source
    CHECK_FALSE(derived.universe_inferred);
    CHECK(derived.warnings.empty());
}

TEST_CASE("derive_instance: empty edge list gives z = 0") {
    const DerivedInstance derived =
        derive_instance({}, {"A"}, std::vector<std::string>{"A", "B"});
    CHECK(derived.instance == ProblemInstance{2, 0, 1, 0});
}

TEST_CASE("derive_instance: self-loops are fatal unless dropped") {
    const std::vector<Edge> loop = {{"A", "A"}};
    CHECK_THROWS_WITH_AS(
        static_cast<void>(derive_instance(loop, {"A"}, std::vector<std::string>{"A", "B"})),
        doctest::Contains("self-loop"), InputError);

    DerivePolicy policy;
    policy.drop_self_loops = true;
    const DerivedInstance derived =
        derive_instance(loop, {"A"}, std::vector<std::string>{"A", "B"}, policy);
    CHECK(derived.instance == ProblemInstance{2, 0, 1, 0});
    REQUIRE(derived.warnings.size() == 1);
    CHECK(derived.warnings[0].find("self-loop") != std::string::npos);
}

TEST_CASE("derive_instance: duplicate edges are fatal unless deduplicated") {
    const std::vector<Edge> dup = {{"A", "B"}, {"A", "B"}};
    CHECK_THROWS_WITH_AS(
        static_cast<void>(derive_instance(dup, {}, std::vector<std::string>{"A", "B"})),
        doctest::Contains("duplicate"), InputError);

    DerivePolicy policy;
    policy.dedupe_edges = true;
    const DerivedInstance derived =
        derive_instance(dup, {}, std::vector<std::string>{"A", "B"}, policy);
    CHECK(derived.instance.x == 1);
    CHECK(derived.warnings.size() == 1);
}

TEST_CASE("derive_instance: unknown regulators are fatal unless allowed") {
    const std::vector<Edge> edges = {{"A", "B"}};
    CHECK_THROWS_WITH_AS(
        static_cast<void>(derive_instance(edges, {"Q"}, std::vector<std::string>{"A", "B"})),
        doctest::Contains("outside the universe"), InputError);

    DerivePolicy policy;
    policy.allow_unknown_regulators = true;
    const DerivedInstance derived =
        derive_instance(edges, {"Q", "A"}, std::vector<std::string>{"A", "B"}, policy);
    CHECK(derived.instance.y == 1); // Q dropped, A kept
    CHECK(derived.warnings.size() == 1);
}

TEST_CASE("derive_instance: edge endpoints must be in an explicit universe") {
    const std::vector<Edge> edges = {{"A", "X"}};
    CHECK_THROWS_WITH_AS(
        static_cast<void>(derive_instance(edges, {}, std::vector<std::string>{"A", "B"})),
        doctest::Contains("endpoint"), InputError);
}

TEST_CASE("derive_instance: universe inference is flagged") {
    const std::vector<Edge> edges = {{"A", "B"}, {"B", "C"}};
    const DerivedInstance derived = derive_instance(edges, {"D"}, std::nullopt);
    CHECK(derived.universe_inferred);
    CHECK(derived.instance.n == 4); // A, B, C plus regulator D
    CHECK(derived.instance.y == 1);
    CHECK(derived.instance.z == 0);
}

TEST_CASE("derive_instance: regulators seen only as targets still count toward y") {
    const std::vector<Edge> edges = {{"A", "B"}};
    const DerivedInstance derived =
        derive_instance(edges, {"B"}, std::vector<std::string>{"A", "B"});
    CHECK(derived.instance.y == 1);
    CHECK(derived.instance.z == 0); // B never appears as a source
}

TEST_CASE("derive_instance: a regulator with many edges counts once toward z") {
    const std::vector<Edge> edges = {{"A", "B"}, {"A", "C"}, {"A", "D"}};
    const DerivedInstance derived =
        derive_instance(edges, {"A"}, std::vector<std::string>{"A", "B", "C", "D"});
    CHECK(derived.instance.z == 1);
}

TEST_CASE("derive_instance: insensitive to input order and repeated mentions") {
    std::vector<Edge> edges = {{"A", "B"}, {"B", "C"}, {"C", "A"}, {"A", "C"}};
    const std::vector<std::string> universe = {"A", "B", "C", "D"};
    const DerivedInstance reference = derive_instance(edges, {"A", "B"}, universe);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(edges.begin(), edges.end(), rng);
        const DerivedInstance shuffled =
            derive_instance(edges, {"B", "A", "B", "A"}, universe);
        REQUIRE(shuffled.network == reference.network);
        REQUIRE(shuffled.instance == reference.instance);
    }
}

TEST_CASE("derive_instance: z never exceeds min(x, y)") {
    std::mt19937_64 rng(37);
    const std::vector<std::string> pool = {"A", "B", "C", "D", "E", "F"};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Edge> edges;
        const int edge_count = static_cast<int>(rng() % 8);
        for (int i = 0; i < edge_count; ++i) {
            const std::string& a = pool[rng() % pool.size()];
            const std::string& b = pool[rng() % pool.size()];
            if (a != b) {
                edges.emplace_back(a, b);
            }
        }
        std::vector<std::string> regulators;
        const int reg_count = static_cast<int>(rng() % 4);
        for (int i = 0; i < reg_count; ++i) {
            regulators.push_back(pool[rng() % pool.size()]);
        }
        DerivePolicy policy;
        policy.dedupe_edges = true;
        const DerivedInstance derived =
            derive_instance(edges, regulators, std::vector<std::string>(pool.begin(), pool.end()),
                            policy);
        REQUIRE(derived.instance.z <= std::min(derived.instance.x, derived.instance.y));
    }
}

TEST_CASE("round-trip: serialize then re-derive reproduces the network") {
    const std::vector<Edge> edges = {{"A", "B"}, {"A", "C"}, {"B", "C"}};
    const std::vector<std::string> regulators = {"A", "D"};
    const std::vector<std::string> universe = {"A", "B", "C", "D"};
    const DerivedInstance original = derive_instance(edges, regulators, universe);

    const std::string text = to_edge_list_text(original.network);
    const DerivedInstance reparsed = derive_instance(parse_edge_list(text), regulators, universe);
    CHECK(reparsed.network == original.network);
    CHECK(reparsed.instance == original.instance);
}

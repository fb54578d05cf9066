#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpg/graph_patterns.hpp"
#include "fpg/lst.hpp"
#include "fpg/triangulation.hpp"

using namespace fpg;

namespace {

MultiGraph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
    MultiGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("frequency table of undesirable structures") {
    const std::vector<ClassifyRow> expected_rows = {
        {3, 4, 2, 2, 1, 1, 1},           {4, 10, 4, 6, 3, 3, 2},          {5, 28, 12, 16, 8, 10, 4},
        {6, 97, 39, 58, 29, 36, 12},     {7, 359, 138, 221, 109, 137, 40}, {8, 1635, 638, 997, 497, 608, 155},
    };
    for (const auto& row : expected_rows) CHECK(classify_graphs(row.n) == row);
    CHECK_THROWS_AS(classify_graphs(0), std::invalid_argument);
}

TEST_CASE("triple edges") {
    // Exhaustive check of the predicate against the multiplicity matrix.
    for (int n = 2; n <= 5; ++n)
        for (const MultiGraph& g : enumerate_face_pairing_graphs(n)) {
            bool expected = false;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) expected = expected || g.mult(u, v) >= 3;
            CHECK(contains_triple_edge(g) == expected);
        }
}

TEST_CASE("double-ended chains") {
    CHECK(is_double_ended_chain(graph_of(1, {{0, 0}, {0, 0}})));
    MultiGraph len1 = graph_of(2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}});
    CHECK(is_double_ended_chain(len1));
    CHECK(face_pairing_graph_of(builtin("S2xS1_2")) == len1);
    MultiGraph len2 = graph_of(3, {{0, 0}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 2}});
    CHECK(is_double_ended_chain(len2));
    auto chains = find_one_ended_chains(len2);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].kind == ChainKind::double_ended);
    CHECK(chains[0].length() == 2);
    CHECK_FALSE(is_double_ended_chain(graph_of(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}})));
    // The exception to the broken-chain rule keeps the full chain in play.
    CHECK_FALSE(rejected_by_broken_chain_rule(len2));
}

TEST_CASE("broken chain and double handle") {
    // Chains 0(loop)=1 and 3(loop)=2 whose ends are joined by the single edge 1-2.
    MultiGraph g = graph_of(5, {{0, 0}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {2, 3}, {3, 3}, {1, 4}, {2, 4}, {4, 4}});
    REQUIRE(g.is_regular(4));
    CHECK(contains_broken_double_ended_chain(g));
    CHECK(rejected_by_broken_chain_rule(g));
    CHECK_FALSE(contains_triple_edge(g));

    // Chain 0(loop)=1 whose end meets both ends of the double edge 2=3.
    MultiGraph h = graph_of(5, {{0, 0}, {0, 1}, {0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 4}});
    REQUIRE(h.is_regular(4));
    CHECK(contains_chain_with_double_handle(h));
    CHECK_FALSE(contains_triple_edge(h));

    MultiGraph plain = graph_of(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
    CHECK_FALSE(contains_broken_double_ended_chain(plain));
    CHECK_FALSE(contains_chain_with_double_handle(plain));
}

TEST_CASE("one-ended chain of a layered solid torus") {
    for (int t = 1; t <= 6; ++t)
        for (const auto& [d, tri] : enumerate_lsts(t)) {
            MultiGraph g = face_pairing_graph_of(tri);
            auto chains = find_one_ended_chains(g);
            REQUIRE(chains.size() == 1);
            CHECK(chains[0].length() == t - 1);
            CHECK(chains[0].kind == ChainKind::one_ended);
        }
}

TEST_CASE("pattern report is consistent with the predicates") {
    for (const MultiGraph& g : enumerate_face_pairing_graphs(6)) {
        PatternReport r = analyze_patterns(g);
        CHECK(r.triple == contains_triple_edge(g));
        CHECK(r.broken_rejected == rejected_by_broken_chain_rule(g));
        CHECK(r.handle == contains_chain_with_double_handle(g));
        CHECK(r.is_chain == is_double_ended_chain(g));
        CHECK(r.one_ended_chains == find_one_ended_chains(g));
    }
}

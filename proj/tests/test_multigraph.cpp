#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fpg/multigraph.hpp"
#include "fpg/perm4.hpp"

using namespace fpg;

namespace {

// Largest column-major code over every relabeling, by exhaustion.
std::vector<std::uint8_t> brute_code(const MultiGraph& g) {
    const int n = g.order();
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<std::uint8_t> best;
    do {
        std::vector<std::uint8_t> code = {static_cast<std::uint8_t>(n)};
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < j; ++i) code.push_back(static_cast<std::uint8_t>(g.mult(pos[i], pos[j])));
            code.push_back(static_cast<std::uint8_t>(g.loops(pos[j])));
        }
        best = std::max(best, code);
    } while (std::next_permutation(pos.begin(), pos.end()));
    return best;
}

void fill(MultiGraph& g, int u, int v, std::set<std::vector<std::uint8_t>>& out) {
    const int n = g.order();
    if (u == n) {
        if (is_connected(g)) out.insert(brute_code(g));
        return;
    }
    if (v == n) {
        if (g.degree(u) == 4) fill(g, u + 1, u + 1, out);
        return;
    }
    const int room_u = 4 - g.degree(u);
    const int room_v = 4 - g.degree(v);
    const int cap = u == v ? room_u / 2 : std::min(room_u, room_v);
    for (int m = 0; m <= cap; ++m) {
        g.set_mult(u, v, m);
        fill(g, u, v + 1, out);
    }
    g.set_mult(u, v, 0);
}

std::set<std::vector<std::uint8_t>> brute_graphs(int n) {
    MultiGraph g(n);
    std::set<std::vector<std::uint8_t>> out;
    fill(g, 0, 0, out);
    return out;
}

MultiGraph random_relabel(const MultiGraph& g, std::mt19937& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return g.relabeled(perm);
}

}  // namespace

TEST_CASE("perm4 composition, inverse and sign") {
    const auto& all = Perm4::all();
    REQUIRE(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    Perm4 p = Perm4::parse("1203"), q = Perm4::parse("3012");
    for (int i = 0; i < 4; ++i) CHECK((p * q)[i] == p[q[i]]);
    int odd = 0;
    for (const Perm4& r : all) {
        CHECK((r * r.inverse()).is_identity());
        CHECK(Perm4::parse(r.str()) == r);
        CHECK(all[r.index()] == r);
        odd += r.sign() < 0;
    }
    CHECK(odd == 12);
    CHECK(Perm4::transposition(0, 3).sign() == -1);
    CHECK_THROWS_AS(Perm4::parse("0124"), std::invalid_argument);
    CHECK_THROWS_AS(Perm4::parse("0112"), std::invalid_argument);
    CHECK_THROWS_AS(Perm4::parse("012"), std::invalid_argument);
}

TEST_CASE("multigraph editing and degree") {
    MultiGraph g(3);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.degree(0) == 3);
    CHECK(g.mult(1, 0) == 1);
    CHECK(g.edge_count() == 3);
    g.remove_edge(1, 0);
    CHECK(g.mult(0, 1) == 0);
    CHECK_THROWS_AS(g.remove_edge(0, 1), GraphError);
    CHECK_THROWS_AS(MultiGraph(17), GraphError);
    CHECK_THROWS_AS(MultiGraph(-1), GraphError);
}

TEST_CASE("canonical form agrees with exhaustive relabeling") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 6; ++n) {
        for (const MultiGraph& g : enumerate_face_pairing_graphs(n)) {
            CHECK(canonical_form(g).bytes == brute_code(g));
            CHECK(is_canonical(g));
            MultiGraph h = random_relabel(g, rng);
            CHECK(canonical_form(h) == canonical_form(g));
            CHECK(canonical_representative(h) == g);
            auto lab = canonical_labeling(h);
            std::vector<int> inv(n);
            for (int i = 0; i < n; ++i) inv[lab[i]] = i;
            CHECK(h.relabeled(inv) == g);
        }
    }
}

TEST_CASE("graph enumeration matches exhaustive search") {
    for (int n = 1; n <= 5; ++n) {
        auto graphs = enumerate_face_pairing_graphs(n);
        std::set<std::vector<std::uint8_t>> got;
        for (const auto& g : graphs) {
            CHECK(g.is_regular(4));
            CHECK(is_connected(g));
            got.insert(canonical_form(g).bytes);
        }
        CHECK(got.size() == graphs.size());
        CHECK(got == brute_graphs(n));
        for (std::size_t i = 1; i < graphs.size(); ++i) CHECK(canonical_form(graphs[i - 1]) < canonical_form(graphs[i]));
    }
    // Reference totals for larger sizes.
    CHECK(enumerate_face_pairing_graphs(6).size() == 97);
    CHECK(enumerate_face_pairing_graphs(7).size() == 359);
    std::size_t streamed = 0;
    for_each_face_pairing_graph(7, [&](const MultiGraph&) { ++streamed; });
    CHECK(streamed == 359);
}

TEST_CASE("graph text format") {
    for (const MultiGraph& g : enumerate_face_pairing_graphs(4)) CHECK(parse_graph(serialize_graph(g)) == g);
    CHECK_THROWS_AS(parse_graph("0 1\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("vertices: 2\n0 1\n"), GraphError);
    CHECK_NOTHROW(parse_graph("vertices: 2\n0 1\n", false));
    CHECK_THROWS_AS(parse_graph("vertices: 2\n0 5\n", false), GraphError);
    CHECK_THROWS_AS(parse_graph("vertices: 2\n0\n", false), GraphError);
}

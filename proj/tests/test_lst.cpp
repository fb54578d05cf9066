#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fpg/filters.hpp"
#include "fpg/graph_patterns.hpp"
#include "fpg/lst.hpp"

using namespace fpg;

namespace {

FilterSet monotone_filters() {
    FilterSet f;
    f.set(PruneTag::TwoTriangleSphere, false);
    f.set(PruneTag::UncompletableLink, false);
    return f;
}

// All fillings of the chain layout (base loop on faces 2,3 of tet 0, double
// edges 0-3 and 1-2 between consecutive tets) that survive the filters.
void fill_chain(Triangulation& t, int i, std::set<std::string>& out) {
    if (i == t.size()) {
        out.insert(serialize_tri(t));
        return;
    }
    for (const Perm4& p : Perm4::all()) {
        if (p[0] != 3) continue;
        for (const Perm4& q : Perm4::all()) {
            if (q[1] != 2) continue;
            t.glue(i - 1, 0, i, p);
            t.glue(i - 1, 1, i, q);
            if (!first_violation(t, 3, monotone_filters())) fill_chain(t, i + 1, out);
            t.unglue(i - 1, 0);
            t.unglue(i - 1, 1);
        }
    }
}

std::set<std::string> brute_chain_fillings(int tets) {
    std::set<std::string> out;
    Triangulation t(tets);
    for (const Perm4& p : Perm4::all()) {
        if (p[2] != 3) continue;
        t.glue(0, 2, 0, p);
        if (!first_violation(t, 3, monotone_filters())) fill_chain(t, 1, out);
        t.unglue(0, 2);
    }
    return out;
}

}  // namespace

TEST_CASE("base gluings") {
    const auto& base = lst_base_gluings();
    for (const Perm4& p : base) {
        CHECK(p[2] == 3);
        CHECK(p.sign() == -1);
    }
    CHECK(base[0] != base[1]);
    auto [d, t] = lst_base(1);
    CHECK(d.tet_count == 1);
    CHECK(d.layer_choices.empty());
    CHECK(t.gluing(0, 2)->perm == base[1]);
    CHECK_THROWS_AS(lst_base(2), std::invalid_argument);
}

TEST_CASE("enumeration counts and properties") {
    for (int t = 1; t <= 8; ++t) {
        auto lsts = enumerate_lsts(t);
        CHECK(lsts.size() == (std::size_t{1} << t));
        CHECK(count_distinct_lst_signatures(lsts) == (1 << (t - 1)));
        for (const auto& [d, tri] : lsts) {
            Skeleton s(tri);
            CHECK(d.tet_count == t);
            CHECK(static_cast<int>(d.layer_choices.size()) == t - 1);
            CHECK(tri.glued_slot_count() == 4 * t - 2);
            CHECK(s.vertex_count() == 1);
            CHECK(euler_characteristic(tri) == 0);
            CHECK(check_all(tri, std::max(3, t + 1)).empty());
            CHECK(has_consistent_orientation(tri));
            std::set<int> edges(d.boundary_edges.begin(), d.boundary_edges.end());
            CHECK(edges.size() == 3);
            std::set<int> boundary_vertices;
            for (FaceSlot slot : d.boundary)
                for (int v = 0; v < 4; ++v)
                    if (v != slot.face) boundary_vertices.insert(s.vertex_of(slot.tet, v));
            CHECK(static_cast<int>(boundary_vertices.size()) - 3 + 2 == 0);
            auto chains = find_one_ended_chains(face_pairing_graph_of(tri));
            REQUIRE(chains.size() == 1);
            CHECK(chains[0].length() == t - 1);
        }
    }
    CHECK_THROWS_AS(enumerate_lsts(0), std::invalid_argument);
}

TEST_CASE("layering") {
    auto [d, t] = lst_base(0);
    auto options = admissible_layerings(t);
    REQUIRE(options.size() == 2);
    Triangulation next = layer_on(t, options[0]);
    CHECK(next.size() == 2);
    CHECK(next.glued_slot_count() == 6);
    // The layered edge is now closed.
    Skeleton s(next);
    CHECK(s.edges()[s.edge_of(1, 0, 1)].closed);
    CHECK_THROWS_AS(layer_on(t, 99), TriangulationError);
    Triangulation closed = builtin("S3_1");
    CHECK_THROWS_AS(layer_on(closed, 0), TriangulationError);
}

TEST_CASE("layout instances are exactly the filter-admissible chain fillings") {
    for (int t = 1; t <= 4; ++t) {
        std::set<std::string> got;
        for (const auto& x : lst_layout_instances(t)) got.insert(serialize_tri(x));
        CHECK(got.size() == (std::size_t{2} << (2 * (t - 1))));
        CHECK(got == brute_chain_fillings(t));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fpg/filters.hpp"

using namespace fpg;

namespace {

bool has_tag(const std::vector<PruneReason>& rs, PruneTag tag) {
    return std::any_of(rs.begin(), rs.end(), [&](const PruneReason& r) { return r.tag == tag; });
}

Triangulation random_partial(int n, int pairs, std::mt19937& rng) {
    std::vector<FaceSlot> slots;
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) slots.push_back({tet, f});
    std::shuffle(slots.begin(), slots.end(), rng);
    Triangulation t(n);
    for (int i = 0; i < pairs; ++i) {
        FaceSlot a = slots[2 * i], b = slots[2 * i + 1];
        std::vector<Perm4> options;
        for (const Perm4& p : Perm4::all())
            if (p[a.face] == b.face) options.push_back(p);
        t.glue(a.tet, a.face, b.tet, options[rng() % options.size()]);
    }
    return t;
}

}  // namespace

TEST_CASE("tag names") {
    for (PruneTag tag : all_tags()) CHECK(tag_from_name(tag_name(tag)) == tag);
    CHECK_FALSE(tag_from_name("Nothing").has_value());
    FilterSet f = FilterSet::none();
    CHECK_FALSE(f.enabled(PruneTag::ConeFace));
    f.set(PruneTag::ConeFace, true);
    CHECK(f.enabled(PruneTag::ConeFace));
}

TEST_CASE("edge filters and their size gate") {
    Triangulation fold(1);
    fold.glue(0, 2, 0, Perm4::transposition(2, 3));  // folds face 2 onto face 3 about edge 01
    CHECK(has_tag(check_edges(fold, 3), PruneTag::DegreeOne));
    CHECK(check_edges(fold, 2).empty());

    Triangulation reversed(1);
    reversed.glue(0, 2, 0, Perm4::parse("1032"));  // edge 01 meets itself backwards
    CHECK(has_tag(check_edges(reversed, 1), PruneTag::ReversedEdge));
    CHECK(has_tag(check_edges(reversed, 5), PruneTag::ReversedEdge));

    Triangulation two(2);
    two.glue(0, 2, 1, Perm4());
    two.glue(0, 3, 1, Perm4());
    CHECK(has_tag(check_edges(two, 3), PruneTag::DegreeTwo));
    CHECK(check_edges(two, 2).empty());
}

TEST_CASE("builtins pass every filter at their own size") {
    for (const auto& name : builtin_names()) {
        Triangulation t = builtin(name);
        CAPTURE(name);
        CHECK(check_all(t, t.size()).empty());
        CHECK_FALSE(first_violation(t, t.size()).has_value());
    }
}

TEST_CASE("first violation is the first reported reason") {
    std::mt19937 rng(17);
    int flagged = 0;
    for (int i = 0; i < 400; ++i) {
        Triangulation t = random_partial(2 + i % 3, 1 + static_cast<int>(rng() % 4), rng);
        auto all = check_all(t, 4);
        auto first = first_violation(t, 4);
        CHECK(all.empty() == !first.has_value());
        if (first) {
            CHECK(*first == all.front());
            ++flagged;
        }
        for (PruneTag tag : all_tags()) {
            FilterSet only = FilterSet::none();
            only.set(tag, true);
            for (const auto& r : check_all(t, 4, only)) CHECK(r.tag == tag);
        }
    }
    CHECK(flagged > 0);
}

TEST_CASE("edge, cone and spine violations survive further gluing") {
    FilterSet mono;
    mono.set(PruneTag::TwoTriangleSphere, false);
    mono.set(PruneTag::UncompletableLink, false);
    std::mt19937 rng(23);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const int n = 3;
        Triangulation t = random_partial(n, 3, rng);
        auto before = check_all(t, n, mono);
        if (before.empty()) continue;
        // Glue the remaining faces at random and confirm every tag stays.
        std::vector<FaceSlot> free;
        for (int tet = 0; tet < n; ++tet)
            for (int f = 0; f < 4; ++f)
                if (!t.is_glued(tet, f)) free.push_back({tet, f});
        std::shuffle(free.begin(), free.end(), rng);
        for (std::size_t k = 0; k + 1 < free.size(); k += 2) {
            std::vector<Perm4> options;
            for (const Perm4& p : Perm4::all())
                if (p[free[k].face] == free[k + 1].face) options.push_back(p);
            t.glue(free[k].tet, free[k].face, free[k + 1].tet, options[rng() % options.size()]);
        }
        auto after = check_all(t, n, mono);
        for (const auto& r : before) CHECK(has_tag(after, r.tag));
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("triple edge matchings") {
    TripleEdgeReport r = triple_edge_report();
    INFO(r.summary());
    CHECK(r.all_flagged);
    CHECK(r.flagged == 216);
    CHECK(r.adjacency_consistent);
    CHECK(r.adjacency_matches_expected);
    CHECK(r.rotation_classes_match_expected);
    CHECK(r.isomorphism_classes == std::vector<std::string>{"cll", "ikk", "kcl", "kkc", "kkk", "lll"});
    CHECK(r.categories_match_expected);
    CHECK(verify_triple_edge_theorem());

    CHECK(has_tag(check_all(matching_assembly(parse_matching("ikk")), 3), PruneTag::ConeFace));
    CHECK(has_tag(check_all(matching_assembly(parse_matching("kcl")), 3), PruneTag::ConeFace));
    CHECK(has_tag(check_all(matching_assembly(parse_matching("kkk")), 3), PruneTag::TwoTriangleSphere));
    CHECK(has_tag(check_all(matching_assembly(parse_matching("kkc")), 3), PruneTag::TwoTriangleSphere));
    CHECK(has_tag(check_all(matching_assembly(parse_matching("cll")), 3), PruneTag::UncompletableLink));
    CHECK(has_tag(check_all(matching_assembly(parse_matching("lll")), 3), PruneTag::UncompletableLink));
    CHECK(matching_name(parse_matching("acr")) == "acr");
    CHECK_THROWS_AS(parse_matching("xyz"), std::invalid_argument);
}

TEST_CASE("double edge configurations") {
    auto allowed = allowed_double_edge_configurations();
    CHECK(allowed.size() == 20);
    DoubleEdgeClasses classes = classify_double_edge_configurations();
    CHECK(classes.survivors == allowed);
    REQUIRE(classes.class_signatures.size() == 3);
    CHECK(std::count(classes.class_orientable.begin(), classes.class_orientable.end(), true) == 2);
    for (std::size_t i = 0; i < allowed.size(); ++i)
        CHECK(iso_signature(double_edge_piece(allowed[i])) == classes.class_signatures[classes.class_of[i]]);
    CHECK(allowed_double_edge_configurations(FilterSet::none()).size() == 36);
    // Below three tetrahedra only validity applies.
    CHECK(allowed_double_edge_configurations(FilterSet{}, 2).size() > allowed.size());
}

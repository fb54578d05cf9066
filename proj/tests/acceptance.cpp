// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fpg/engine.hpp"
#include "fpg/filters.hpp"
#include "fpg/graph_patterns.hpp"
#include "fpg/homology.hpp"
#include "fpg/lst.hpp"

using namespace fpg;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

// Reference frequencies of undesirable structures (exact).
const std::vector<ClassifyRow> kTable = {
    {3, 4, 2, 2, 1, 1, 1},         {4, 10, 4, 6, 3, 3, 2},           {5, 28, 12, 16, 8, 10, 4},
    {6, 97, 39, 58, 29, 36, 12},   {7, 359, 138, 221, 109, 137, 40}, {8, 1635, 638, 997, 497, 608, 155},
    {9, 8296, 3366, 4930, 2479, 2976, 685},
};

std::vector<ClassifyRow> computed_rows() {
    static const std::vector<ClassifyRow> rows = [] {
        std::vector<ClassifyRow> out;
        for (const auto& ref : kTable) out.push_back(classify_graphs(ref.n));
        return out;
    }();
    return rows;
}

CensusConfig config(int n, bool orientable, SearchMode mode) {
    CensusConfig cfg;
    cfg.n = n;
    cfg.orientable_only = orientable;
    cfg.mode = mode;
    return cfg;
}

Outcome table_reproduction() {
    auto rows = computed_rows();
    std::ostringstream d;
    bool ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool same = rows[i] == kTable[i];
        ok = ok && same;
        if (!same) d << "n=" << rows[i].n << " differs; ";
    }
    d << "n=3..9 rows " << (ok ? "identical" : "mismatched");
    return {ok, d.str()};
}

Outcome elimination_ratio() {
    bool ok = true;
    std::ostringstream d;
    for (const auto& r : computed_rows()) {
        double frac = static_cast<double>(r.some) / static_cast<double>(r.total);
        ok = ok && frac >= 0.5;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", frac);
        d << "n=" << r.n << ":" << buf << ' ';
    }
    return {ok, d.str()};
}

Outcome lst_counting() {
    bool ok = true;
    std::ostringstream d;
    for (int t = 1; t <= 8; ++t) {
        auto lsts = enumerate_lsts(t);
        ok = ok && lsts.size() == (std::size_t{1} << t);
        for (const auto& [desc, tri] : lsts) {
            Skeleton s(tri);
            auto chains = find_one_ended_chains(face_pairing_graph_of(tri));
            std::set<int> boundary(desc.boundary_edges.begin(), desc.boundary_edges.end());
            int open = 4 * t - tri.glued_slot_count();
            ok = ok && chains.size() == 1 && chains[0].length() == t - 1 && open == 2 && boundary.size() == 3 &&
                 s.vertex_count() == 1 && euler_characteristic(tri) == 0 && check_all(tri, std::max(3, t + 1)).empty();
        }
        d << lsts.size() << ' ';
    }
    return {ok, "sequences for t=1..8: " + d.str()};
}

Outcome builtin_identification() {
    const std::vector<std::pair<std::string, H1Result>> expected = {
        {"S3_1", {0, {}}}, {"RP3_2", {0, {2}}}, {"L31_2", {0, {3}}}, {"S2xS1_2", {1, {}}}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, h] : expected) {
        Triangulation t = builtin(name);
        H1Result got = first_homology(t);
        ok = ok && is_closed_3manifold(t) && is_orientable(t) && got == h;
        d << name << "=" << got.str() << ' ';
    }
    MultiGraph g = face_pairing_graph_of(builtin("S2xS1_2"));
    auto chains = find_one_ended_chains(g);
    bool chain = is_double_ended_chain(g) && chains.size() == 1 && chains[0].length() == 1;
    d << "S2xS1 graph is the length-1 double-ended chain: " << (chain ? "yes" : "no");
    return {ok && chain, d.str()};
}

Outcome theorem_oracles() {
    TripleEdgeReport tr = triple_edge_report();
    auto in = [&](const std::string& m, PruneTag tag) {
        const auto& flags = tr.representative_flags.at(m);
        return std::find(flags.begin(), flags.end(), tag) != flags.end();
    };
    bool categories = in("ikk", PruneTag::ConeFace) && in("kcl", PruneTag::ConeFace) &&
                      in("kkk", PruneTag::TwoTriangleSphere) && in("kkc", PruneTag::TwoTriangleSphere) &&
                      in("cll", PruneTag::UncompletableLink) && in("lll", PruneTag::UncompletableLink);
    DoubleEdgeClasses dc = classify_double_edge_configurations();
    int orientable = static_cast<int>(std::count(dc.class_orientable.begin(), dc.class_orientable.end(), true));
    bool ok = verify_triple_edge_theorem() && tr.flagged == 216 && categories && dc.class_signatures.size() == 3 &&
              orientable == 2;
    std::ostringstream d;
    d << tr.flagged << "/216 matchings flagged, categories " << (categories ? "match" : "differ") << ", "
      << dc.class_signatures.size() << " double-edge classes (" << orientable << " orientation-consistent)";
    return {ok, d.str()};
}

Outcome census_properties() {
    auto has = [](const std::vector<std::string>& v, const std::string& s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    auto one = run_census(config(1, false, SearchMode::redesigned)).signatures();
    auto two = run_census(config(2, false, SearchMode::redesigned)).signatures();
    CensusResult three = run_census(config(3, true, SearchMode::redesigned));
    bool ok = has(one, iso_signature(builtin("S3_1")));
    for (const char* name : {"RP3_2", "L31_2", "S2xS1_2"}) ok = ok && has(two, iso_signature(builtin(name)));
    ok = ok && three.stats.candidates_distinct >= 7;
    std::ostringstream d;
    d << "n=1: " << one.size() << " candidates, n=2: " << two.size() << ", n=3 orientable: "
      << three.stats.candidates_distinct << " (>= 7)";
    return {ok, d.str()};
}

Outcome mode_equivalence() {
    bool ok = true;
    std::ostringstream d;
    for (int n = 1; n <= 3; ++n)
        for (bool orientable : {false, true}) {
            auto base = run_census(config(n, orientable, SearchMode::baseline));
            auto red = run_census(config(n, orientable, SearchMode::redesigned));
            ok = ok && base.signatures() == red.signatures();
        }
    d << "signature sets equal for n=1..3; nodes on n=3 chain graphs (baseline/redesigned):";
    // Graph filters are switched off so every chain graph is actually searched.
    for (const MultiGraph& g : enumerate_face_pairing_graphs(3)) {
        if (find_one_ended_chains(g).empty()) continue;
        for (bool orientable : {false, true}) {
            CensusConfig b = config(3, orientable, SearchMode::baseline), r = config(3, orientable, SearchMode::redesigned);
            b.graph_filters = r.graph_filters = GraphFilterSet::none();
            auto x = search_graph(g, b), y = search_graph(g, r);
            ok = ok && y.stats.nodes_explored < x.stats.nodes_explored && x.signatures() == y.signatures();
            d << ' ' << canonical_form(g).hex() << (orientable ? "o" : "") << '=' << x.stats.nodes_explored << '/'
              << y.stats.nodes_explored;
        }
    }
    return {ok, d.str()};
}

Outcome pachner_invariance() {
    bool ok = true;
    int moves = 0;
    std::ostringstream d;
    for (const auto& name : builtin_names()) {
        Triangulation t = builtin(name);
        const std::string sig = iso_signature(t);
        const H1Result h = first_homology(t);
        Skeleton s(t);
        int here = 0;
        for (int f = 0; f < s.face_count(); ++f) {
            const auto& slots = s.faces()[f].slots;
            if (slots.size() != 2 || slots[0].tet == slots[1].tet) continue;
            Triangulation big = pachner_23(t, f);
            Triangulation back = pachner_32(big, Skeleton(big).edge_of(big.size() - 1, 0, 1));
            ok = ok && iso_signature(back) == sig && first_homology(big) == h && first_homology(back) == h;
            ++here;
        }
        moves += here;
        d << name << ":" << here << ' ';
    }
    d << "internal faces moved (S3_1 has none joining distinct tetrahedra)";
    return {ok && moves > 0, d.str()};
}

Outcome declared_non_reproducible() {
    // Known minimal counts are only lower bounds for the candidates.
    const std::vector<std::pair<int, int>> minimal = {{3, 7}, {4, 15}, {5, 40}};
    bool ok = true;
    std::ostringstream d;
    for (auto [n, count] : minimal) {
        auto r = run_census(config(n, true, SearchMode::redesigned));
        ok = ok && r.stats.candidates_distinct >= count;
        d << "n=" << n << ": " << r.stats.candidates_distinct << " candidates >= " << count << " minimal; ";
    }
    d << "minimal counts and timings not reproduced (needs minimality and P2-irreducibility tests)";
    return {ok, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"frequency table reproduction", table_reproduction},
        {"elimination ratio at least one half", elimination_ratio},
        {"layered solid torus counting", lst_counting},
        {"builtin identification", builtin_identification},
        {"theorem oracles", theorem_oracles},
        {"census candidate properties", census_properties},
        {"mode equivalence and speedup", mode_equivalence},
        {"Pachner and homology invariance", pachner_invariance},
        {"non-reproducible results declared", declared_non_reproducible},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, check] = criteria[i];
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s  %s  [%s] (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", name.c_str(),
                    o.detail.c_str(), secs);
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures ? 1 : 0;
}

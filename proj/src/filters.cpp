#include "fpg/filters.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fpg {

namespace {

constexpr std::array<std::string_view, kPruneTagCount> kTagNames = {
    "ReversedEdge", "DegreeOne", "DegreeTwo", "DegreeThreeDistinct",
    "ConeFace",     "L31Spine",  "TwoTriangleSphere", "UncompletableLink",
};

std::array<int, 3> face_vertices(int face) {
    std::array<int, 3> v{};
    for (int x = 0, k = 0; x < 4; ++x)
        if (x != face) v[k++] = x;
    return v;
}

// Each helper appends violations and returns true when it may stop early.
bool edges_into(const Skeleton& s, int n_total, const FilterSet& f, bool first_only, std::vector<PruneReason>& out) {
    const auto& edges = s.edges();
    auto push = [&](PruneTag tag, int e) {
        if (!f.enabled(tag)) return false;
        out.push_back({tag, e});
        return first_only;
    };
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        if (!edges[e].valid && push(PruneTag::ReversedEdge, e)) return true;
    if (n_total < 3) return false;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const EdgeOrbit& o = edges[e];
        if (!o.closed) continue;
        if (o.degree == 1 && push(PruneTag::DegreeOne, e)) return true;
        if (o.degree == 2 && push(PruneTag::DegreeTwo, e)) return true;
        if (o.degree == 3 && o.tets.size() == 3 && push(PruneTag::DegreeThreeDistinct, e)) return true;
    }
    return false;
}

bool cones_into(const Skeleton& s, int n_total, const FilterSet& f, bool first_only, std::vector<PruneReason>& out) {
    if (n_total < 3) return false;
    const bool cone = f.enabled(PruneTag::ConeFace), spine = f.enabled(PruneTag::L31Spine);
    if (!cone && !spine) return false;
    for (int id = 0; id < s.face_count(); ++id) {
        FaceSlot slot = s.faces()[id].slots.front();
        auto v = face_vertices(slot.face);
        if (cone) {
            for (int i = 0; i < 3; ++i) {
                int x = v[i], y = v[(i + 1) % 3], z = v[(i + 2) % 3];
                if (s.dir_class(slot.tet, x, y) == s.dir_class(slot.tet, x, z)) {
                    out.push_back({PruneTag::ConeFace, id});
                    if (first_only) return true;
                    break;
                }
            }
        }
        if (spine) {
            int ab = s.dir_class(slot.tet, v[0], v[1]);
            if (ab == s.dir_class(slot.tet, v[1], v[2]) && ab == s.dir_class(slot.tet, v[2], v[0])) {
                out.push_back({PruneTag::L31Spine, id});
                if (first_only) return true;
            }
        }
    }
    return false;
}

using Cycle = std::array<int, 3>;

bool same_sphere(const Skeleton& s, const Cycle& x, const Cycle& y) {
    for (int r = 0; r < 3; ++r) {
        if (y[0] == x[r] && y[1] == x[(r + 1) % 3] && y[2] == x[(r + 2) % 3]) return true;
        // Traverse x backwards, flipping each edge.
        if (y[0] == s.reverse_class(x[(r + 2) % 3]) && y[1] == s.reverse_class(x[(r + 1) % 3]) &&
            y[2] == s.reverse_class(x[r]))
            return true;
    }
    return false;
}

bool spheres_into(const Triangulation& t, const Skeleton& s, int n_total, bool first_only, std::vector<PruneReason>& out) {
    if (n_total < 3) return false;
    const int nf = s.face_count();
    std::vector<Cycle> cycle(nf);
    std::vector<char> usable(nf, 0);
    for (int id = 0; id < nf; ++id) {
        FaceSlot slot = s.faces()[id].slots.front();
        auto v = face_vertices(slot.face);
        for (int i = 0; i < 3; ++i) cycle[id][i] = s.dir_class(slot.tet, v[i], v[(i + 1) % 3]);
        int e0 = s.edge_of_class(cycle[id][0]), e1 = s.edge_of_class(cycle[id][1]), e2 = s.edge_of_class(cycle[id][2]);
        usable[id] = e0 != e1 && e1 != e2 && e0 != e2;
    }

    // Component sizes and unglued slot counts, for the separated-piece case.
    const int n = t.size();
    std::vector<int> comp(n, -1), comp_size, comp_open;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int c = static_cast<int>(comp_size.size());
        comp_size.push_back(0);
        comp_open.push_back(0);
        std::vector<int> stack{start};
        comp[start] = c;
        while (!stack.empty()) {
            int tet = stack.back();
            stack.pop_back();
            ++comp_size[c];
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.gluing(tet, f);
                if (!g) {
                    ++comp_open[c];
                } else if (comp[g->tet] < 0) {
                    comp[g->tet] = c;
                    stack.push_back(g->tet);
                }
            }
        }
    }

    for (int a = 0; a < nf; ++a) {
        if (!usable[a]) continue;
        for (int b = a + 1; b < nf; ++b) {
            if (!usable[b] || !same_sphere(s, cycle[a], cycle[b])) continue;
            bool closed = true;
            for (int i = 0; i < 3; ++i)
                if (!s.edges()[s.edge_of_class(cycle[a][i])].closed) closed = false;
            bool separated = false;
            const auto& fa = s.faces()[a];
            const auto& fb = s.faces()[b];
            if (fa.boundary() && fb.boundary()) {
                int c = comp[fa.slots[0].tet];
                separated = comp[fb.slots[0].tet] == c && comp_open[c] == 2 && comp_size[c] < n_total;
            }
            if (closed || separated) {
                out.push_back({PruneTag::TwoTriangleSphere, a});
                if (first_only) return true;
            }
        }
    }
    return false;
}

bool links_into(const Triangulation& t, const Skeleton& s, bool first_only, std::vector<PruneReason>& out) {
    for (const auto& link : vertex_links(t, s)) {
        if (link.orientable && link.euler + link.boundary_circles == 2) continue;
        out.push_back({PruneTag::UncompletableLink, link.vertex});
        if (first_only) return true;
    }
    return false;
}

bool run_checks(const Triangulation& t, int n_total, const FilterSet& f, bool first_only, std::vector<PruneReason>& out) {
    Skeleton s(t);
    if (edges_into(s, n_total, f, first_only, out)) return true;
    if (cones_into(s, n_total, f, first_only, out)) return true;
    if (!s.valid()) return !out.empty();
    if (f.enabled(PruneTag::TwoTriangleSphere) && spheres_into(t, s, n_total, first_only, out)) return true;
    if (f.enabled(PruneTag::UncompletableLink) && links_into(t, s, first_only, out)) return true;
    return !out.empty();
}

}  // namespace

std::string_view tag_name(PruneTag tag) { return kTagNames.at(static_cast<int>(tag)); }

std::optional<PruneTag> tag_from_name(std::string_view name) {
    for (int i = 0; i < kPruneTagCount; ++i)
        if (kTagNames[i] == name) return static_cast<PruneTag>(i);
    return std::nullopt;
}

const std::array<PruneTag, kPruneTagCount>& all_tags() {
    static const std::array<PruneTag, kPruneTagCount> tags = [] {
        std::array<PruneTag, kPruneTagCount> out{};
        for (int i = 0; i < kPruneTagCount; ++i) out[i] = static_cast<PruneTag>(i);
        return out;
    }();
    return tags;
}

std::vector<PruneReason> check_edges(const Skeleton& s, int n_total) {
    std::vector<PruneReason> out;
    edges_into(s, n_total, FilterSet{}, false, out);
    return out;
}

std::vector<PruneReason> check_edges(const Triangulation& t, int n_total) { return check_edges(Skeleton(t), n_total); }

std::vector<PruneReason> check_cone_and_spine_faces(const Skeleton& s, int n_total) {
    std::vector<PruneReason> out;
    cones_into(s, n_total, FilterSet{}, false, out);
    return out;
}

std::vector<PruneReason> check_cone_and_spine_faces(const Triangulation& t, int n_total) {
    return check_cone_and_spine_faces(Skeleton(t), n_total);
}

std::vector<PruneReason> check_two_triangle_sphere(const Triangulation& t, const Skeleton& s, int n_total) {
    std::vector<PruneReason> out;
    spheres_into(t, s, n_total, false, out);
    return out;
}

std::vector<PruneReason> check_two_triangle_sphere(const Triangulation& t, int n_total) {
    return check_two_triangle_sphere(t, Skeleton(t), n_total);
}

std::vector<PruneReason> link_completable_to_sphere(const Triangulation& t, const Skeleton& s) {
    std::vector<PruneReason> out;
    links_into(t, s, false, out);
    return out;
}

std::vector<PruneReason> link_completable_to_sphere(const Triangulation& t) {
    return link_completable_to_sphere(t, Skeleton(t));
}

std::vector<PruneReason> check_all(const Triangulation& t, int n_total, const FilterSet& filters) {
    std::vector<PruneReason> out;
    run_checks(t, n_total, filters, false, out);
    return out;
}

std::optional<PruneReason> first_violation(const Triangulation& t, int n_total, const FilterSet& filters) {
    std::vector<PruneReason> out;
    if (run_checks(t, n_total, filters, true, out)) return out.front();
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Double edges

Triangulation double_edge_piece(const DoubleEdgeConfig& c) {
    Triangulation t(2);
    t.glue(0, 3, 1, c.first);
    t.glue(0, 0, 1, c.second);
    return t;
}

namespace {

std::vector<Perm4> perms_mapping(int from, int to) {
    std::vector<Perm4> out;
    for (const Perm4& p : Perm4::all())
        if (p[from] == to) out.push_back(p);
    return out;
}

// The checks behind the double edge lemma: reversed edges, closed low-degree
// edges, cones and spines, with at least three tetrahedra assumed.
FilterSet double_edge_filters(const FilterSet& base) {
    FilterSet f = FilterSet::none();
    for (PruneTag tag : {PruneTag::ReversedEdge, PruneTag::DegreeOne, PruneTag::DegreeTwo, PruneTag::DegreeThreeDistinct,
                         PruneTag::ConeFace, PruneTag::L31Spine})
        f.set(tag, base.enabled(tag));
    return f;
}

}  // namespace

std::vector<DoubleEdgeConfig> allowed_double_edge_configurations(const FilterSet& filters, int n_total) {
    const FilterSet f = double_edge_filters(filters);
    std::vector<DoubleEdgeConfig> out;
    for (const Perm4& p : perms_mapping(3, 3))
        for (const Perm4& q : perms_mapping(0, 0)) {
            DoubleEdgeConfig c{p, q};
            if (!first_violation(double_edge_piece(c), n_total, f)) out.push_back(c);
        }
    return out;
}

DoubleEdgeClasses classify_double_edge_configurations() {
    DoubleEdgeClasses out;
    out.survivors = allowed_double_edge_configurations();
    for (const auto& c : out.survivors) {
        Triangulation t = double_edge_piece(c);
        std::string sig = iso_signature(t);
        auto it = std::find(out.class_signatures.begin(), out.class_signatures.end(), sig);
        if (it == out.class_signatures.end()) {
            out.class_signatures.push_back(sig);
            out.class_orientable.push_back(has_consistent_orientation(t));
            out.class_of.push_back(static_cast<int>(out.class_signatures.size()) - 1);
        } else {
            out.class_of.push_back(static_cast<int>(it - out.class_signatures.begin()));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Triple edges

namespace {

constexpr int A = 0, B = 1, C = 2, D = 3;
constexpr std::array<std::array<int, 3>, 3> kMatchFaces = {{{A, B, D}, {B, C, D}, {C, A, D}}};
constexpr std::array<int, 3> kMatchOpposite = {C, A, B};

// Image of each face's vertex triple under each symbol, as printed in the
// identification table: row per face, column per symbol (iota kappa alpha c l r).
constexpr std::array<std::array<std::array<int, 3>, 6>, 3> kMatchImages = {{
    {{{A, B, D}, {B, D, A}, {D, A, B}, {B, A, D}, {D, B, A}, {A, D, B}}},
    {{{B, C, D}, {C, D, B}, {D, B, C}, {C, B, D}, {D, C, B}, {B, D, C}}},
    {{{C, A, D}, {A, D, C}, {D, C, A}, {A, C, D}, {D, A, C}, {C, D, A}}},
}};

constexpr std::array<MatchSymbol, 6> kSymbols = {MatchSymbol::iota, MatchSymbol::kappa, MatchSymbol::alpha,
                                                 MatchSymbol::c,    MatchSymbol::l,     MatchSymbol::r};

Perm4 symbol_perm(int position, MatchSymbol s) {
    std::array<int, 4> img{};
    const auto& src = kMatchFaces[position];
    const auto& dst = kMatchImages[position][static_cast<int>(s)];
    for (int i = 0; i < 3; ++i) img[src[i]] = dst[i];
    img[kMatchOpposite[position]] = kMatchOpposite[position];
    return Perm4(img[0], img[1], img[2], img[3]);
}

std::vector<MatchingString> all_matchings() {
    std::vector<MatchingString> out;
    for (auto a : kSymbols)
        for (auto b : kSymbols)
            for (auto c : kSymbols) out.push_back({a, b, c});
    return out;
}

MatchingString rotate(const MatchingString& m, int r) { return {m[r % 3], m[(r + 1) % 3], m[(r + 2) % 3]}; }

// Two gluings at consecutive positions, as a piece checked by the double edge lemma.
bool pair_allowed(int position, MatchSymbol first, MatchSymbol second) {
    Triangulation t(2);
    int p0 = position, p1 = (position + 1) % 3;
    t.glue(0, kMatchOpposite[p0], 1, symbol_perm(p0, first));
    t.glue(0, kMatchOpposite[p1], 1, symbol_perm(p1, second));
    return !first_violation(t, 3, double_edge_filters(FilterSet{}));
}

}  // namespace

std::string symbol_name(MatchSymbol s) {
    static constexpr std::array<std::string_view, 6> names = {"i", "k", "a", "c", "l", "r"};
    return std::string(names[static_cast<int>(s)]);
}

std::string matching_name(const MatchingString& m) { return symbol_name(m[0]) + symbol_name(m[1]) + symbol_name(m[2]); }

MatchingString parse_matching(std::string_view text) {
    if (text.size() != 3) throw std::invalid_argument("matching string must have three symbols");
    MatchingString m{};
    for (int i = 0; i < 3; ++i) {
        bool found = false;
        for (auto s : kSymbols)
            if (symbol_name(s)[0] == text[i]) {
                m[i] = s;
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown matching symbol '" + std::string(1, text[i]) + "'");
    }
    return m;
}

Triangulation matching_assembly(const MatchingString& m) {
    Triangulation t(2);
    for (int i = 0; i < 3; ++i) t.glue(0, kMatchOpposite[i], 1, symbol_perm(i, m[i]));
    return t;
}

std::vector<PruneTag> matching_flags(const MatchingString& m) {
    std::vector<PruneTag> tags;
    for (const auto& r : check_all(matching_assembly(m), 3))
        if (std::find(tags.begin(), tags.end(), r.tag) == tags.end()) tags.push_back(r.tag);
    std::sort(tags.begin(), tags.end());
    return tags;
}

std::string TripleEdgeReport::summary() const {
    std::ostringstream os;
    os << "matchings flagged: " << flagged << "/216";
    if (!unflagged.empty()) {
        os << " (unflagged:";
        for (const auto& u : unflagged) os << ' ' << u;
        os << ")";
    }
    os << "\nadjacency table " << (adjacency_matches_expected ? "matches" : "DIFFERS FROM") << " the expected table"
       << (adjacency_consistent ? "" : " (inconsistent across positions)") << "\n";
    os << "survivors up to rotation (" << rotation_classes.size() << "):";
    for (const auto& s : rotation_classes) os << ' ' << s;
    os << (rotation_classes_match_expected ? "" : "  [mismatch]") << "\n";
    os << "survivors up to isomorphism (" << isomorphism_classes.size() << "):";
    for (const auto& s : isomorphism_classes) os << ' ' << s;
    os << (isomorphism_classes_match_expected ? "" : "  [mismatch]") << "\n";
    for (const auto& [name, tags] : representative_flags) {
        os << "  " << name << ":";
        for (auto t : tags) os << ' ' << tag_name(t);
        os << "\n";
    }
    os << "categories " << (categories_match_expected ? "match" : "DO NOT MATCH") << "\n";
    return os.str();
}

TripleEdgeReport triple_edge_report() {
    TripleEdgeReport rep;
    const auto matchings = all_matchings();

    static const std::set<PruneTag> accepted = {PruneTag::ConeFace,  PruneTag::TwoTriangleSphere,
                                                PruneTag::UncompletableLink, PruneTag::ReversedEdge,
                                                PruneTag::DegreeOne, PruneTag::DegreeTwo};
    for (const auto& m : matchings) {
        bool hit = false;
        for (auto tag : matching_flags(m))
            if (accepted.count(tag)) hit = true;
        if (hit) ++rep.flagged;
        else rep.unflagged.push_back(matching_name(m));
    }
    rep.all_flagged = rep.unflagged.empty();

    // Adjacency derived at each cyclic position; the three tables should agree.
    std::array<std::map<MatchSymbol, std::vector<MatchSymbol>>, 3> tables;
    for (int pos = 0; pos < 3; ++pos)
        for (auto a : kSymbols)
            for (auto b : kSymbols)
                if (pair_allowed(pos, a, b)) tables[pos][a].push_back(b);
    rep.adjacency = tables[0];
    rep.adjacency_consistent = tables[0] == tables[1] && tables[1] == tables[2];
    {
        using S = MatchSymbol;
        const std::map<S, std::vector<S>> expected_table = {
            {S::iota, {S::kappa, S::alpha}},
            {S::kappa, {S::iota, S::kappa, S::c, S::r}},
            {S::alpha, {S::iota, S::alpha, S::c, S::r}},
            {S::c, {S::kappa, S::alpha, S::l, S::r}},
            {S::l, {S::kappa, S::alpha, S::c, S::l}},
            {S::r, {S::c, S::r}},
        };
        rep.adjacency_matches_expected = rep.adjacency == expected_table;
    }

    auto follows = [&](MatchSymbol a, MatchSymbol b) {
        auto it = rep.adjacency.find(a);
        return it != rep.adjacency.end() && std::find(it->second.begin(), it->second.end(), b) != it->second.end();
    };
    std::vector<MatchingString> survivors;
    for (const auto& m : matchings)
        if (follows(m[0], m[1]) && follows(m[1], m[2]) && follows(m[2], m[0])) survivors.push_back(m);

    // Up to rotation: keep the first rotation in symbol order as representative.
    std::set<MatchingString> rot;
    for (const auto& m : survivors) rot.insert(std::min({m, rotate(m, 1), rotate(m, 2)}));
    for (const auto& m : rot) rep.rotation_classes.push_back(matching_name(m));
    {
        std::set<MatchingString> expected_table;
        for (auto name : {"ikk", "iaa", "kkk", "aaa", "kkc", "aac", "kcl", "krc", "acl", "arc", "cll", "crr", "lll", "rrr"}) {
            auto m = parse_matching(name);
            expected_table.insert(std::min({m, rotate(m, 1), rotate(m, 2)}));
        }
        rep.rotation_classes_match_expected = expected_table == rot;
    }

    // Up to isomorphism of the two-tetrahedron pieces (rotations, reflections, swaps).
    const std::vector<std::string> six = {"ikk", "kkk", "kkc", "kcl", "cll", "lll"};
    std::map<std::string, std::string> class_rep;  // signature -> representative name
    for (const auto& m : survivors) {
        std::string sig = iso_signature(matching_assembly(m));
        std::string name = matching_name(m);
        auto it = class_rep.find(sig);
        bool preferred = std::find(six.begin(), six.end(), name) != six.end();
        if (it == class_rep.end()) class_rep[sig] = name;
        else if (preferred) it->second = name;
    }
    for (const auto& [sig, name] : class_rep) rep.isomorphism_classes.push_back(name);
    std::sort(rep.isomorphism_classes.begin(), rep.isomorphism_classes.end());
    {
        std::set<std::string> expected;
        for (const auto& name : six) expected.insert(iso_signature(matching_assembly(parse_matching(name))));
        std::set<std::string> got;
        for (const auto& [sig, name] : class_rep) got.insert(sig);
        rep.isomorphism_classes_match_expected = expected == got && expected.size() == six.size();
    }

    const std::map<std::string, PruneTag> category = {
        {"ikk", PruneTag::ConeFace},          {"kcl", PruneTag::ConeFace},
        {"kkk", PruneTag::TwoTriangleSphere}, {"kkc", PruneTag::TwoTriangleSphere},
        {"cll", PruneTag::UncompletableLink}, {"lll", PruneTag::UncompletableLink},
    };
    rep.categories_match_expected = true;
    for (const auto& [name, tag] : category) {
        auto flags = matching_flags(parse_matching(name));
        rep.representative_flags[name] = flags;
        if (std::find(flags.begin(), flags.end(), tag) == flags.end()) rep.categories_match_expected = false;
    }
    return rep;
}

bool verify_triple_edge_theorem() {
    TripleEdgeReport rep = triple_edge_report();
    return rep.all_flagged && rep.isomorphism_classes_match_expected;
}

}  // namespace fpg

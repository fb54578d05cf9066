#include "fpg/lst.hpp"

#include <set>
#include <stdexcept>

#include "fpg/filters.hpp"

namespace fpg {

const std::array<Perm4, 2>& lst_base_gluings() {
    static const std::array<Perm4, 2> table = [] {
        std::vector<Perm4> keep;
        for (const Perm4& p : Perm4::all()) {
            if (p[2] != 3 || p.sign() != -1) continue;
            Triangulation t(1);
            t.glue(0, 2, 0, p);
            Skeleton s(t);
            bool ok = s.valid();
            for (const auto& e : s.edges())
                if (e.closed && e.degree == 1) ok = false;
            if (ok) keep.push_back(p);
        }
        if (keep.size() != 2) throw std::logic_error("layered solid torus base: expected two admissible self-gluings");
        return std::array<Perm4, 2>{keep[0], keep[1]};
    }();
    return table;
}

namespace {

std::vector<FaceSlot> boundary_slots(const Triangulation& t) {
    std::vector<FaceSlot> out;
    for (int tet = 0; tet < t.size(); ++tet)
        for (int f = 0; f < 4; ++f)
            if (!t.is_glued(tet, f)) out.push_back({tet, f});
    return out;
}

std::array<int, 3> boundary_edges_of(const Triangulation& t, const Skeleton& s) {
    std::set<int> edges;
    for (FaceSlot slot : boundary_slots(t))
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (a != slot.face && b != slot.face) edges.insert(s.edge_of(slot.tet, a, b));
    if (edges.size() != 3) throw std::logic_error("layered solid torus: boundary should carry three edges");
    std::array<int, 3> out{};
    std::copy(edges.begin(), edges.end(), out.begin());
    return out;
}

LstDescriptor describe(const Triangulation& t, int base, std::vector<int> choices) {
    LstDescriptor d;
    d.tet_count = t.size();
    d.base_choice = base;
    d.layer_choices = std::move(choices);
    auto slots = boundary_slots(t);
    if (slots.size() != 2) throw std::logic_error("layered solid torus: expected two boundary faces");
    d.boundary = {slots[0], slots[1]};
    d.boundary_edges = boundary_edges_of(t, Skeleton(t));
    return d;
}

// Directed edge x -> y of face `face` of tet lying in directed class cls.
bool find_directed(const Skeleton& s, int tet, int face, int cls, int& x, int& y) {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (a != b && a != face && b != face && s.dir_class(tet, a, b) == cls) {
                x = a;
                y = b;
                return true;
            }
    return false;
}

}  // namespace

LstEntry lst_base(int choice) {
    if (choice != 0 && choice != 1) throw std::invalid_argument("lst_base: choice must be 0 or 1");
    Triangulation t(1);
    t.glue(0, 2, 0, lst_base_gluings()[choice]);
    return {describe(t, choice, {}), t};
}

Triangulation layer_on(const Triangulation& t, int edge) {
    Skeleton s(t);
    if (edge < 0 || edge >= s.edge_count()) throw TriangulationError("layer_on: edge orbit out of range");
    std::vector<FaceSlot> flank;
    for (FaceSlot slot : boundary_slots(t)) {
        int x, y;
        if (find_directed(s, slot.tet, slot.face, s.edges()[edge].positive_class, x, y)) flank.push_back(slot);
    }
    if (flank.size() != 2) throw TriangulationError("layer_on: edge must be flanked by exactly two boundary faces");

    Triangulation out = t;
    int fresh = out.add_tetrahedron();
    const int cls = s.edges()[edge].positive_class;
    const std::array<int, 2> new_face = {3, 2};
    for (int k = 0; k < 2; ++k) {
        FaceSlot slot = flank[k];
        int x = 0, y = 0;
        find_directed(s, slot.tet, slot.face, cls, x, y);
        int z = 6 - slot.face - x - y;
        int apex = new_face[k] == 3 ? 2 : 3;  // the vertex of the new face besides 0 and 1
        std::array<int, 4> img{};
        img[0] = x;
        img[1] = y;
        img[apex] = z;
        img[new_face[k]] = slot.face;
        out.glue(fresh, new_face[k], slot.tet, Perm4(img[0], img[1], img[2], img[3]));
    }
    return out;
}

std::vector<int> admissible_layerings(const Triangulation& t) {
    Skeleton s(t);
    std::vector<int> out;
    for (int e : boundary_edges_of(t, s)) {
        Triangulation next = layer_on(t, e);
        bool degree_two = false;
        for (const auto& orbit : Skeleton(next).edges())
            if (orbit.closed && orbit.degree == 2) degree_two = true;
        if (!degree_two) out.push_back(e);
    }
    return out;
}

std::vector<LstEntry> enumerate_lsts(int t) {
    if (t < 1 || t > 12) throw std::invalid_argument("enumerate_lsts: t must lie in [1, 12]");
    std::vector<LstEntry> out;
    for (int base = 0; base < 2; ++base) {
        // Breadth-first over layer choices keeps the output in lexicographic order.
        std::vector<std::pair<std::vector<int>, Triangulation>> level = {{{}, lst_base(base).second}};
        for (int layer = 1; layer < t; ++layer) {
            std::vector<std::pair<std::vector<int>, Triangulation>> next;
            for (auto& [choices, tri] : level) {
                auto options = admissible_layerings(tri);
                if (options.size() != 2)
                    throw std::logic_error("layered solid torus: expected two admissible layerings, found " +
                                           std::to_string(options.size()));
                for (int bit = 0; bit < 2; ++bit) {
                    auto c = choices;
                    c.push_back(bit);
                    next.emplace_back(std::move(c), layer_on(tri, options[bit]));
                }
            }
            level = std::move(next);
        }
        for (auto& [choices, tri] : level) out.emplace_back(describe(tri, base, choices), std::move(tri));
    }
    return out;
}

int count_distinct_lst_signatures(const std::vector<LstEntry>& lsts) {
    std::set<std::string> sigs;
    for (const auto& [d, t] : lsts) sigs.insert(iso_signature(t));
    return static_cast<int>(sigs.size());
}

std::vector<Triangulation> lst_layout_instances(int t) {
    const auto lsts = enumerate_lsts(t);
    const Perm4 front = Perm4::transposition(0, 1), back = Perm4::transposition(2, 3);
    std::set<std::string> seen;
    std::vector<Triangulation> out;
    std::vector<int> identity(t);
    for (int i = 0; i < t; ++i) identity[i] = i;
    // Bit 0 swaps the base loop faces, bit i (1 <= i < t) the double edge
    // between tetrahedra i-1 and i, bit t the boundary faces.
    for (const auto& [d, tri] : lsts) {
        for (unsigned mask = 0; mask < (1u << (t + 1)); ++mask) {
            std::vector<Perm4> relab(t);
            for (int i = 0; i < t; ++i) {
                Perm4 p;
                if (mask >> i & 1u) p = back * p;
                if (mask >> (i + 1) & 1u) p = front * p;
                relab[i] = p;
            }
            Triangulation r = relabel(tri, identity, relab);
            if (seen.insert(serialize_tri(r)).second) out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace fpg

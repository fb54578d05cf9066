#include "fpg/triangulation.hpp"

#include <algorithm>
#include <deque>

#include "dsu.hpp"
#include "fpg/multigraph.hpp"

namespace fpg {

Triangulation::Triangulation(int size) {
    if (size < 0) throw std::invalid_argument("Triangulation: negative size");
    slots_.resize(size);
}

int Triangulation::add_tetrahedron() {
    slots_.emplace_back();
    return size() - 1;
}

void Triangulation::check_tet(int tet) const {
    if (tet < 0 || tet >= size())
        throw TriangulationError("tetrahedron " + std::to_string(tet) + " out of range (size " +
                                 std::to_string(size()) + ")");
}

void Triangulation::glue(int tet, int face, int target, Perm4 perm) {
    check_tet(tet);
    check_tet(target);
    if (face < 0 || face > 3) throw TriangulationError("face index out of range");
    int target_face = perm[face];
    if (tet == target && target_face == face)
        throw TriangulationError("cannot glue face " + std::to_string(face) + " of tetrahedron " +
                                 std::to_string(tet) + " to itself");
    if (slots_[tet][face] || slots_[target][target_face])
        throw TriangulationError("face slot already glued");
    slots_[tet][face] = Gluing{target, perm};
    slots_[target][target_face] = Gluing{tet, perm.inverse()};
}

void Triangulation::unglue(int tet, int face) {
    check_tet(tet);
    if (face < 0 || face > 3) throw TriangulationError("face index out of range");
    auto& g = slots_[tet][face];
    if (!g) throw TriangulationError("face slot is not glued");
    slots_[g->tet][g->perm[face]].reset();
    g.reset();
}

int Triangulation::glued_slot_count() const {
    int count = 0;
    for (const auto& tet : slots_)
        for (const auto& g : tet)
            if (g) ++count;
    return count;
}

bool Triangulation::all_faces_glued() const { return glued_slot_count() == 4 * size(); }

int edge_index(int a, int b) {
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

std::array<int, 2> edge_vertices(int e) {
    static constexpr std::array<std::array<int, 2>, 6> table{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return table.at(e);
}

Skeleton::Skeleton(const Triangulation& t) : size_(t.size()) {
    const int n = t.size();
    detail::Dsu vert(4 * n), dir(16 * n), face(4 * n);
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (!g) continue;
            const Perm4 p = g->perm;
            face.unite(4 * tet + f, 4 * g->tet + p[f]);
            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                vert.unite(4 * tet + a, 4 * g->tet + p[a]);
                for (int b = 0; b < 4; ++b)
                    if (b != f && b != a) dir.unite(16 * tet + 4 * a + b, 16 * g->tet + 4 * p[a] + p[b]);
            }
        }
    }

    auto compress = [](detail::Dsu& dsu, int count, auto&& include, std::vector<int>& out) {
        std::vector<int> id(count, -1);
        out.assign(count, -1);
        int next = 0;
        for (int i = 0; i < count; ++i) {
            if (!include(i)) continue;
            int r = dsu.find(i);
            if (id[r] < 0) id[r] = next++;
            out[i] = id[r];
        }
        return next;
    };

    int nv = compress(vert, 4 * n, [](int) { return true; }, vertex_of_);
    vertex_reps_.resize(nv);

    int nf = compress(face, 4 * n, [](int) { return true; }, face_of_);
    faces_.resize(nf);
    for (int i = 0; i < 4 * n; ++i) faces_[face_of_[i]].slots.push_back(FaceSlot{i / 4, i % 4});

    int nd = compress(dir, 16 * n, [](int i) { return (i % 16) / 4 != i % 4; }, dir_class_);
    reverse_.assign(nd, -1);
    for (int i = 0; i < 16 * n; ++i) {
        int a = (i % 16) / 4, b = i % 4;
        if (a == b) continue;
        int rev = dir_class_[i - 4 * a - b + 4 * b + a];
        reverse_[dir_class_[i]] = rev;
    }

    edge_of_class_.assign(nd, -1);
    for (int i = 0; i < 16 * n; ++i) {
        int a = (i % 16) / 4, b = i % 4;
        if (a == b) continue;
        int cls = dir_class_[i];
        if (edge_of_class_[cls] >= 0) continue;
        EdgeOrbit orbit;
        orbit.positive_class = cls;
        orbit.valid = reverse_[cls] != cls;
        if (!orbit.valid) valid_ = false;
        edge_of_class_[cls] = edge_of_class_[reverse_[cls]] = static_cast<int>(edges_.size());
        edges_.push_back(orbit);
    }

    for (int tet = 0; tet < n; ++tet) {
        for (int e = 0; e < 6; ++e) {
            auto [a, b] = edge_vertices(e);
            EdgeOrbit& orbit = edges_[edge_of(tet, a, b)];
            ++orbit.degree;
            if (orbit.tets.empty() || orbit.tets.back() != tet) orbit.tets.push_back(tet);
            for (int f = 0; f < 4; ++f)
                if (f != a && f != b && !t.is_glued(tet, f)) orbit.closed = false;
        }
    }
}

Skeleton compute_skeleton(const Triangulation& t) { return Skeleton(t); }

std::vector<LinkSurface> vertex_links(const Triangulation& t) { return vertex_links(t, Skeleton(t)); }

std::vector<LinkSurface> vertex_links(const Triangulation& t, const Skeleton& s) {
    if (!s.valid()) throw TriangulationError("vertex links require a skeleton without reversed edges");
    const int n = t.size();
    const int nv = s.vertex_count();
    std::vector<LinkSurface> links(nv);
    for (int v = 0; v < nv; ++v) links[v].vertex = v;

    // Link vertices are directed edge classes leaving the vertex orbit.
    std::vector<int> link_vertex_owner(s.dir_class_count(), -1);
    std::vector<int> edge_halves(nv, 0), unglued_corners(nv, 0);
    detail::Dsu boundary(s.dir_class_count());
    std::vector<char> touches_boundary(s.dir_class_count(), 0);

    for (int tet = 0; tet < n; ++tet) {
        for (int v = 0; v < 4; ++v) {
            int orbit = s.vertex_of(tet, v);
            ++links[orbit].triangle_count;
            for (int w = 0; w < 4; ++w)
                if (w != v) link_vertex_owner[s.dir_class(tet, v, w)] = orbit;
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                if (t.is_glued(tet, f)) {
                    ++edge_halves[orbit];
                    continue;
                }
                ++unglued_corners[orbit];
                int w1 = -1, w2 = -1;
                for (int w = 0; w < 4; ++w) {
                    if (w == v || w == f) continue;
                    (w1 < 0 ? w1 : w2) = w;
                }
                int c1 = s.dir_class(tet, v, w1), c2 = s.dir_class(tet, v, w2);
                boundary.unite(c1, c2);
                touches_boundary[c1] = touches_boundary[c2] = 1;
            }
        }
    }

    std::vector<int> link_vertices(nv, 0);
    for (int c = 0; c < s.dir_class_count(); ++c)
        if (link_vertex_owner[c] >= 0) ++link_vertices[link_vertex_owner[c]];
    std::vector<char> counted(s.dir_class_count(), 0);
    for (int c = 0; c < s.dir_class_count(); ++c) {
        if (!touches_boundary[c]) continue;
        int r = boundary.find(c);
        if (counted[r]) continue;
        counted[r] = 1;
        ++links[link_vertex_owner[c]].boundary_circles;
    }

    // Sign 2-colouring of corner triangles: s * s' = -sign(p) across each glued corner.
    std::vector<int> sign(4 * n, 0);
    for (int start = 0; start < 4 * n; ++start) {
        if (sign[start]) continue;
        sign[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            int tet = cur / 4, v = cur % 4;
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                const auto& g = t.gluing(tet, f);
                if (!g) continue;
                int next = 4 * g->tet + g->perm[v];
                int want = -g->perm.sign() * sign[cur];
                if (!sign[next]) {
                    sign[next] = want;
                    queue.push_back(next);
                } else if (sign[next] != want) {
                    links[s.vertex_of(tet, v)].orientable = false;
                }
            }
        }
    }

    for (int v = 0; v < nv; ++v) {
        int edges = edge_halves[v] / 2 + unglued_corners[v];
        links[v].euler = link_vertices[v] - edges + links[v].triangle_count;
    }
    return links;
}

bool is_closed_3manifold(const Triangulation& t) {
    if (!t.all_faces_glued()) return false;
    Skeleton s(t);
    if (!s.valid()) return false;
    for (const auto& link : vertex_links(t, s))
        if (link.euler != 2 || link.boundary_circles != 0 || !link.orientable) return false;
    return true;
}

std::optional<std::vector<int>> orientation_signs(const Triangulation& t) {
    const int n = t.size();
    std::vector<int> sigma(n, 0);
    for (int start = 0; start < n; ++start) {
        if (sigma[start]) continue;
        sigma[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int tet = queue.front();
            queue.pop_front();
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.gluing(tet, f);
                if (!g) continue;
                int want = -g->perm.sign() * sigma[tet];
                if (!sigma[g->tet]) {
                    sigma[g->tet] = want;
                    queue.push_back(g->tet);
                } else if (sigma[g->tet] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return sigma;
}

bool has_consistent_orientation(const Triangulation& t) { return orientation_signs(t).has_value(); }

bool is_orientable(const Triangulation& t) {
    if (!t.all_faces_glued()) throw TriangulationError("is_orientable: triangulation has unglued faces");
    return has_consistent_orientation(t);
}

int euler_characteristic(const Triangulation& t) {
    Skeleton s(t);
    return s.vertex_count() - s.edge_count() + s.face_count() - t.size();
}

bool is_connected(const Triangulation& t) {
    const int n = t.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int tet = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (g && !seen[g->tet]) {
                seen[g->tet] = 1;
                ++reached;
                stack.push_back(g->tet);
            }
        }
    }
    return reached == n;
}

namespace {

// Breadth-first relabeling from (start, rho), where rho maps old vertex labels
// of the start tetrahedron to new ones.  Two integers per face: (-1, 0) for
// unglued, otherwise (new target label, rank of the relabeled perm).
// Returns true and fills `best` when the encoding beats the current best;
// stops early as soon as it is known to lose.
bool encode(const Triangulation& t, int start, Perm4 rho, std::vector<int>& best, bool have_best,
            std::vector<int>& label, std::vector<Perm4>& relab, std::vector<int>& order, std::vector<int>& code) {
    const int n = t.size();
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    code.clear();
    label[start] = 0;
    relab[start] = rho;
    order.push_back(start);
    bool better = !have_best;
    auto emit = [&](int value) {
        if (!better) {
            int pos = static_cast<int>(code.size());
            if (value > best[pos]) return false;
            if (value < best[pos]) better = true;
        }
        code.push_back(value);
        return true;
    };
    for (int idx = 0; idx < n; ++idx) {
        if (idx >= static_cast<int>(order.size())) throw TriangulationError("iso_signature: disconnected triangulation");
        int tet = order[idx];
        Perm4 inv = relab[tet].inverse();
        for (int nf = 0; nf < 4; ++nf) {
            int of = inv[nf];
            const auto& g = t.gluing(tet, of);
            if (!g) {
                if (!emit(-1) || !emit(0)) return false;
                continue;
            }
            if (label[g->tet] < 0) {
                label[g->tet] = static_cast<int>(order.size());
                relab[g->tet] = relab[tet] * g->perm.inverse();
                order.push_back(g->tet);
            }
            Perm4 np = relab[g->tet] * g->perm * inv;
            if (!emit(label[g->tet]) || !emit(np.index())) return false;
        }
    }
    if (!better) return false;
    best = code;
    return true;
}

}  // namespace

std::string iso_signature(const Triangulation& t) {
    const int n = t.size();
    if (n == 0) return "";
    if (!is_connected(t)) throw TriangulationError("iso_signature: disconnected triangulation");
    std::vector<int> best, label(n), order, code;
    std::vector<Perm4> relab(n);
    bool have = false;
    for (int start = 0; start < n; ++start)
        for (const Perm4& rho : Perm4::all())
            if (encode(t, start, rho, best, have, label, relab, order, code)) have = true;

    std::string out;
    for (int tet = 0; tet < n; ++tet) {
        if (tet) out += '|';
        for (int f = 0; f < 4; ++f) {
            if (f) out += ';';
            int target = best[8 * tet + 2 * f];
            if (target < 0) {
                out += 'b';
                continue;
            }
            out += std::to_string(target);
            out += ':';
            out += Perm4::all()[best[8 * tet + 2 * f + 1]].str();
        }
    }
    return out;
}

Triangulation relabel(const Triangulation& t, const std::vector<int>& tet_perm, const std::vector<Perm4>& vertex_perms) {
    const int n = t.size();
    if (static_cast<int>(tet_perm.size()) != n || static_cast<int>(vertex_perms.size()) != n)
        throw std::invalid_argument("relabel: size mismatch");
    Triangulation out(n);
    for (int tet = 0; tet < n; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (!g) continue;
            int nt = tet_perm[tet], nf = vertex_perms[tet][f];
            if (out.is_glued(nt, nf)) continue;
            out.glue(nt, nf, tet_perm[g->tet], vertex_perms[g->tet] * g->perm * vertex_perms[tet].inverse());
        }
    }
    return out;
}

MultiGraph face_pairing_graph_of(const Triangulation& t) {
    if (t.size() > kMaxGraphOrder) throw GraphError("face pairing graph: more than 16 tetrahedra");
    MultiGraph g(t.size());
    for (int tet = 0; tet < t.size(); ++tet) {
        for (int f = 0; f < 4; ++f) {
            const auto& gl = t.gluing(tet, f);
            if (!gl) continue;
            // Count each glued pair once, from its lexicographically smaller slot.
            if (FaceSlot{tet, f} < FaceSlot{gl->tet, gl->perm[f]}) g.add_edge(tet, gl->tet);
        }
    }
    return g;
}

}  // namespace fpg

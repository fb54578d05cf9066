#include <algorithm>
#include <map>

#include "fpg/triangulation.hpp"

namespace fpg {

namespace {

// Face f of a new tetrahedron: either glued to another new tetrahedron, or
// inheriting the old gluing of face old_face of old_tet.  For inherited faces
// phi maps new vertex labels onto old_tet's labels, with phi[f] == old_face.
struct NewFace {
    bool internal = false;
    int target = 0;
    Perm4 perm;
    int old_tet = 0;
    int old_face = 0;
    Perm4 phi;
};

using NewTet = std::array<NewFace, 4>;

NewFace internal_face(int target, Perm4 perm) {
    NewFace f;
    f.internal = true;
    f.target = target;
    f.perm = perm;
    return f;
}

NewFace inherited_face(int old_tet, int old_face, Perm4 phi) {
    NewFace f;
    f.old_tet = old_tet;
    f.old_face = old_face;
    f.phi = phi;
    return f;
}

// Replaces the tetrahedra in `removed` by `fresh`, appended after the kept
// tetrahedra (which keep their relative order).
Triangulation retriangulate(const Triangulation& t, const std::vector<int>& removed, const std::vector<NewTet>& fresh) {
    const int n = t.size();
    std::vector<int> index(n, -1);
    int kept = 0;
    for (int tet = 0; tet < n; ++tet)
        if (std::find(removed.begin(), removed.end(), tet) == removed.end()) index[tet] = kept++;
    Triangulation out(kept + static_cast<int>(fresh.size()));

    std::map<std::pair<int, int>, std::pair<int, int>> inherited;  // old slot -> (new tet, face)
    for (int k = 0; k < static_cast<int>(fresh.size()); ++k)
        for (int f = 0; f < 4; ++f)
            if (!fresh[k][f].internal) inherited[{fresh[k][f].old_tet, fresh[k][f].old_face}] = {kept + k, f};

    for (int tet = 0; tet < n; ++tet) {
        if (index[tet] < 0) continue;
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing(tet, f);
            if (!g || index[g->tet] < 0 || out.is_glued(index[tet], f)) continue;
            out.glue(index[tet], f, index[g->tet], g->perm);
        }
    }

    for (int k = 0; k < static_cast<int>(fresh.size()); ++k) {
        int nt = kept + k;
        for (int f = 0; f < 4; ++f) {
            if (out.is_glued(nt, f)) continue;
            const NewFace& nf = fresh[k][f];
            if (nf.internal) {
                out.glue(nt, f, kept + nf.target, nf.perm);
                continue;
            }
            const auto& g = t.gluing(nf.old_tet, nf.old_face);
            if (!g) continue;
            Perm4 through = g->perm * nf.phi;  // new labels -> labels of the old neighbour
            if (index[g->tet] >= 0) {
                out.glue(nt, f, index[g->tet], through);
                continue;
            }
            auto it = inherited.find({g->tet, g->perm[nf.old_face]});
            if (it == inherited.end()) throw TriangulationError("retriangulate: dangling gluing into a removed tetrahedron");
            auto [k2, f2] = it->second;
            Perm4 perm = fresh[k2 - kept][f2].phi.inverse() * through;
            if (perm[f] != f2) throw TriangulationError("retriangulate: inconsistent face correspondence");
            out.glue(nt, f, k2, perm);
        }
    }
    return out;
}

Perm4 from_images(const std::array<int, 4>& img) { return Perm4(img[0], img[1], img[2], img[3]); }

}  // namespace

Triangulation pachner_23(const Triangulation& t, int face_orbit) {
    Skeleton s(t);
    if (face_orbit < 0 || face_orbit >= s.face_count()) throw TriangulationError("pachner_23: face orbit out of range");
    const FaceOrbit& orbit = s.faces()[face_orbit];
    if (orbit.boundary()) throw TriangulationError("pachner_23: face is on the boundary");
    const int t0 = orbit.slots[0].tet, f0 = orbit.slots[0].face;
    const Gluing g = *t.gluing(t0, f0);
    const int t1 = g.tet;
    if (t0 == t1) throw TriangulationError("pachner_23: both sides of the face lie in one tetrahedron");
    const Perm4 p = g.perm;
    const int f1 = p[f0];

    std::array<int, 3> u{};
    for (int v = 0, k = 0; v < 4; ++v)
        if (v != f0) u[k++] = v;

    // New tetrahedron i has vertices (apex0, apex1, u[i+1], u[i+2]).
    std::vector<NewTet> fresh(3);
    const Perm4 swap23(0, 1, 3, 2);
    for (int i = 0; i < 3; ++i) {
        int a = u[(i + 1) % 3], b = u[(i + 2) % 3], c = u[i];
        fresh[i][0] = inherited_face(t1, p[c], from_images({p[c], f1, p[a], p[b]}));
        fresh[i][1] = inherited_face(t0, c, from_images({f0, c, a, b}));
        fresh[i][2] = internal_face((i + 1) % 3, swap23);
        fresh[i][3] = internal_face((i + 2) % 3, swap23);
    }
    return retriangulate(t, {t0, t1}, fresh);
}

Triangulation pachner_32(const Triangulation& t, int edge_orbit) {
    Skeleton s(t);
    if (edge_orbit < 0 || edge_orbit >= s.edge_count()) throw TriangulationError("pachner_32: edge orbit out of range");
    const EdgeOrbit& orbit = s.edges()[edge_orbit];
    if (orbit.degree != 3 || orbit.tets.size() != 3)
        throw TriangulationError("pachner_32: edge must have degree three and meet three distinct tetrahedra");
    if (!orbit.closed || !orbit.valid) throw TriangulationError("pachner_32: edge must be internal and valid");

    // Abstract labels: X, Y (the edge), P0, P1, P2 (the ring).
    enum { X = 0, Y = 1, P0 = 2 };
    std::array<int, 3> ring{};
    std::array<std::array<int, 5>, 3> loc{};
    for (auto& l : loc) l.fill(-1);

    bool found = false;
    for (int tet = 0; tet < t.size() && !found; ++tet) {
        for (int e = 0; e < 6 && !found; ++e) {
            auto [x, y] = edge_vertices(e);
            if (s.edge_of(tet, x, y) != edge_orbit) continue;
            found = true;
            ring[0] = tet;
            loc[0][X] = x;
            loc[0][Y] = y;
            int k = 0;
            for (int v = 0; v < 4; ++v)
                if (v != x && v != y) loc[0][P0 + k++] = v;
        }
    }

    for (int j = 0; j < 2; ++j) {
        int pj = P0 + j, pnext = P0 + j + 1, pafter = P0 + (j + 2) % 3;
        const auto& g = t.gluing(ring[j], loc[j][pj]);
        ring[j + 1] = g->tet;
        loc[j + 1][X] = g->perm[loc[j][X]];
        loc[j + 1][Y] = g->perm[loc[j][Y]];
        loc[j + 1][pnext] = g->perm[loc[j][pnext]];
        loc[j + 1][pafter] = g->perm[loc[j][pj]];
    }
    {
        const auto& g = t.gluing(ring[2], loc[2][P0 + 2]);
        if (g->tet != ring[0] || g->perm[loc[2][X]] != loc[0][X] || g->perm[loc[2][Y]] != loc[0][Y] ||
            g->perm[loc[2][P0]] != loc[0][P0] || g->perm[loc[2][P0 + 2]] != loc[0][P0 + 1])
            throw TriangulationError("pachner_32: edge ring does not close up consistently");
    }

    // New tetrahedra A = (P0, P1, P2, X) and B = (P0, P1, P2, Y), joined along face 3.
    std::vector<NewTet> fresh(2);
    for (int side = 0; side < 2; ++side) {
        int apex = side == 0 ? X : Y, other = side == 0 ? Y : X;
        for (int k = 0; k < 3; ++k) {
            const auto& l = loc[(k + 1) % 3];
            std::array<int, 4> img{};
            img[k] = l[other];
            img[3] = l[apex];
            img[(k + 1) % 3] = l[P0 + (k + 1) % 3];
            img[(k + 2) % 3] = l[P0 + (k + 2) % 3];
            fresh[side][k] = inherited_face(ring[(k + 1) % 3], l[other], from_images(img));
        }
        fresh[side][3] = internal_face(1 - side, Perm4());
    }
    return retriangulate(t, {ring[0], ring[1], ring[2]}, fresh);
}

}  // namespace fpg

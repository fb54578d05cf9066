#pragma once

#include <utility>
#include <vector>

#include "fpg/triangulation.hpp"

namespace fpg {

/// Construction sequence of a standard layered solid torus.  Tetrahedron i
/// is glued to tetrahedron i-1 by its faces 3 and 2 (onto faces 0 and 1);
/// the base folds face 2 of tetrahedron 0 onto its face 3, and faces 0 and 1
/// of the last tetrahedron form the boundary.
struct LstDescriptor {
    int tet_count = 0;
    int base_choice = 0;
    std::vector<int> layer_choices;     // one bit per layered tetrahedron
    std::array<FaceSlot, 2> boundary{};
    std::array<int, 3> boundary_edges{};  // edge orbits of the final skeleton
};

using LstEntry = std::pair<LstDescriptor, Triangulation>;

/// The two admissible self-gluings of face 2 onto face 3 (in that order).
const std::array<Perm4, 2>& lst_base_gluings();
LstEntry lst_base(int choice);

/// Layers a new tetrahedron across the two boundary faces flanking edge orbit
/// `edge`: its face 3 onto the lower boundary slot and face 2 onto the other,
/// with its edge 01 running along the edge's positive direction.
Triangulation layer_on(const Triangulation& t, int edge);

/// Boundary edge orbits of t that layering may use without creating a closed
/// degree-two edge, in orbit order.
std::vector<int> admissible_layerings(const Triangulation& t);

/// All 2^t construction sequences, base choice major.
std::vector<LstEntry> enumerate_lsts(int t);
int count_distinct_lst_signatures(const std::vector<LstEntry>& lsts);

/// Every standard layered solid torus on `t` tetrahedra in the fixed face
/// layout above, closed under the relabelings that preserve it: swapping the
/// two faces of each double edge, of the base loop, and of the boundary.
std::vector<Triangulation> lst_layout_instances(int t);

}  // namespace fpg

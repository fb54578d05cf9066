#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/perm4.hpp"

namespace fpg {

struct TriangulationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Face `face` of tetrahedron `tet`; face i is the face opposite vertex i.
struct FaceSlot {
    int tet = 0;
    int face = 0;
    auto operator<=>(const FaceSlot&) const = default;
};

/// The far side of a glued face: vertex v of the source tetrahedron is
/// identified with vertex perm[v] of `tet`, so the target face is perm[face].
struct Gluing {
    int tet = 0;
    Perm4 perm;
    bool operator==(const Gluing&) const = default;
};

/// A generalized triangulation: tetrahedra whose faces are identified in
/// pairs by affine bijections.  Unglued faces are allowed (partial states).
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int size);

    int size() const { return static_cast<int>(slots_.size()); }
    int add_tetrahedron();

    const std::optional<Gluing>& gluing(int tet, int face) const { return slots_.at(tet).at(face); }
    bool is_glued(int tet, int face) const { return gluing(tet, face).has_value(); }

    /// Glues (tet, face) to (target, perm[face]) and sets the reciprocal slot.
    void glue(int tet, int face, int target, Perm4 perm);
    /// Clears (tet, face) and its partner.
    void unglue(int tet, int face);

    int glued_slot_count() const;
    bool all_faces_glued() const;

    bool operator==(const Triangulation&) const = default;

private:
    void check_tet(int tet) const;

    std::vector<std::array<std::optional<Gluing>, 4>> slots_;
};

/// Index of the undirected edge {a, b} among the six edges of a tetrahedron:
/// 01, 02, 03, 12, 13, 23.
int edge_index(int a, int b);
/// Endpoints of edge index e, smaller first.
std::array<int, 2> edge_vertices(int e);

struct EdgeOrbit {
    int degree = 0;
    std::vector<int> tets;  // distinct tetrahedra met, sorted
    bool valid = true;      // false when some directed slot is identified with its reverse
    bool closed = true;     // every face slot around the edge is glued
    int positive_class = 0; // directed class holding the least directed slot
};

struct FaceOrbit {
    std::vector<FaceSlot> slots;  // one (boundary) or two
    bool boundary() const { return slots.size() == 1; }
};

/// Orbits of vertices, edges and faces under the gluing maps.
class Skeleton {
public:
    explicit Skeleton(const Triangulation& t);

    int vertex_count() const { return static_cast<int>(vertex_reps_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    int vertex_of(int tet, int v) const { return vertex_of_[4 * tet + v]; }
    int edge_of(int tet, int a, int b) const { return edge_of_class_[dir_class(tet, a, b)]; }
    int face_of(int tet, int f) const { return face_of_[4 * tet + f]; }

    /// Identifier of the orbit of the directed edge a -> b in tet.
    int dir_class(int tet, int a, int b) const { return dir_class_[16 * tet + 4 * a + b]; }
    int reverse_class(int cls) const { return reverse_[cls]; }
    int edge_of_class(int cls) const { return edge_of_class_[cls]; }
    int dir_class_count() const { return static_cast<int>(reverse_.size()); }
    /// +1 when a -> b in tet runs along the edge orbit's positive direction.
    int edge_sign(int tet, int a, int b) const {
        int cls = dir_class(tet, a, b);
        return cls == edges_[edge_of_class_[cls]].positive_class ? 1 : -1;
    }

    const std::vector<EdgeOrbit>& edges() const { return edges_; }
    const std::vector<FaceOrbit>& faces() const { return faces_; }
    bool valid() const { return valid_; }
    int tetrahedra() const { return size_; }

private:
    int size_;
    std::vector<int> vertex_of_, face_of_, dir_class_, reverse_, edge_of_class_;
    std::vector<int> vertex_reps_;
    std::vector<EdgeOrbit> edges_;
    std::vector<FaceOrbit> faces_;
    bool valid_ = true;
};

Skeleton compute_skeleton(const Triangulation& t);

/// Summary of the surface formed by corner triangles around one vertex orbit.
struct LinkSurface {
    int vertex = 0;
    int euler = 0;
    int boundary_circles = 0;
    bool orientable = true;
    int triangle_count = 0;
};

std::vector<LinkSurface> vertex_links(const Triangulation& t);
std::vector<LinkSurface> vertex_links(const Triangulation& t, const Skeleton& s);

/// All faces glued, no reversed edges, every vertex link a 2-sphere.
bool is_closed_3manifold(const Triangulation& t);

/// Whether signs sigma(tet) in {+1,-1} exist with sigma(t) * sigma(t') = -sign(p)
/// across every gluing.  Accepts partial triangulations.
bool has_consistent_orientation(const Triangulation& t);
/// Orientability of a fully glued triangulation; throws on unglued faces.
bool is_orientable(const Triangulation& t);
/// Orientation signs with sigma(0) = +1 propagated per component, if consistent.
std::optional<std::vector<int>> orientation_signs(const Triangulation& t);

/// V - E + F - n over the orbit counts.
int euler_characteristic(const Triangulation& t);

bool is_connected(const Triangulation& t);

/// Canonical text: the lexicographically least breadth-first relabeling over
/// all starting tetrahedra and all 24 starting vertex labelings.  Blocks are
/// `target:perm` or `b` for an unglued face, joined by `;` within a
/// tetrahedron and by `|` between tetrahedra.
std::string iso_signature(const Triangulation& t);

/// Applies vertex relabelings and a tetrahedron renumbering: tetrahedron i
/// becomes tet_perm[i], with its vertex v renamed vertex_perms[i][v].
Triangulation relabel(const Triangulation& t, const std::vector<int>& tet_perm, const std::vector<Perm4>& vertex_perms);

/// 2-3 move on an internal face orbit whose two sides lie in distinct
/// tetrahedra.  The three new tetrahedra are appended; the new degree-three
/// edge is edge {0,1} of each of them.
Triangulation pachner_23(const Triangulation& t, int face_orbit);
/// 3-2 move on a closed degree-three edge orbit meeting three distinct tetrahedra.
Triangulation pachner_32(const Triangulation& t, int edge_orbit);

/// `.tri` text: `tetrahedra: N`, then `i: g0 g1 g2 g3` with each g either
/// `-` or `t:abcd`.
Triangulation parse_tri(const std::string& text);
std::string serialize_tri(const Triangulation& t);

/// Closed builtins: S3_1, RP3_2, L31_2, S2xS1_2.
Triangulation builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

}  // namespace fpg

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpg/triangulation.hpp"

namespace fpg {

enum class PruneTag {
    ReversedEdge,
    DegreeOne,
    DegreeTwo,
    DegreeThreeDistinct,
    ConeFace,
    L31Spine,
    TwoTriangleSphere,
    UncompletableLink,
};

inline constexpr int kPruneTagCount = 8;

std::string_view tag_name(PruneTag tag);
std::optional<PruneTag> tag_from_name(std::string_view name);
const std::array<PruneTag, kPruneTagCount>& all_tags();

/// A lemma violation; `location` is an edge, face or vertex orbit index of
/// the skeleton the check ran on (edge orbits for edge and cone checks).
struct PruneReason {
    PruneTag tag;
    int location = 0;
    bool operator==(const PruneReason&) const = default;
};

struct FilterSet {
    std::array<bool, kPruneTagCount> on{true, true, true, true, true, true, true, true};

    bool enabled(PruneTag tag) const { return on[static_cast<int>(tag)]; }
    void set(PruneTag tag, bool value) { on[static_cast<int>(tag)] = value; }
    static FilterSet none() {
        FilterSet f;
        f.on.fill(false);
        return f;
    }
};

/// Reversed edges always; for n_total >= 3 also closed edges of degree one or
/// two and closed degree-three edges meeting three distinct tetrahedra.
std::vector<PruneReason> check_edges(const Triangulation& t, int n_total);
std::vector<PruneReason> check_edges(const Skeleton& s, int n_total);

/// For n_total >= 3: faces with two edges identified as a cone about their
/// shared vertex, and faces whose three edges are identified cyclically.
std::vector<PruneReason> check_cone_and_spine_faces(const Triangulation& t, int n_total);
std::vector<PruneReason> check_cone_and_spine_faces(const Skeleton& s, int n_total);

/// Pairs of face orbits bounding a two-triangle sphere with three distinct
/// edges, reported only once the configuration is final: either all three
/// edges are closed, or the two faces are the only unglued faces of a
/// connected piece with fewer than n_total tetrahedra (so in a connected
/// closed result they must be glued elsewhere, not to each other).
std::vector<PruneReason> check_two_triangle_sphere(const Triangulation& t, int n_total);
std::vector<PruneReason> check_two_triangle_sphere(const Triangulation& t, const Skeleton& s, int n_total);

/// Vertex links that are non-orientable or have chi + b != 2.
std::vector<PruneReason> link_completable_to_sphere(const Triangulation& t);
std::vector<PruneReason> link_completable_to_sphere(const Triangulation& t, const Skeleton& s);

/// Every enabled violation, in tag order.  Reversed edges short-circuit the
/// link check, which needs a valid skeleton.
std::vector<PruneReason> check_all(const Triangulation& t, int n_total, const FilterSet& filters = {});
std::optional<PruneReason> first_violation(const Triangulation& t, int n_total, const FilterSet& filters = {});

/// One joint configuration of two gluings between tetrahedra 0 and 1:
/// face 3 of tet 0 to face 3 of tet 1 by `first`, face 0 to face 0 by `second`.
struct DoubleEdgeConfig {
    Perm4 first;
    Perm4 second;
    bool operator==(const DoubleEdgeConfig&) const = default;
};

struct DoubleEdgeClasses {
    std::vector<DoubleEdgeConfig> survivors;
    std::vector<std::string> class_signatures;        // distinct isomorphism signatures
    std::vector<bool> class_orientable;               // per class
    std::vector<int> class_of;                        // per survivor
};

/// Two-tetrahedron piece realizing a configuration.
Triangulation double_edge_piece(const DoubleEdgeConfig& c);
/// Configurations surviving the edge, cone and spine filters on the isolated
/// piece, judged as part of a census on n_total tetrahedra.
std::vector<DoubleEdgeConfig> allowed_double_edge_configurations(const FilterSet& filters = {}, int n_total = 3);
DoubleEdgeClasses classify_double_edge_configurations();

enum class MatchSymbol { iota, kappa, alpha, c, l, r };
using MatchingString = std::array<MatchSymbol, 3>;

std::string symbol_name(MatchSymbol s);
std::string matching_name(const MatchingString& m);
MatchingString parse_matching(std::string_view text);

/// Two tetrahedra glued along faces ABD, BCD, CAD according to the symbols;
/// faces ABC and A'B'C' stay unglued.
Triangulation matching_assembly(const MatchingString& m);
/// Filters that fire on the assembly when it sits inside a larger closed
/// triangulation whose remaining faces lie elsewhere.
std::vector<PruneTag> matching_flags(const MatchingString& m);

struct TripleEdgeReport {
    bool all_flagged = false;
    int flagged = 0;
    std::vector<std::string> unflagged;

    std::map<MatchSymbol, std::vector<MatchSymbol>> adjacency;  // derived "may be followed by"
    bool adjacency_consistent = false;  // same table at all three cyclic positions
    bool adjacency_matches_expected = false;

    std::vector<std::string> rotation_classes;  // adjacency survivors up to cyclic rotation
    bool rotation_classes_match_expected = false;
    std::vector<std::string> isomorphism_classes;  // least-named representative per class
    bool isomorphism_classes_match_expected = false;

    std::map<std::string, std::vector<PruneTag>> representative_flags;
    bool categories_match_expected = false;

    bool ok() const {
        return all_flagged && adjacency_consistent && adjacency_matches_expected && rotation_classes_match_expected &&
               isomorphism_classes_match_expected && categories_match_expected;
    }
    std::string summary() const;
};

TripleEdgeReport triple_edge_report();
bool verify_triple_edge_theorem();

}  // namespace fpg

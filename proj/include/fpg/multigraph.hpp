#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpg {

class Triangulation;

inline constexpr int kMaxGraphOrder = 16;

/// Raised for malformed graph text or constraint violations on input.
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Undirected multigraph with loops on at most 16 vertices.
///
/// mult(v, v) counts loops at v; each loop contributes 2 to the degree.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int order);

    int order() const { return order_; }
    int mult(int u, int v) const { return mult_[u][v]; }
    int loops(int v) const { return mult_[v][v]; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void set_mult(int u, int v, int m);

    int degree(int v) const;
    int edge_count() const;
    bool is_regular(int d) const;

    /// Vertex v of this graph becomes vertex perm[v] of the result.
    MultiGraph relabeled(std::span<const int> perm) const;

    bool operator==(const MultiGraph&) const = default;

private:
    int order_ = 0;
    std::array<std::array<std::uint8_t, kMaxGraphOrder>, kMaxGraphOrder> mult_{};
};

/// Isomorphism-class fingerprint: the order followed by the column-major
/// upper-triangular multiplicity string of the lexicographically largest
/// relabeling.  Column j lists mult(0,j), ..., mult(j-1,j), then mult(j,j).
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    auto operator<=>(const CanonicalCode&) const = default;
};

/// Relabeling achieving the canonical code: result[i] is the vertex of g
/// placed at position i.
std::vector<int> canonical_labeling(const MultiGraph& g);
CanonicalCode canonical_form(const MultiGraph& g);
/// g relabeled into its canonical representative.
MultiGraph canonical_representative(const MultiGraph& g);

/// True when g already carries its canonical labeling.
bool is_canonical(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

/// All connected 4-valent multigraphs on n vertices up to isomorphism, each
/// in canonical form, sorted by canonical code.
std::vector<MultiGraph> enumerate_face_pairing_graphs(int n);

/// Streaming variant; graphs arrive in generation order, not sorted.
void for_each_face_pairing_graph(int n, const std::function<void(const MultiGraph&)>& visit);

/// Graph on t.size() vertices with one edge per glued face pair.
MultiGraph face_pairing_graph_of(const Triangulation& t);

/// `.fpg` text: `vertices: N`, then one `u v` line per edge.
MultiGraph parse_graph(const std::string& text, bool require_four_valent = true);
std::string serialize_graph(const MultiGraph& g);

}  // namespace fpg

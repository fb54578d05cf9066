#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/filters.hpp"
#include "fpg/multigraph.hpp"
#include "fpg/triangulation.hpp"

namespace fpg {

struct CensusError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SearchMode { baseline, redesigned };

std::string mode_name(SearchMode mode);
SearchMode parse_mode(const std::string& text);

struct GraphFilterSet {
    bool triple = true;
    bool broken = true;
    bool handle = true;

    static GraphFilterSet none() { return {false, false, false}; }
};

struct CensusConfig {
    int n = 1;
    bool orientable_only = false;
    SearchMode mode = SearchMode::redesigned;
    GraphFilterSet graph_filters;
    FilterSet tri_filters;
    int worker_count = 1;
};

struct CensusStats {
    std::int64_t graphs_total = 0;
    std::int64_t graphs_rejected = 0;
    std::int64_t rejected_triple = 0;  // per pattern; a graph may match several
    std::int64_t rejected_broken = 0;
    std::int64_t rejected_handle = 0;
    std::int64_t nodes_explored = 0;
    std::array<std::int64_t, kPruneTagCount> prunes{};
    std::int64_t candidates_emitted = 0;
    std::int64_t candidates_distinct = 0;
    double seconds = 0;  // wall clock; excluded from comparisons

    CensusStats& operator+=(const CensusStats& other);
    bool same_counts(const CensusStats& other) const;
    /// `key: value` lines; timing only when with_timing is set.
    std::string str(bool with_timing = false) const;
};

struct Candidate {
    Triangulation triangulation;
    std::string signature;
    CanonicalCode graph;
};

struct CensusResult {
    std::vector<Candidate> candidates;
    CensusStats stats;

    std::vector<std::string> signatures() const;
};

/// All candidates on cfg.n tetrahedra, sorted by (graph code, signature).
CensusResult run_census(const CensusConfig& cfg);

/// Gluing search on one face pairing graph (which must be connected,
/// 4-valent and of order cfg.n); candidates sorted by signature.
CensusResult search_graph(const MultiGraph& g, const CensusConfig& cfg);

/// True when a graph on n vertices is discarded before any gluing search.
bool graph_rejected(const MultiGraph& g, const CensusConfig& cfg, CensusStats* stats = nullptr);

/// Chain fillings the redesigned search instantiates for a one-ended chain
/// on `tets` tetrahedra in the shared face layout, or an empty optional when
/// the enabled filters do not justify the layered solid torus shortcut.
std::optional<std::vector<Triangulation>> chain_instances(int tets, const CensusConfig& cfg);

}  // namespace fpg

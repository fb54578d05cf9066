#pragma once

#include <cstdint>
#include <vector>

#include "fpg/multigraph.hpp"

namespace fpg {

enum class ChainKind { one_ended, double_ended, broken_double_ended };

/// Spine v0..vk of a chain; consecutive vertices are joined by double edges
/// (a single edge at the break of a broken chain).
struct ChainSpec {
    std::vector<int> spine;
    ChainKind kind = ChainKind::one_ended;

    int length() const { return static_cast<int>(spine.size()) - 1; }
    bool operator==(const ChainSpec&) const = default;
};

struct PatternReport {
    bool triple = false;
    bool broken_raw = false;
    bool broken_rejected = false;
    bool handle = false;
    bool is_chain = false;
    std::vector<ChainSpec> one_ended_chains;
};

bool contains_triple_edge(const MultiGraph& g);
/// g is exactly a double-ended chain; one vertex with two loops counts as length 0.
bool is_double_ended_chain(const MultiGraph& g);
bool contains_broken_double_ended_chain(const MultiGraph& g);
bool rejected_by_broken_chain_rule(const MultiGraph& g);
bool contains_chain_with_double_handle(const MultiGraph& g);
/// Greedy maximal one-ended chains rooted at loops, pairwise vertex-disjoint.
std::vector<ChainSpec> find_one_ended_chains(const MultiGraph& g);
PatternReport analyze_patterns(const MultiGraph& g);

struct ClassifyRow {
    int n = 0;
    std::int64_t total = 0, none = 0, some = 0, triple = 0, broken = 0, handle = 0;
    bool operator==(const ClassifyRow&) const = default;
};

ClassifyRow classify_graphs(int n);

}  // namespace fpg

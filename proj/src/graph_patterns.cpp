#include "fpg/graph_patterns.hpp"

#include <stdexcept>

namespace fpg {

bool contains_triple_edge(const MultiGraph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.mult(u, v) >= 3) return true;
    return false;
}

bool is_double_ended_chain(const MultiGraph& g) {
    const int n = g.order();
    if (n == 0) return false;
    if (n == 1) return g.loops(0) == 2;
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (g.loops(v) == 1) start = v;
    if (start < 0) return false;

    std::vector<int> spine{start};
    std::vector<char> used(n, 0);
    used[start] = 1;
    while (static_cast<int>(spine.size()) < n) {
        int u = spine.back(), next = -1;
        for (int w = 0; w < n; ++w)
            if (!used[w] && g.mult(u, w) == 2) next = w;
        if (next < 0) return false;
        used[next] = 1;
        spine.push_back(next);
    }

    MultiGraph chain(n);
    chain.add_edge(spine.front(), spine.front());
    chain.add_edge(spine.back(), spine.back());
    for (int i = 0; i + 1 < n; ++i) {
        chain.add_edge(spine[i], spine[i + 1]);
        chain.add_edge(spine[i], spine[i + 1]);
    }
    return chain == g;
}

namespace {

// Simple path from a looped vertex to another looped vertex where every step
// uses a double edge except exactly one step that needs only a single edge.
bool broken_path_from(const MultiGraph& g, int u, bool broke, std::vector<char>& used) {
    for (int w = 0; w < g.order(); ++w) {
        if (used[w] || g.mult(u, w) == 0) continue;
        bool options[2] = {g.mult(u, w) >= 2, !broke};
        for (int pick = 0; pick < 2; ++pick) {
            if (!options[pick]) continue;
            bool now_broke = broke || pick == 1;
            if (now_broke && g.loops(w) >= 1) return true;
            used[w] = 1;
            bool found = broken_path_from(g, w, now_broke, used);
            used[w] = 0;
            if (found) return true;
        }
    }
    return false;
}

// Chain of double edges from a looped root, whose current end u has single
// edges to two vertices off the chain that share a double edge.
bool handle_from(const MultiGraph& g, int u, std::vector<char>& used) {
    const int n = g.order();
    for (int x = 0; x < n; ++x) {
        if (used[x] || x == u || g.mult(u, x) == 0) continue;
        for (int y = x + 1; y < n; ++y)
            if (!used[y] && y != u && g.mult(u, y) >= 1 && g.mult(x, y) >= 2) return true;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || g.mult(u, w) < 2) continue;
        used[w] = 1;
        bool found = handle_from(g, w, used);
        used[w] = 0;
        if (found) return true;
    }
    return false;
}

}  // namespace

bool contains_broken_double_ended_chain(const MultiGraph& g) {
    std::vector<char> used(g.order(), 0);
    for (int a = 0; a < g.order(); ++a) {
        if (g.loops(a) == 0) continue;
        used[a] = 1;
        bool found = broken_path_from(g, a, false, used);
        used[a] = 0;
        if (found) return true;
    }
    return false;
}

bool rejected_by_broken_chain_rule(const MultiGraph& g) {
    return contains_broken_double_ended_chain(g) && !is_double_ended_chain(g);
}

bool contains_chain_with_double_handle(const MultiGraph& g) {
    std::vector<char> used(g.order(), 0);
    for (int a = 0; a < g.order(); ++a) {
        if (g.loops(a) == 0) continue;
        used[a] = 1;
        bool found = handle_from(g, a, used);
        used[a] = 0;
        if (found) return true;
    }
    return false;
}

std::vector<ChainSpec> find_one_ended_chains(const MultiGraph& g) {
    const int n = g.order();
    if (is_double_ended_chain(g)) {
        ChainSpec whole;
        whole.kind = ChainKind::double_ended;
        int start = 0;
        while (n > 1 && g.loops(start) != 1) ++start;
        std::vector<char> used(n, 0);
        whole.spine.push_back(start);
        used[start] = 1;
        while (static_cast<int>(whole.spine.size()) < n) {
            int u = whole.spine.back();
            for (int w = 0; w < n; ++w)
                if (!used[w] && g.mult(u, w) == 2) {
                    used[w] = 1;
                    whole.spine.push_back(w);
                    break;
                }
        }
        return {whole};
    }

    std::vector<ChainSpec> chains;
    std::vector<char> claimed(n, 0);
    for (int a = 0; a < n; ++a) {
        if (g.loops(a) == 0 || claimed[a]) continue;
        ChainSpec chain;
        chain.spine.push_back(a);
        claimed[a] = 1;
        for (;;) {
            int u = chain.spine.back(), next = -1;
            for (int w = 0; w < n && next < 0; ++w)
                if (!claimed[w] && g.mult(u, w) == 2) next = w;
            if (next < 0) break;
            claimed[next] = 1;
            chain.spine.push_back(next);
        }
        chains.push_back(std::move(chain));
    }
    return chains;
}

PatternReport analyze_patterns(const MultiGraph& g) {
    PatternReport r;
    r.triple = contains_triple_edge(g);
    r.broken_raw = contains_broken_double_ended_chain(g);
    r.is_chain = is_double_ended_chain(g);
    r.broken_rejected = r.broken_raw && !r.is_chain;
    r.handle = contains_chain_with_double_handle(g);
    r.one_ended_chains = find_one_ended_chains(g);
    return r;
}

ClassifyRow classify_graphs(int n) {
    if (n < 1 || n > kMaxGraphOrder) throw std::invalid_argument("classify_graphs: n must lie in [1, 16]");
    ClassifyRow row;
    row.n = n;
    for_each_face_pairing_graph(n, [&](const MultiGraph& g) {
        bool triple = contains_triple_edge(g);
        bool broken = rejected_by_broken_chain_rule(g);
        bool handle = contains_chain_with_double_handle(g);
        ++row.total;
        row.triple += triple;
        row.broken += broken;
        row.handle += handle;
        if (triple || broken || handle) ++row.some;
    });
    row.none = row.total - row.some;
    return row;
}

}  // namespace fpg

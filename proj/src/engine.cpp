#include "fpg/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "fpg/graph_patterns.hpp"
#include "fpg/lst.hpp"

namespace fpg {

std::string mode_name(SearchMode mode) { return mode == SearchMode::baseline ? "baseline" : "redesigned"; }

SearchMode parse_mode(const std::string& text) {
    if (text == "baseline") return SearchMode::baseline;
    if (text == "redesigned") return SearchMode::redesigned;
    throw CensusError("unknown search mode '" + text + "'");
}

CensusStats& CensusStats::operator+=(const CensusStats& o) {
    graphs_total += o.graphs_total;
    graphs_rejected += o.graphs_rejected;
    rejected_triple += o.rejected_triple;
    rejected_broken += o.rejected_broken;
    rejected_handle += o.rejected_handle;
    nodes_explored += o.nodes_explored;
    for (int i = 0; i < kPruneTagCount; ++i) prunes[i] += o.prunes[i];
    candidates_emitted += o.candidates_emitted;
    candidates_distinct += o.candidates_distinct;
    seconds += o.seconds;
    return *this;
}

bool CensusStats::same_counts(const CensusStats& o) const {
    return std::tie(graphs_total, graphs_rejected, rejected_triple, rejected_broken, rejected_handle, nodes_explored,
                    prunes, candidates_emitted, candidates_distinct) ==
           std::tie(o.graphs_total, o.graphs_rejected, o.rejected_triple, o.rejected_broken, o.rejected_handle,
                    o.nodes_explored, o.prunes, o.candidates_emitted, o.candidates_distinct);
}

std::string CensusStats::str(bool with_timing) const {
    std::ostringstream out;
    out << "graphs_total: " << graphs_total << '\n'
        << "graphs_rejected: " << graphs_rejected << '\n'
        << "rejected_triple: " << rejected_triple << '\n'
        << "rejected_broken: " << rejected_broken << '\n'
        << "rejected_handle: " << rejected_handle << '\n'
        << "nodes_explored: " << nodes_explored << '\n';
    for (PruneTag tag : all_tags()) out << "prune_" << tag_name(tag) << ": " << prunes[static_cast<int>(tag)] << '\n';
    out << "candidates_emitted: " << candidates_emitted << '\n' << "candidates_distinct: " << candidates_distinct << '\n';
    if (with_timing) out << "seconds: " << seconds << '\n';
    return out.str();
}

std::vector<std::string> CensusResult::signatures() const {
    std::vector<std::string> out;
    out.reserve(candidates.size());
    for (const auto& c : candidates) out.push_back(c.signature);
    return out;
}

bool graph_rejected(const MultiGraph& g, const CensusConfig& cfg, CensusStats* stats) {
    if (cfg.n < 3) return false;
    const auto& gf = cfg.graph_filters;
    bool triple = gf.triple && contains_triple_edge(g);
    bool broken = gf.broken && rejected_by_broken_chain_rule(g);
    bool handle = gf.handle && contains_chain_with_double_handle(g);
    bool rejected = triple || broken || handle;
    if (stats) {
        stats->rejected_triple += triple;
        stats->rejected_broken += broken;
        stats->rejected_handle += handle;
        stats->graphs_rejected += rejected;
    }
    return rejected;
}

namespace {

// Filters whose violations can never be repaired by further gluings; only
// these may be used to judge an isolated piece.
FilterSet monotone_part(const FilterSet& f) {
    FilterSet m = f;
    m.set(PruneTag::TwoTriangleSphere, false);
    m.set(PruneTag::UncompletableLink, false);
    return m;
}

unsigned filter_mask(const FilterSet& f) {
    unsigned mask = 0;
    for (int i = 0; i < kPruneTagCount; ++i)
        if (f.on[i]) mask |= 1u << i;
    return mask;
}

const std::vector<Perm4>& perms_to(int from, int to) {
    static const auto table = [] {
        std::array<std::array<std::vector<Perm4>, 4>, 4> t;
        for (const Perm4& p : Perm4::all())
            for (int f = 0; f < 4; ++f) t[f][p[f]].push_back(p);
        return t;
    }();
    return table[from][to];
}

// Vertex relabeling sending face 3 to a and face 0 to b.
Perm4 face_frame(int a, int b) {
    std::array<int, 4> img{};
    img[3] = a;
    img[0] = b;
    int next = 1;
    for (int x = 0; x < 4; ++x)
        if (x != a && x != b) img[next++] = x;
    return Perm4(img[0], img[1], img[2], img[3]);
}

using ConfigList = std::vector<DoubleEdgeConfig>;

const ConfigList& cached_double_configs(const CensusConfig& cfg) {
    static std::mutex lock;
    static std::map<std::tuple<unsigned, bool, bool>, ConfigList> cache;
    auto key = std::make_tuple(filter_mask(cfg.tri_filters), cfg.n >= 3, cfg.orientable_only);
    std::lock_guard guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ConfigList list = allowed_double_edge_configurations(cfg.tri_filters, cfg.n >= 3 ? 3 : cfg.n);
    if (cfg.orientable_only)
        std::erase_if(list, [](const DoubleEdgeConfig& c) { return !has_consistent_orientation(double_edge_piece(c)); });
    return cache.emplace(key, std::move(list)).first->second;
}

struct Pairing {
    int u, fu, v, fv;
};

struct Step {
    enum class Kind { edge, chain, double_edge } kind = Kind::edge;
    Pairing pairing{};
    std::vector<int> spine;
    const std::vector<Triangulation>* instances = nullptr;
    std::array<Pairing, 2> pair{};
    std::vector<std::array<Perm4, 2>> configs;
};

// Orientation bookkeeping for orientable searches: a component label and a
// sign per tetrahedron, with sigma(u) sigma(v) = -sign(p) across each gluing.
struct Orienter {
    std::array<std::int8_t, kMaxGraphOrder> comp{}, sign{};

    explicit Orienter(int n) {
        for (int i = 0; i < n; ++i) {
            comp[i] = static_cast<std::int8_t>(i);
            sign[i] = 1;
        }
    }

    bool admits(int u, int v, const Perm4& p) const {
        return comp[u] != comp[v] || sign[u] * sign[v] == -p.sign();
    }

    bool apply(int u, int v, const Perm4& p) {
        if (comp[u] == comp[v]) return sign[u] * sign[v] == -p.sign();
        const std::int8_t from = comp[v], to = comp[u];
        const int flip = -p.sign() * sign[u] * sign[v];
        for (int w = 0; w < kMaxGraphOrder; ++w)
            if (comp[w] == from) {
                comp[w] = to;
                sign[w] = static_cast<std::int8_t>(sign[w] * flip);
            }
        return true;
    }
};

class Searcher {
public:
    Searcher(const MultiGraph& g, const CensusConfig& cfg) : g_(g), cfg_(cfg), t_(g.order()), orient_(g.order()) {
        plan();
    }

    CensusResult run() {
        recurse(0);
        std::sort(result_.candidates.begin(), result_.candidates.end(),
                  [](const Candidate& a, const Candidate& b) { return a.signature < b.signature; });
        result_.stats.candidates_distinct = static_cast<std::int64_t>(result_.candidates.size());
        return std::move(result_);
    }

private:
    void plan();
    void add_edge_step(const Pairing& p) {
        Step s;
        s.pairing = p;
        steps_.push_back(std::move(s));
    }
    int take_face(int v) {
        for (int f = 0; f < 4; ++f)
            if (!(used_[v] >> f & 1)) {
                used_[v] |= 1 << f;
                return f;
            }
        throw std::logic_error("face layout: vertex has no free face");
    }
    void claim(int v, int f) {
        if (used_[v] >> f & 1) throw std::logic_error("face layout: face claimed twice");
        used_[v] |= 1 << f;
    }

    void recurse(std::size_t step);
    void after_assignment(std::size_t step);
    void leaf();

    const MultiGraph& g_;
    const CensusConfig& cfg_;
    Triangulation t_;
    Orienter orient_;
    std::vector<Step> steps_;
    std::array<int, kMaxGraphOrder> used_{};
    std::set<std::string> seen_;
    CensusResult result_;
    CanonicalCode code_;
};

void Searcher::plan() {
    code_ = canonical_form(g_);
    const int n = g_.order();
    std::array<std::array<int, kMaxGraphOrder>, kMaxGraphOrder> rem{};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) rem[u][v] = g_.mult(u, v);

    const bool redesigned = cfg_.mode == SearchMode::redesigned;
    for (const ChainSpec& chain : find_one_ended_chains(g_)) {
        const auto& sp = chain.spine;
        const int k = chain.length();
        std::vector<Pairing> layout = {{sp[0], 2, sp[0], 3}};
        rem[sp[0]][sp[0]] -= 1;
        for (int i = 1; i <= k; ++i) {
            layout.push_back({sp[i - 1], 0, sp[i], 3});
            layout.push_back({sp[i - 1], 1, sp[i], 2});
            rem[sp[i - 1]][sp[i]] -= 2;
            rem[sp[i]][sp[i - 1]] -= 2;
        }
        std::optional<Pairing> closure;
        if (chain.kind == ChainKind::double_ended) {
            closure = Pairing{sp[k], 0, sp[k], 1};
            rem[sp[k]][sp[k]] -= 1;
        }
        for (const Pairing& p : layout) {
            claim(p.u, p.fu);
            claim(p.v, p.fv);
        }
        if (closure) {
            claim(closure->u, closure->fu);
            claim(closure->v, closure->fv);
        }

        std::optional<std::vector<Triangulation>> inst;
        if (redesigned) inst = chain_instances(k + 1, cfg_);
        if (inst) {
            static std::mutex lock;
            static std::map<std::tuple<int, unsigned, bool, bool>, std::vector<Triangulation>> keep;
            std::lock_guard guard(lock);
            auto key = std::make_tuple(k + 1, filter_mask(cfg_.tri_filters), cfg_.n >= 3, cfg_.orientable_only);
            auto it = keep.find(key);
            if (it == keep.end()) it = keep.emplace(key, std::move(*inst)).first;
            Step s;
            s.kind = Step::Kind::chain;
            s.spine = sp;
            s.instances = &it->second;
            steps_.push_back(std::move(s));
        } else {
            for (const Pairing& p : layout) add_edge_step(p);
        }
        if (closure) add_edge_step(*closure);
    }

    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            while (rem[u][v] > 0) {
                if (u != v && rem[u][v] >= 2) {
                    Pairing a{u, take_face(u), v, take_face(v)};
                    Pairing b{u, take_face(u), v, take_face(v)};
                    rem[u][v] -= 2;
                    rem[v][u] -= 2;
                    if (redesigned) {
                        Step s;
                        s.kind = Step::Kind::double_edge;
                        s.pair = {a, b};
                        const Perm4 fu = face_frame(a.fu, b.fu), fv = face_frame(a.fv, b.fv);
                        for (const auto& c : cached_double_configs(cfg_))
                            s.configs.push_back({fv * c.first * fu.inverse(), fv * c.second * fu.inverse()});
                        steps_.push_back(std::move(s));
                    } else {
                        add_edge_step(a);
                        add_edge_step(b);
                    }
                } else {
                    int fu = take_face(u), fv = take_face(v);
                    add_edge_step({u, fu, v, fv});
                    rem[u][v] -= 1;
                    if (u != v) rem[v][u] -= 1;
                }
            }
        }
}

void Searcher::recurse(std::size_t step) {
    if (step == steps_.size()) {
        leaf();
        return;
    }
    const Step& s = steps_[step];
    const bool orientable = cfg_.orientable_only;
    switch (s.kind) {
    case Step::Kind::edge: {
        const Pairing& p = s.pairing;
        for (const Perm4& perm : perms_to(p.fu, p.fv)) {
            if (orientable && !orient_.admits(p.u, p.v, perm)) continue;
            ++result_.stats.nodes_explored;
            Orienter saved = orient_;
            if (orientable) orient_.apply(p.u, p.v, perm);
            t_.glue(p.u, p.fu, p.v, perm);
            after_assignment(step);
            t_.unglue(p.u, p.fu);
            orient_ = saved;
        }
        break;
    }
    case Step::Kind::double_edge: {
        // Configurations arrive grouped by their first gluing; a block whose
        // first gluing is already refuted costs a single node.
        const auto& [a, b] = s.pair;
        const auto& cs = s.configs;
        for (std::size_t lo = 0, hi; lo < cs.size(); lo = hi) {
            for (hi = lo + 1; hi < cs.size() && cs[hi][0] == cs[lo][0]; ++hi) {
            }
            const Orienter saved = orient_;
            if (orientable && !orient_.apply(a.u, a.v, cs[lo][0])) {
                orient_ = saved;
                continue;
            }
            t_.glue(a.u, a.fu, a.v, cs[lo][0]);
            if (auto why = first_violation(t_, cfg_.n, cfg_.tri_filters)) {
                ++result_.stats.nodes_explored;
                ++result_.stats.prunes[static_cast<int>(why->tag)];
            } else {
                for (std::size_t i = lo; i < hi; ++i) {
                    const Orienter inner = orient_;
                    if (orientable && !orient_.apply(b.u, b.v, cs[i][1])) {
                        orient_ = inner;
                        continue;
                    }
                    ++result_.stats.nodes_explored;
                    t_.glue(b.u, b.fu, b.v, cs[i][1]);
                    after_assignment(step);
                    t_.unglue(b.u, b.fu);
                    orient_ = inner;
                }
            }
            t_.unglue(a.u, a.fu);
            orient_ = saved;
        }
        break;
    }
    case Step::Kind::chain: {
        const auto& sp = s.spine;
        for (const Triangulation& inst : *s.instances) {
            Orienter saved = orient_;
            std::vector<FaceSlot> placed;
            bool ok = true;
            for (int tet = 0; tet < inst.size() && ok; ++tet)
                for (int f = 0; f < 4 && ok; ++f) {
                    const auto& gl = inst.gluing(tet, f);
                    if (!gl || FaceSlot{gl->tet, gl->perm[f]} < FaceSlot{tet, f}) continue;
                    if (orientable && !orient_.apply(sp[tet], sp[gl->tet], gl->perm)) ok = false;
                    t_.glue(sp[tet], f, sp[gl->tet], gl->perm);
                    placed.push_back({sp[tet], f});
                }
            if (ok) {
                ++result_.stats.nodes_explored;
                after_assignment(step);
            }
            for (FaceSlot slot : placed) t_.unglue(slot.tet, slot.face);
            orient_ = saved;
        }
        break;
    }
    }
}

void Searcher::after_assignment(std::size_t step) {
    if (auto why = first_violation(t_, cfg_.n, cfg_.tri_filters)) {
        ++result_.stats.prunes[static_cast<int>(why->tag)];
        return;
    }
    recurse(step + 1);
}

void Searcher::leaf() {
    if (!is_closed_3manifold(t_)) return;
    if (cfg_.orientable_only && !has_consistent_orientation(t_)) return;
    ++result_.stats.candidates_emitted;
    std::string sig = iso_signature(t_);
    if (seen_.insert(sig).second) result_.candidates.push_back({t_, std::move(sig), code_});
}

void validate(const CensusConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 8) throw CensusError("census size must lie in [1, 8]");
    if (cfg.worker_count < 1) throw CensusError("worker count must be positive");
}

}  // namespace

std::optional<std::vector<Triangulation>> chain_instances(int tets, const CensusConfig& cfg) {
    const FilterSet& f = cfg.tri_filters;
    if (cfg.n < 3 || tets > cfg.n || !f.enabled(PruneTag::ReversedEdge) || !f.enabled(PruneTag::DegreeTwo) ||
        !f.enabled(PruneTag::ConeFace))
        return std::nullopt;
    std::vector<Triangulation> out;
    const FilterSet mono = monotone_part(f);
    for (Triangulation& t : lst_layout_instances(tets)) {
        if (first_violation(t, cfg.n, mono)) continue;
        if (cfg.orientable_only && !has_consistent_orientation(t)) continue;
        out.push_back(std::move(t));
    }
    return out;
}

CensusResult search_graph(const MultiGraph& g, const CensusConfig& cfg) {
    validate(cfg);
    if (g.order() != cfg.n || !g.is_regular(4) || !is_connected(g))
        throw CensusError("search_graph: expected a connected 4-valent graph on " + std::to_string(cfg.n) + " vertices");
    CensusStats rejected;
    rejected.graphs_total = 1;
    if (graph_rejected(g, cfg, &rejected)) return {{}, rejected};
    CensusResult r = Searcher(g, cfg).run();
    r.stats.graphs_total = 1;
    return r;
}

CensusResult run_census(const CensusConfig& cfg) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    const auto graphs = enumerate_face_pairing_graphs(cfg.n);
    std::vector<CensusResult> parts(graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < graphs.size();) parts[i] = search_graph(graphs[i], cfg);
    };
    const int workers = std::min<int>(cfg.worker_count, std::max<std::size_t>(graphs.size(), 1));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    work();
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    CensusResult out;
    for (auto& part : parts) {
        out.stats += part.stats;
        for (auto& c : part.candidates) out.candidates.push_back(std::move(c));
    }
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace fpg

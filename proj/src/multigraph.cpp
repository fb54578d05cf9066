#include "fpg/multigraph.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

namespace fpg {

MultiGraph::MultiGraph(int order) : order_(order) {
    if (order < 0 || order > kMaxGraphOrder)
        throw GraphError("graph order " + std::to_string(order) + " outside [0, 16]");
}

void MultiGraph::add_edge(int u, int v) {
    if (mult_[u][v] >= 255) throw GraphError("edge multiplicity overflow");
    ++mult_[u][v];
    if (u != v) ++mult_[v][u];
}

void MultiGraph::remove_edge(int u, int v) {
    if (mult_[u][v] == 0) throw GraphError("removing an absent edge");
    --mult_[u][v];
    if (u != v) --mult_[v][u];
}

void MultiGraph::set_mult(int u, int v, int m) {
    mult_[u][v] = static_cast<std::uint8_t>(m);
    mult_[v][u] = static_cast<std::uint8_t>(m);
}

int MultiGraph::degree(int v) const {
    int d = 2 * mult_[v][v];
    for (int u = 0; u < order_; ++u)
        if (u != v) d += mult_[u][v];
    return d;
}

int MultiGraph::edge_count() const {
    int e = 0;
    for (int u = 0; u < order_; ++u)
        for (int v = u; v < order_; ++v) e += mult_[u][v];
    return e;
}

bool MultiGraph::is_regular(int d) const {
    for (int v = 0; v < order_; ++v)
        if (degree(v) != d) return false;
    return true;
}

MultiGraph MultiGraph::relabeled(std::span<const int> perm) const {
    MultiGraph out(order_);
    for (int u = 0; u < order_; ++u)
        for (int v = 0; v < order_; ++v) out.mult_[perm[u]][perm[v]] = mult_[u][v];
    return out;
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size());
    for (auto b : bytes) s.push_back(digits[b & 0xF]);
    return s;
}

namespace {

using Matrix = std::array<std::array<std::uint8_t, kMaxGraphOrder>, kMaxGraphOrder>;

Matrix matrix_of(const MultiGraph& g) {
    Matrix m{};
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) m[u][v] = static_cast<std::uint8_t>(g.mult(u, v));
    return m;
}

// Column j of the code under placement `pos` (pos[i] = vertex at position i),
// with `v` placed at position j.  Writes j+1 entries.
inline void column_of(const Matrix& m, const int* pos, int j, int v, std::uint8_t* out) {
    for (int i = 0; i < j; ++i) out[i] = m[pos[i]][v];
    out[j] = m[v][v];
}

// Decides whether the identity placement of the first `size` vertices of m
// yields the largest code over all placements.
class MaxTest {
public:
    MaxTest(const Matrix& m, int size) : m_(m), n_(size) {
        for (int j = 0; j < n_; ++j) {
            column_of(m_, identity_.data(), j, j, ref_[j].data());
        }
    }

    bool run() {
        used_.fill(false);
        return descend(0);
    }

private:
    bool descend(int j) {
        if (j == n_) return true;
        std::array<std::uint8_t, kMaxGraphOrder> col{};
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            column_of(m_, pos_.data(), j, v, col.data());
            int c = std::memcmp(col.data(), ref_[j].data(), static_cast<std::size_t>(j + 1));
            if (c > 0) return false;
            if (c < 0) continue;
            used_[v] = true;
            pos_[j] = v;
            bool ok = descend(j + 1);
            used_[v] = false;
            if (!ok) return false;
        }
        return true;
    }

    static constexpr std::array<int, kMaxGraphOrder> identity_ = [] {
        std::array<int, kMaxGraphOrder> a{};
        for (int i = 0; i < kMaxGraphOrder; ++i) a[i] = i;
        return a;
    }();

    const Matrix& m_;
    int n_;
    std::array<std::array<std::uint8_t, kMaxGraphOrder>, kMaxGraphOrder> ref_{};
    std::array<int, kMaxGraphOrder> pos_{};
    std::array<bool, kMaxGraphOrder> used_{};
};

// Branch-and-bound search for the placement with the largest code.
class MaxSearch {
public:
    MaxSearch(const Matrix& m, int size) : m_(m), n_(size) {}

    std::vector<int> run() {
        used_.fill(false);
        have_best_ = false;
        descend(0, 0);
        return std::vector<int>(best_pos_.begin(), best_pos_.begin() + n_);
    }

private:
    // `offset` is the code length consumed by columns [0, j).
    void descend(int j, int offset) {
        if (j == n_) {
            if (!have_best_ ||
                std::memcmp(code_.data(), best_code_.data(), static_cast<std::size_t>(offset)) > 0) {
                best_code_ = code_;
                best_pos_ = pos_;
                have_best_ = true;
            }
            return;
        }
        // Only siblings achieving the largest column can lead to the maximum.
        std::array<std::uint8_t, kMaxGraphOrder> col{}, top{};
        bool any = false;
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            column_of(m_, pos_.data(), j, v, col.data());
            if (!any || std::memcmp(col.data(), top.data(), static_cast<std::size_t>(j + 1)) > 0) top = col;
            any = true;
        }
        std::memcpy(code_.data() + offset, top.data(), static_cast<std::size_t>(j + 1));
        const int next = offset + j + 1;
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            column_of(m_, pos_.data(), j, v, col.data());
            if (std::memcmp(col.data(), top.data(), static_cast<std::size_t>(j + 1)) != 0) continue;
            if (have_best_ && std::memcmp(code_.data(), best_code_.data(), static_cast<std::size_t>(next)) < 0)
                return;
            used_[v] = true;
            pos_[j] = v;
            descend(j + 1, next);
            used_[v] = false;
            // Restore this column: deeper levels overwrite only later bytes.
        }
    }

    const Matrix& m_;
    int n_;
    std::array<std::uint8_t, kMaxGraphOrder*(kMaxGraphOrder + 1) / 2> code_{}, best_code_{};
    std::array<int, kMaxGraphOrder> pos_{}, best_pos_{};
    std::array<bool, kMaxGraphOrder> used_{};
    bool have_best_ = false;
};

CanonicalCode code_under(const MultiGraph& g, std::span<const int> pos) {
    CanonicalCode code;
    const int n = g.order();
    code.bytes.reserve(1 + n * (n + 1) / 2);
    code.bytes.push_back(static_cast<std::uint8_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) code.bytes.push_back(static_cast<std::uint8_t>(g.mult(pos[i], pos[j])));
        code.bytes.push_back(static_cast<std::uint8_t>(g.mult(pos[j], pos[j])));
    }
    return code;
}

// Orderly generation: vertices are appended one column at a time and every
// prefix must itself be the maximal labeling of the induced subgraph, which
// holds for every prefix of a maximal labeling.  For a connected graph each
// prefix of the maximal labeling is connected, so every new vertex needs an
// edge back into the prefix.
class OrderlyGenerator {
public:
    OrderlyGenerator(int n, const std::function<void(const MultiGraph&)>& visit) : n_(n), visit_(visit) {}

    void run() {
        // Position 0: its column is just its loop count.
        for (int loops = 2; loops >= 0; --loops) {
            if (n_ == 1 && loops != 2) continue;
            if (n_ > 1 && loops == 2) continue;
            m_ = Matrix{};
            deg_.fill(0);
            m_[0][0] = static_cast<std::uint8_t>(loops);
            deg_[0] = 2 * loops;
            if (feasible(1)) extend(1);
        }
    }

private:
    bool feasible(int placed) const {
        int slack = 0;
        for (int i = 0; i < placed; ++i) slack += 4 - deg_[i];
        const int remaining = n_ - placed;
        if (remaining == 0) return slack == 0;
        return slack >= 1 && slack % 2 == 0 && slack <= 4 * remaining;
    }

    void extend(int k) {
        if (k == n_) {
            MultiGraph g(n_);
            for (int u = 0; u < n_; ++u)
                for (int v = u; v < n_; ++v)
                    if (m_[u][v]) g.set_mult(u, v, m_[u][v]);
            visit_(g);
            return;
        }
        assign_column(k, 0, 0);
    }

    // Chooses mult(i, k) for i = row, row+1, ..., k-1, then the loop count at k.
    void assign_column(int k, int row, int used) {
        if (row == k) {
            if (used == 0) return;
            for (int loops = (4 - used) / 2; loops >= 0; --loops) {
                if (loops > 1) continue;
                m_[k][k] = static_cast<std::uint8_t>(loops);
                deg_[k] = used + 2 * loops;
                if (feasible(k + 1) && MaxTest(m_, k + 1).run()) extend(k + 1);
            }
            m_[k][k] = 0;
            deg_[k] = 0;
            return;
        }
        const int cap = std::min(4 - deg_[row], 4 - used);
        for (int c = cap; c >= 0; --c) {
            m_[row][k] = m_[k][row] = static_cast<std::uint8_t>(c);
            deg_[row] += c;
            assign_column(k, row + 1, used + c);
            deg_[row] -= c;
        }
        m_[row][k] = m_[k][row] = 0;
    }

    int n_;
    const std::function<void(const MultiGraph&)>& visit_;
    Matrix m_{};
    std::array<int, kMaxGraphOrder> deg_{};
};

void check_order(int n) {
    if (n < 1 || n > kMaxGraphOrder)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, 16]");
}

}  // namespace

std::vector<int> canonical_labeling(const MultiGraph& g) {
    if (g.order() == 0) return {};
    return MaxSearch(matrix_of(g), g.order()).run();
}

CanonicalCode canonical_form(const MultiGraph& g) {
    auto pos = canonical_labeling(g);
    return code_under(g, pos);
}

MultiGraph canonical_representative(const MultiGraph& g) {
    auto pos = canonical_labeling(g);
    std::vector<int> perm(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) perm[pos[i]] = static_cast<int>(i);
    return g.relabeled(perm);
}

bool is_canonical(const MultiGraph& g) {
    if (g.order() == 0) return true;
    return MaxTest(matrix_of(g), g.order()).run();
}

bool is_connected(const MultiGraph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && g.mult(u, v) > 0) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

void for_each_face_pairing_graph(int n, const std::function<void(const MultiGraph&)>& visit) {
    check_order(n);
    OrderlyGenerator(n, visit).run();
}

std::vector<MultiGraph> enumerate_face_pairing_graphs(int n) {
    std::vector<std::pair<CanonicalCode, MultiGraph>> found;
    for_each_face_pairing_graph(n, [&](const MultiGraph& g) {
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        found.emplace_back(code_under(g, id), g);
    });
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<MultiGraph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(g);
    return out;
}

MultiGraph parse_graph(const std::string& text, bool require_four_valent) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    MultiGraph g;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (!have_header) {
            int n = 0;
            std::string extra;
            if (first != "vertices:" || !(fields >> n) || (fields >> extra))
                throw GraphError("line " + std::to_string(line_no) + ": expected 'vertices: N'");
            if (n < 1 || n > kMaxGraphOrder)
                throw GraphError("line " + std::to_string(line_no) + ": vertex count out of range");
            g = MultiGraph(n);
            have_header = true;
            continue;
        }
        int u = 0, v = 0;
        std::string extra;
        std::istringstream edge(line);
        if (!(edge >> u >> v) || (edge >> extra))
            throw GraphError("line " + std::to_string(line_no) + ": expected 'u v'");
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
            throw GraphError("line " + std::to_string(line_no) + ": vertex index out of range");
        g.add_edge(u, v);
    }
    if (!have_header) throw GraphError("missing 'vertices: N' header");
    if (require_four_valent) {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) != 4)
                throw GraphError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                 ", expected 4");
    }
    return g;
}

std::string serialize_graph(const MultiGraph& g) {
    std::ostringstream out;
    out << "vertices: " << g.order() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u; v < g.order(); ++v)
            for (int k = 0; k < g.mult(u, v); ++k) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace fpg

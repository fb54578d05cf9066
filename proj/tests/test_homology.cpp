#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "fpg/engine.hpp"
#include "fpg/homology.hpp"

using namespace fpg;

namespace {

std::int64_t det(const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    std::int64_t total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(row);
        }
        total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
    }
    return total;
}

void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// gcd of all k-by-k minors.
std::int64_t determinantal_divisor(const IntMatrix& m, int k) {
    std::vector<std::vector<int>> rows, cols;
    std::vector<int> cur;
    choose(m.rows(), k, 0, cur, rows);
    choose(m.cols(), k, 0, cur, cols);
    std::int64_t g = 0;
    for (const auto& r : rows)
        for (const auto& c : cols) {
            std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
            g = std::gcd(g, det(sub));
        }
    return g;
}

}  // namespace

TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}) == std::vector<std::int64_t>{2, 4});
    CHECK(smith_normal_form(IntMatrix(3, 2)).empty());
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}) == std::vector<std::int64_t>{1, 6});
    CHECK_THROWS_AS(IntMatrix({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("smith normal form matches determinantal divisors") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m(r, c) = trial % 3 == 0 ? 2 * entry(rng) : entry(rng);
        auto d = smith_normal_form(m);
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] > 0);
            if (i) CHECK(d[i] % d[i - 1] == 0);
        }
        std::int64_t product = 1;
        for (int k = 1; k <= 3; ++k) {
            std::int64_t dk = determinantal_divisor(m, k);
            if (k <= static_cast<int>(d.size())) {
                product *= d[k - 1];
                CHECK(product == dk);
            } else {
                CHECK(dk == 0);
            }
        }
    }
}

TEST_CASE("overflow is reported") {
    const std::int64_t big = INT64_MAX / 2;
    CHECK_THROWS_AS(smith_normal_form(IntMatrix{{big, big - 1}, {big - 1, big + 7}}), OverflowError);
}

TEST_CASE("builtin first homology") {
    CHECK(first_homology(builtin("S3_1")).str() == "0");
    CHECK(first_homology(builtin("RP3_2")) == H1Result{0, {2}});
    CHECK(first_homology(builtin("L31_2")) == H1Result{0, {3}});
    CHECK(first_homology(builtin("S2xS1_2")) == H1Result{1, {}});
    CHECK(H1Result{2, {2, 6}}.str() == "2Z + Z_2 + Z_6");
    CHECK_THROWS_AS(first_homology(Triangulation(1)), TriangulationError);
}

TEST_CASE("boundary maps compose to zero") {
    std::vector<Triangulation> samples;
    for (int n = 1; n <= 3; ++n) {
        CensusConfig cfg;
        cfg.n = n;
        for (auto& c : run_census(cfg).candidates) samples.push_back(c.triangulation);
    }
    for (const auto& t : samples) {
        IntMatrix d2 = boundary_2(t), d1 = boundary_1(t);
        for (int f = 0; f < d2.rows(); ++f)
            for (int v = 0; v < d1.cols(); ++v) {
                std::int64_t sum = 0;
                for (int e = 0; e < d2.cols(); ++e) sum += d2(f, e) * d1(e, v);
                CHECK(sum == 0);
            }
    }
}

TEST_CASE("homology is an isomorphism invariant on small candidates") {
    std::map<std::string, H1Result> by_sig;
    for (int n = 1; n <= 2; ++n) {
        CensusConfig cfg;
        cfg.n = n;
        cfg.mode = SearchMode::baseline;
        cfg.tri_filters = FilterSet::none();
        for (auto& c : run_census(cfg).candidates) {
            H1Result h = first_homology(c.triangulation);
            auto [it, fresh] = by_sig.emplace(c.signature, h);
            if (!fresh) CHECK(it->second == h);
            // Relabeling never changes the group.
            std::vector<int> tets(c.triangulation.size());
            std::iota(tets.rbegin(), tets.rend(), 0);
            std::vector<Perm4> verts(tets.size(), Perm4::parse("3102"));
            CHECK(first_homology(relabel(c.triangulation, tets, verts)) == h);
        }
    }
    CHECK(by_sig.size() >= 4);
}

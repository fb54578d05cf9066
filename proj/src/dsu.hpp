#pragma once

#include <numeric>
#include <vector>

namespace fpg::detail {

// Union-find with path halving.
class Dsu {
public:
    explicit Dsu(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a < b) parent_[b] = a;
        else parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace fpg::detail

#pragma once

#include <numeric>
#include <vector>

namespace sparsity {

/// Union-find with path halving.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n))
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (at(x) != x) {
            at(x) = at(at(x));
            x = at(x);
        }
        return x;
    }

    /// Returns false when a and b were already joined.
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        at(a) = b;
        return true;
    }

private:
    int& at(int x) { return parent_[static_cast<std::size_t>(x)]; }

    std::vector<int> parent_;
};

} // namespace sparsity

#include "sparsity/ndt.hpp"

#include "sparsity/matroids.hpp"
#include "sparsity/union.hpp"

namespace sparsity {

Fraction bounded_degree(int vertex_count)
{
    return Fraction(2 * static_cast<std::int64_t>(vertex_count) - 5, 3);
}

int bounded_degree_limit(int vertex_count)
{
    return static_cast<int>(bounded_degree(vertex_count).floor());
}

bool verify_bounded_cover(const Multigraph& g, const BoundedCover& cover)
{
    if (cover.degree_bound != bounded_degree(g.vertex_count())) {
        return false;
    }
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    auto claim = [&](const EdgeSet& part) {
        for (EdgeId id : part) {
            if (id < 0 || id >= g.edge_count() || used[static_cast<std::size_t>(id)]++) {
                return false;
            }
        }
        return true;
    };
    for (const EdgeSet& f : cover.forests) {
        if (!claim(f) || !graphic_independent(g, f)) {
            return false;
        }
    }
    const int limit = cover.degree_limit();
    for (const EdgeSet& b : cover.bounded_parts) {
        if (!claim(b)) {
            return false;
        }
        const auto deg = degrees(g, b);
        if (!b.empty() && *std::max_element(deg.begin(), deg.end()) > limit) {
            return false;
        }
    }
    return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

std::pair<EdgeSet, EdgeSet> sparse_to_two_forests(const Multigraph& h)
{
    if (!sparse_independent(h, h.all_edges()).sparse) {
        throw InputError("two-forest split needs a (2,3)-sparse graph");
    }
    // sparse gives i(X) <= 2|X|-3 <= 2(|X|-1), so two forests always suffice
    const UnionRank result = union_rank(h, 0, 2);
    if (result.rank != h.edge_count()) {
        throw std::logic_error("sparse graph did not split into two forests");
    }
    return {result.decomposition.color_class(1), result.decomposition.color_class(2)};
}

namespace {

/// Union-find without path compression so unions can be undone.
class RollbackForest {
public:
    explicit RollbackForest(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1)
    {
        for (int i = 0; i < n; ++i) {
            parent_[static_cast<std::size_t>(i)] = i;
        }
    }

    int find(int x) const
    {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[static_cast<std::size_t>(a)] > size_[static_cast<std::size_t>(b)]) {
            std::swap(a, b);
        }
        parent_[static_cast<std::size_t>(a)] = b;
        size_[static_cast<std::size_t>(b)] += size_[static_cast<std::size_t>(a)];
        history_.push_back(a);
        return true;
    }

    void undo()
    {
        const int a = history_.back();
        history_.pop_back();
        const int b = parent_[static_cast<std::size_t>(a)];
        size_[static_cast<std::size_t>(b)] -= size_[static_cast<std::size_t>(a)];
        parent_[static_cast<std::size_t>(a)] = a;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> history_;
};

class SplitSearch {
public:
    SplitSearch(const Multigraph& h, std::int64_t budget)
        : h_(h), budget_(budget), limit_(bounded_degree_limit(h.vertex_count())), forest_(h.vertex_count()),
          remainder_degree_(static_cast<std::size_t>(h.vertex_count()), 0),
          in_forest_(static_cast<std::size_t>(h.edge_count()), 0)
    {
    }

    SearchStatus run()
    {
        const bool found = descend(0);
        if (found) {
            return SearchStatus::Found;
        }
        return exhausted_ ? SearchStatus::Undecided : SearchStatus::NoDecomposition;
    }

    std::int64_t nodes() const { return nodes_; }

    std::pair<EdgeSet, EdgeSet> split() const
    {
        std::vector<EdgeId> f;
        std::vector<EdgeId> r;
        for (EdgeId e = 0; e < h_.edge_count(); ++e) {
            (in_forest_[static_cast<std::size_t>(e)] ? f : r).push_back(e);
        }
        return {EdgeSet(std::move(f)), EdgeSet(std::move(r))};
    }

private:
    bool descend(EdgeId e)
    {
        if (e == h_.edge_count()) {
            return true;
        }
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        const Edge& edge = h_.edge(e);
        if (forest_.unite(edge.u, edge.v)) {
            in_forest_[static_cast<std::size_t>(e)] = 1;
            if (descend(e + 1)) {
                return true;
            }
            in_forest_[static_cast<std::size_t>(e)] = 0;
            forest_.undo();
            if (exhausted_) {
                return false;
            }
        }
        auto& du = remainder_degree_[static_cast<std::size_t>(edge.u)];
        auto& dv = remainder_degree_[static_cast<std::size_t>(edge.v)];
        if (du < limit_ && dv < limit_) {
            ++du;
            ++dv;
            if (descend(e + 1)) {
                return true;
            }
            --du;
            --dv;
        }
        return false;
    }

    const Multigraph& h_;
    std::int64_t budget_;
    int limit_;
    RollbackForest forest_;
    std::vector<int> remainder_degree_;
    std::vector<char> in_forest_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

ForestBoundedSplit sparse_to_forest_plus_bounded(const Multigraph& h, std::int64_t budget)
{
    if (!sparse_independent(h, h.all_edges()).sparse) {
        throw InputError("forest-plus-bounded split needs a (2,3)-sparse graph");
    }
    SplitSearch search(h, budget);
    ForestBoundedSplit out;
    out.status = search.run();
    out.nodes = search.nodes();
    out.guaranteed = h.vertex_count() >= 6;
    if (out.status == SearchStatus::Found) {
        std::tie(out.forest, out.remainder) = search.split();
    }
    return out;
}

namespace {

EdgeSet to_host(const EdgeSubgraph& sub, const EdgeSet& local)
{
    std::vector<EdgeId> ids;
    ids.reserve(static_cast<std::size_t>(local.size()));
    for (EdgeId e : local) {
        ids.push_back(sub.original[static_cast<std::size_t>(e)]);
    }
    return EdgeSet(std::move(ids));
}

} // namespace

NdtOutcome ndt_decompose(const Multigraph& g, int k, int l, const Limits& limits)
{
    if (k < 0 || l < k + 1 || l > 2 * k + 2) {
        throw InputError("bounded cover needs k >= 0 and k+1 <= l <= 2k+2 (got k = " + std::to_string(k) +
                         ", l = " + std::to_string(l) + ")");
    }
    DecomposeOutcome sparse = decompose_sparse(g, k + 1, limits);
    if (auto* report = std::get_if<ConditionReport>(&sparse)) {
        return std::move(*report);
    }
    const Decomposition& classes = std::get<Decomposition>(sparse);
    BoundedCover cover;
    cover.degree_bound = bounded_degree(g.vertex_count());
    const int two_forest_classes = l - k - 1;
    for (int c = 1; c <= k + 1; ++c) {
        const EdgeSubgraph sub = edge_subgraph(g, classes.color_class(c));
        if (c <= two_forest_classes) {
            auto [first, second] = sparse_to_two_forests(sub.graph);
            cover.forests.push_back(to_host(sub, first));
            cover.forests.push_back(to_host(sub, second));
            continue;
        }
        ForestBoundedSplit split = sparse_to_forest_plus_bounded(sub.graph, limits.search_budget);
        if (split.status != SearchStatus::Found) {
            return NdtStalled{c, std::move(split)};
        }
        cover.forests.push_back(to_host(sub, split.forest));
        cover.bounded_parts.push_back(to_host(sub, split.remainder));
    }
    return cover;
}

} // namespace sparsity

#include "sparsity/matroids.hpp"

#include "sparsity/disjoint_sets.hpp"
#include "sparsity/pebble_game.hpp"

#include <bit>
#include <deque>

namespace sparsity {

bool graphic_independent(const Multigraph& g, const EdgeSet& f)
{
    g.require_edges(f);
    DisjointSets dsu(g.vertex_count());
    for (EdgeId id : f) {
        if (!dsu.unite(g.edge(id).u, g.edge(id).v)) {
            return false;
        }
    }
    return true;
}

RankResult graphic_rank(const Multigraph& g, const EdgeSet& f)
{
    g.require_edges(f);
    DisjointSets dsu(g.vertex_count());
    std::vector<EdgeId> basis;
    for (EdgeId id : f) {
        if (dsu.unite(g.edge(id).u, g.edge(id).v)) {
            basis.push_back(id);
        }
    }
    const int rank = static_cast<int>(basis.size());
    return {rank, EdgeSet(std::move(basis))};
}

SparsityCheck sparse_independent(const Multigraph& g, const EdgeSet& f)
{
    g.require_edges(f);
    PebbleGame game(g.vertex_count());
    for (EdgeId id : f) {
        if (!game.try_insert(g.edge(id).u, g.edge(id).v)) {
            return {false, game.blocker()};
        }
    }
    return {true, std::nullopt};
}

RankResult rigidity_rank(const Multigraph& g, std::span<const EdgeId> order)
{
    PebbleGame game(g.vertex_count());
    std::vector<EdgeId> basis;
    for (EdgeId id : order) {
        const Edge& e = g.edge(id);
        if (game.try_insert(e.u, e.v)) {
            basis.push_back(id);
        }
    }
    const int rank = static_cast<int>(basis.size());
    return {rank, EdgeSet(std::move(basis))};
}

RankResult rigidity_rank(const Multigraph& g, const EdgeSet& f)
{
    g.require_edges(f);
    return rigidity_rank(g, std::span<const EdgeId>(f.ids()));
}

bool sparse_independent_bruteforce(const Multigraph& g, const EdgeSet& f, const Limits& limits)
{
    g.require_edges(f);
    std::vector<std::uint32_t> edge_masks;
    for (EdgeId id : f) {
        edge_masks.push_back((std::uint32_t{1} << g.edge(id).u) | (std::uint32_t{1} << g.edge(id).v));
    }
    bool sparse = true;
    for_each_subset_mask(g.vertex_count(), 2, limits, [&](std::uint32_t x) {
        int inside = 0;
        for (std::uint32_t em : edge_masks) {
            inside += (em & x) == em;
        }
        sparse = inside <= 2 * std::popcount(x) - 3;
        return sparse;
    });
    return sparse;
}

bool is_rigid(const Multigraph& g)
{
    if (g.vertex_count() < 2) {
        throw InputError("rigidity needs at least 2 vertices");
    }
    return rigidity_rank(g, g.all_edges()).rank == 2 * g.vertex_count() - 3;
}

bool is_minimally_rigid(const Multigraph& g)
{
    return is_rigid(g) && g.edge_count() == 2 * g.vertex_count() - 3;
}

bool GraphicMatroid::independent(std::span<const EdgeId> set) const
{
    DisjointSets dsu(g_.vertex_count());
    for (EdgeId id : set) {
        if (!dsu.unite(g_.edge(id).u, g_.edge(id).v)) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<EdgeId>> GraphicMatroid::circuit(std::span<const EdgeId> set, EdgeId e) const
{
    // the circuit is the forest path between the endpoints of e
    const int n = g_.vertex_count();
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(static_cast<std::size_t>(n));
    for (EdgeId id : set) {
        const Edge& f = g_.edge(id);
        adj[static_cast<std::size_t>(f.u)].emplace_back(f.v, id);
        adj[static_cast<std::size_t>(f.v)].emplace_back(f.u, id);
    }
    const Vertex source = g_.edge(e).u;
    const Vertex target = g_.edge(e).v;
    std::vector<EdgeId> via(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<Vertex> queue{source};
    seen[static_cast<std::size_t>(source)] = 1;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        if (x == target) {
            break;
        }
        for (auto [y, id] : adj[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                via[static_cast<std::size_t>(y)] = id;
                queue.push_back(y);
            }
        }
    }
    if (!seen[static_cast<std::size_t>(target)]) {
        return std::nullopt;
    }
    std::vector<EdgeId> path;
    for (Vertex x = target; x != source;) {
        const EdgeId id = via[static_cast<std::size_t>(x)];
        path.push_back(id);
        x = g_.edge(id).u == x ? g_.edge(id).v : g_.edge(id).u;
    }
    return path;
}

bool RigidityMatroid::independent(std::span<const EdgeId> set) const
{
    PebbleGame game(g_.vertex_count());
    for (EdgeId id : set) {
        if (!game.try_insert(g_.edge(id).u, g_.edge(id).v)) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<EdgeId>> RigidityMatroid::circuit(std::span<const EdgeId> set, EdgeId e) const
{
    PebbleGame game(g_.vertex_count());
    for (EdgeId id : set) {
        game.try_insert(g_.edge(id).u, g_.edge(id).v);
    }
    if (game.try_insert(g_.edge(e).u, g_.edge(e).v)) {
        return std::nullopt;
    }
    // circuit edges lie inside the blocking set; test each candidate exchange
    const VertexSet& region = game.blocker();
    std::vector<EdgeId> swap_set;
    std::vector<EdgeId> trial;
    for (std::size_t skip = 0; skip < set.size(); ++skip) {
        const Edge& y = g_.edge(set[skip]);
        if (!region.contains(y.u) || !region.contains(y.v)) {
            continue;
        }
        trial.clear();
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (j != skip) {
                trial.push_back(set[j]);
            }
        }
        trial.push_back(e);
        if (independent(trial)) {
            swap_set.push_back(set[skip]);
        }
    }
    return swap_set;
}

} // namespace sparsity

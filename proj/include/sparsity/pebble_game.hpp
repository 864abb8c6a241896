#pragma once

#include "sparsity/graph.hpp"

#include <vector>

namespace sparsity {

/// Incremental (2,3)-pebble game. Every vertex starts with two pebbles; an
/// accepted edge is oriented away from the vertex that paid for it. An edge
/// u-v is accepted iff four pebbles can be gathered on {u, v}, which holds
/// iff the accepted set plus u-v is (2,3)-sparse.
class PebbleGame {
public:
    explicit PebbleGame(int vertex_count);

    bool try_insert(Vertex u, Vertex v);

    /// After a rejection: the vertices reachable from the rejected edge's
    /// endpoints. They span 2|X|-3 accepted edges, so X violates sparsity
    /// once the rejected edge is added.
    const VertexSet& blocker() const { return blocker_; }

    int accepted_count() const { return accepted_; }
    int free_pebbles(Vertex v) const { return pebbles_[static_cast<std::size_t>(v)]; }

private:
    /// Moves one pebble from some w outside {u, v} onto u or v along a
    /// reversed path. On failure stores the reach set of {u, v}.
    bool gather_one(Vertex u, Vertex v);

    std::vector<int> pebbles_;
    std::vector<std::vector<Vertex>> heads_; // heads_[t]: heads of edges oriented out of t
    std::vector<Vertex> parent_;
    std::vector<Vertex> queue_;
    VertexSet blocker_;
    int accepted_ = 0;
};

} // namespace sparsity

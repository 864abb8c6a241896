#pragma once

#include "sparsity/errors.hpp"
#include "sparsity/limits.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sparsity {

using Vertex = int;
using EdgeId = int;

struct Edge {
    EdgeId id;
    Vertex u;
    Vertex v;
};

/// Sorted, duplicate-free set of integer ids. Tagged so vertex and edge sets
/// cannot be mixed up.
template <typename Tag>
class IdSet {
public:
    using value_type = int;
    using const_iterator = std::vector<int>::const_iterator;

    IdSet() = default;
    IdSet(std::initializer_list<int> ids) : IdSet(std::vector<int>(ids)) {}
    explicit IdSet(std::vector<int> ids) : ids_(std::move(ids))
    {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    static IdSet from_mask(std::uint64_t mask)
    {
        std::vector<int> ids;
        ids.reserve(static_cast<std::size_t>(std::popcount(mask)));
        for (; mask != 0; mask &= mask - 1) {
            ids.push_back(std::countr_zero(mask));
        }
        IdSet s;
        s.ids_ = std::move(ids);
        return s;
    }

    static IdSet range(int count)
    {
        IdSet s;
        s.ids_.resize(static_cast<std::size_t>(std::max(count, 0)));
        for (int i = 0; i < count; ++i) {
            s.ids_[static_cast<std::size_t>(i)] = i;
        }
        return s;
    }

    bool contains(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const_iterator begin() const { return ids_.begin(); }
    const_iterator end() const { return ids_.end(); }
    const std::vector<int>& ids() const { return ids_; }
    int front() const { return ids_.front(); }
    int back() const { return ids_.back(); }

    /// Bit mask of the members; every member must be below 64.
    std::uint64_t mask() const
    {
        std::uint64_t m = 0;
        for (int id : ids_) {
            if (id < 0 || id >= 64) {
                throw InputError("id " + std::to_string(id) + " does not fit a 64-bit mask");
            }
            m |= std::uint64_t{1} << id;
        }
        return m;
    }

    friend bool operator==(const IdSet&, const IdSet&) = default;

private:
    std::vector<int> ids_;
};

struct VertexTag;
struct EdgeTag;
using VertexSet = IdSet<VertexTag>;
using EdgeSet = IdSet<EdgeTag>;

std::string to_string(const VertexSet& set);

/// Partition of a ground vertex set into disjoint nonempty blocks. Blocks are
/// kept in the order given; the ground set is their union.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<VertexSet> blocks);
    Partition(std::initializer_list<std::initializer_list<int>> blocks);

    /// Builds the partition whose block i holds ground[j] for every j with
    /// labels[j] == i.
    static Partition from_labels(std::span<const Vertex> ground, std::span<const int> labels,
                                 int block_count);

    const std::vector<VertexSet>& blocks() const { return blocks_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const VertexSet& ground() const { return ground_; }
    int trivial_count() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<VertexSet> blocks_;
    VertexSet ground_;
};

std::string to_string(const Partition& partition);

/// Undirected multigraph on vertices 0..n-1. Parallel edges allowed, loops
/// rejected. Edge ids are dense and follow insertion order.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);
    Multigraph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

    EdgeId add_edge(Vertex u, Vertex v);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
    std::span<const Edge> edges() const { return edges_; }
    EdgeSet all_edges() const { return EdgeSet::range(edge_count()); }
    VertexSet all_vertices() const { return VertexSet::range(n_); }

    /// Maximum number of parallel edges between one vertex pair (0 if edgeless).
    int multiplicity() const;

    void require_vertex(Vertex v) const;
    void require_edges(const EdgeSet& f) const;
    void require_vertices(const VertexSet& x) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// Spanning subgraph restricted to some edges; `original[i]` is the host id of
/// the subgraph's edge i.
struct EdgeSubgraph {
    Multigraph graph;
    std::vector<EdgeId> original;
};

EdgeSubgraph edge_subgraph(const Multigraph& g, const EdgeSet& f);

/// Number of edges of `g` with both ends in `x`.
int induced_edge_count(const Multigraph& g, const VertexSet& x);
/// Number of edges of `f` with both ends in `x`.
int induced_edge_count(const Multigraph& g, const EdgeSet& f, const VertexSet& x);

/// Edges whose ends lie in two different blocks. Edges with an end outside the
/// partition's ground set are ignored.
int cross_edge_count(const Multigraph& g, const Partition& pi);

/// Sum over blocks of the number of vertices of `z` adjacent to the block.
/// Parallel edges count once per (z, block) pair.
int adjacent_number(const Multigraph& g, const VertexSet& z, const Partition& pi);

int component_count(const Multigraph& g, const EdgeSet& f);
bool is_connected(const Multigraph& g);
std::vector<int> degrees(const Multigraph& g, const EdgeSet& f);

/// Calls `visit(mask)` for every subset of {0..n-1} with at least `min_size`
/// members, in increasing mask order. `visit` returns false to stop early.
template <typename Visitor>
void for_each_subset_mask(int n, int min_size, const Limits& limits, Visitor&& visit)
{
    require_subset_limit(n, limits);
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        if (std::popcount(mask) < min_size) {
            continue;
        }
        if (!visit(mask)) {
            return;
        }
    }
}

std::vector<VertexSet> enumerate_vertex_subsets(const Multigraph& g, int min_size,
                                                const Limits& limits = {});

/// Visits every set partition of `ground` as a restricted growth string:
/// `visit(labels, block_count)` where labels[j] is the block of ground[j].
/// Lexicographic order on the strings; the one-block partition comes first.
template <typename Visitor>
void for_each_partition_labels(std::span<const Vertex> ground, const Limits& limits,
                               Visitor&& visit)
{
    const int s = static_cast<int>(ground.size());
    require_partition_limit(s, limits);
    if (s == 0) {
        visit(std::span<const int>{}, 0);
        return;
    }
    std::vector<int> labels(static_cast<std::size_t>(s), 0);
    // prefix_max[j] = max(labels[0..j])
    std::vector<int> prefix_max(static_cast<std::size_t>(s), 0);
    while (true) {
        if (!visit(std::span<const int>(labels), prefix_max.back() + 1)) {
            return;
        }
        int j = s - 1;
        while (j > 0 && labels[j] > prefix_max[j - 1]) {
            --j;
        }
        if (j == 0) {
            return;
        }
        ++labels[j];
        prefix_max[j] = std::max(prefix_max[j - 1], labels[j]);
        for (int t = j + 1; t < s; ++t) {
            labels[t] = 0;
            prefix_max[t] = prefix_max[j];
        }
    }
}

std::vector<Partition> enumerate_partitions(const VertexSet& s, const Limits& limits = {});

/// Random multigraph with exactly m edges and no vertex pair above
/// `max_multiplicity`. Deterministic for a fixed seed.
Multigraph random_multigraph(int n, int m, int max_multiplicity, std::uint64_t seed);

/// Text format: "n m" then m lines "u v". Throws GraphParseError.
Multigraph parse_graph(std::istream& in);
Multigraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Multigraph& g);

class GraphParseError : public InputError {
public:
    GraphParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// FNV-1a 64 over the canonical edge list, as 16 hex digits.
std::string graph_hash(const Multigraph& g);

// Named small graphs used by tests, examples and the CLI corpus.
namespace graphs {
Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph cycle(int n);
Multigraph path(int n);
Multigraph bowtie();
} // namespace graphs

} // namespace sparsity

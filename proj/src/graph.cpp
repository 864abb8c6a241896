#include "sparsity/graph.hpp"

#include "sparsity/disjoint_sets.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace sparsity {

void require_subset_limit(int n, const Limits& limits)
{
    if (n > limits.max_subset_vertices || n > 30) {
        throw LimitExceeded("max-n (exhaustive subset limit)", limits.max_subset_vertices, n);
    }
}

void require_partition_limit(int n, const Limits& limits)
{
    if (n > limits.max_partition_vertices || n > 30) {
        throw LimitExceeded("max-partitions (partition ground-set limit)",
                            limits.max_partition_vertices, n);
    }
}

std::string to_string(const VertexSet& set)
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : set) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Partition::Partition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks))
{
    std::vector<Vertex> all;
    for (const auto& b : blocks_) {
        if (b.empty()) {
            throw InputError("partition has an empty block");
        }
        all.insert(all.end(), b.begin(), b.end());
    }
    ground_ = VertexSet(all);
    if (ground_.size() != static_cast<int>(all.size())) {
        throw InputError("partition blocks overlap");
    }
}

Partition::Partition(std::initializer_list<std::initializer_list<int>> blocks)
    : Partition([&] {
          std::vector<VertexSet> bs;
          for (const auto& b : blocks) {
              bs.emplace_back(std::vector<int>(b));
          }
          return bs;
      }())
{
}

Partition Partition::from_labels(std::span<const Vertex> ground, std::span<const int> labels,
                                 int block_count)
{
    std::vector<std::vector<int>> members(static_cast<std::size_t>(block_count));
    for (std::size_t j = 0; j < ground.size(); ++j) {
        members.at(static_cast<std::size_t>(labels[j])).push_back(ground[j]);
    }
    std::vector<VertexSet> blocks;
    blocks.reserve(members.size());
    for (auto& m : members) {
        blocks.emplace_back(std::move(m));
    }
    return Partition(std::move(blocks));
}

int Partition::trivial_count() const
{
    return static_cast<int>(
        std::count_if(blocks_.begin(), blocks_.end(), [](const VertexSet& b) { return b.size() == 1; }));
}

std::string to_string(const Partition& partition)
{
    std::string out = "{";
    for (std::size_t i = 0; i < partition.blocks().size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += to_string(partition.blocks()[i]);
    }
    return out + "}";
}

Multigraph::Multigraph(int vertex_count) : n_(vertex_count)
{
    if (vertex_count < 0) {
        throw InputError("negative vertex count");
    }
}

Multigraph::Multigraph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Multigraph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()))
{
}

Multigraph::Multigraph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : Multigraph(vertex_count)
{
    edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        add_edge(u, v);
    }
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v)
{
    require_vertex(u);
    require_vertex(v);
    if (u == v) {
        throw InputError("loop at vertex " + std::to_string(u));
    }
    const EdgeId id = edge_count();
    edges_.push_back({id, u, v});
    return id;
}

int Multigraph::multiplicity() const
{
    std::map<std::pair<Vertex, Vertex>, int> count;
    int best = 0;
    for (const Edge& e : edges_) {
        best = std::max(best, ++count[std::minmax(e.u, e.v)]);
    }
    return best;
}

void Multigraph::require_vertex(Vertex v) const
{
    if (v < 0 || v >= n_) {
        throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }
}

void Multigraph::require_edges(const EdgeSet& f) const
{
    if (!f.empty() && (f.front() < 0 || f.back() >= edge_count())) {
        throw InputError("edge id out of range [0," + std::to_string(edge_count()) + ")");
    }
}

void Multigraph::require_vertices(const VertexSet& x) const
{
    if (!x.empty()) {
        require_vertex(x.front());
        require_vertex(x.back());
    }
}

EdgeSubgraph edge_subgraph(const Multigraph& g, const EdgeSet& f)
{
    g.require_edges(f);
    EdgeSubgraph sub{Multigraph(g.vertex_count()), {}};
    sub.original.reserve(static_cast<std::size_t>(f.size()));
    for (EdgeId id : f) {
        const Edge& e = g.edge(id);
        sub.graph.add_edge(e.u, e.v);
        sub.original.push_back(id);
    }
    return sub;
}

namespace {

std::vector<char> membership(const Multigraph& g, const VertexSet& x)
{
    g.require_vertices(x);
    std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : x) {
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

} // namespace

int induced_edge_count(const Multigraph& g, const VertexSet& x)
{
    const auto in = membership(g, x);
    int count = 0;
    for (const Edge& e : g.edges()) {
        count += in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)];
    }
    return count;
}

int induced_edge_count(const Multigraph& g, const EdgeSet& f, const VertexSet& x)
{
    g.require_edges(f);
    const auto in = membership(g, x);
    int count = 0;
    for (EdgeId id : f) {
        const Edge& e = g.edge(id);
        count += in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)];
    }
    return count;
}

namespace {

/// block label per vertex, -1 outside the ground set
std::vector<int> block_labels(const Multigraph& g, const Partition& pi)
{
    g.require_vertices(pi.ground());
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int b = 0; b < pi.size(); ++b) {
        for (Vertex v : pi.blocks()[static_cast<std::size_t>(b)]) {
            label[static_cast<std::size_t>(v)] = b;
        }
    }
    return label;
}

} // namespace

int cross_edge_count(const Multigraph& g, const Partition& pi)
{
    const auto label = block_labels(g, pi);
    int count = 0;
    for (const Edge& e : g.edges()) {
        const int a = label[static_cast<std::size_t>(e.u)];
        const int b = label[static_cast<std::size_t>(e.v)];
        count += a >= 0 && b >= 0 && a != b;
    }
    return count;
}

int adjacent_number(const Multigraph& g, const VertexSet& z, const Partition& pi)
{
    const auto label = block_labels(g, pi);
    const auto in_z = membership(g, z);
    for (Vertex v : z) {
        if (label[static_cast<std::size_t>(v)] >= 0) {
            throw InputError("vertex " + std::to_string(v) + " lies in both Z and the partition");
        }
    }
    std::vector<std::vector<char>> sees(static_cast<std::size_t>(g.vertex_count()));
    int total = 0;
    auto mark = [&](Vertex zv, Vertex w) {
        const int b = label[static_cast<std::size_t>(w)];
        if (!in_z[static_cast<std::size_t>(zv)] || b < 0) {
            return;
        }
        auto& row = sees[static_cast<std::size_t>(zv)];
        row.resize(static_cast<std::size_t>(pi.size()), 0);
        if (!row[static_cast<std::size_t>(b)]) {
            row[static_cast<std::size_t>(b)] = 1;
            ++total;
        }
    };
    for (const Edge& e : g.edges()) {
        mark(e.u, e.v);
        mark(e.v, e.u);
    }
    return total;
}

int component_count(const Multigraph& g, const EdgeSet& f)
{
    g.require_edges(f);
    DisjointSets dsu(g.vertex_count());
    int components = g.vertex_count();
    for (EdgeId id : f) {
        components -= dsu.unite(g.edge(id).u, g.edge(id).v);
    }
    return components;
}

bool is_connected(const Multigraph& g)
{
    return component_count(g, g.all_edges()) <= 1;
}

std::vector<int> degrees(const Multigraph& g, const EdgeSet& f)
{
    g.require_edges(f);
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId id : f) {
        ++deg[static_cast<std::size_t>(g.edge(id).u)];
        ++deg[static_cast<std::size_t>(g.edge(id).v)];
    }
    return deg;
}

std::vector<VertexSet> enumerate_vertex_subsets(const Multigraph& g, int min_size, const Limits& limits)
{
    std::vector<VertexSet> out;
    for_each_subset_mask(g.vertex_count(), min_size, limits, [&](std::uint32_t mask) {
        out.push_back(VertexSet::from_mask(mask));
        return true;
    });
    return out;
}

std::vector<Partition> enumerate_partitions(const VertexSet& s, const Limits& limits)
{
    std::vector<Partition> out;
    for_each_partition_labels(std::span<const Vertex>(s.ids()), limits,
                              [&](std::span<const int> labels, int blocks) {
                                  out.push_back(Partition::from_labels(s.ids(), labels, blocks));
                                  return true;
                              });
    return out;
}

Multigraph random_multigraph(int n, int m, int max_multiplicity, std::uint64_t seed)
{
    if (n < 0 || m < 0 || max_multiplicity < 0) {
        throw InputError("random graph parameters must be non-negative");
    }
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m > pairs * max_multiplicity) {
        throw InputError("infeasible: " + std::to_string(m) + " edges exceed " +
                         std::to_string(max_multiplicity) + " x C(" + std::to_string(n) + ",2)");
    }
    // one slot per allowed parallel copy; a shuffled prefix of the slot list
    // is a uniform choice of m slots
    std::vector<std::pair<Vertex, Vertex>> slots;
    slots.reserve(static_cast<std::size_t>(pairs * max_multiplicity));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            for (int c = 0; c < max_multiplicity; ++c) {
                slots.emplace_back(u, v);
            }
        }
    }
    std::mt19937_64 rng(seed);
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(static_cast<std::size_t>(m));
    return Multigraph(n, std::span<const std::pair<Vertex, Vertex>>(slots));
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no)
{
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace

Multigraph parse_graph(std::istream& in)
{
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) {
        throw GraphParseError(line_no + 1, "missing header \"n m\"");
    }
    long long n = 0;
    long long m = 0;
    {
        std::istringstream header(line);
        std::string rest;
        if (!(header >> n >> m) || (header >> rest)) {
            throw GraphParseError(line_no, "expected header \"n m\"");
        }
        if (n < 0 || m < 0 || n > (1 << 24) || m > (1 << 26)) {
            throw GraphParseError(line_no, "header values out of range");
        }
    }
    Multigraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, line_no)) {
            throw GraphParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                                   std::to_string(i));
        }
        std::istringstream row(line);
        long long u = 0;
        long long v = 0;
        std::string rest;
        if (!(row >> u >> v) || (row >> rest)) {
            throw GraphParseError(line_no, "expected edge \"u v\"");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphParseError(line_no, "endpoint out of range");
        }
        if (u == v) {
            throw GraphParseError(line_no, "loops are not allowed");
        }
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_content_line(in, line, line_no)) {
        throw GraphParseError(line_no, "unexpected content after " + std::to_string(m) + " edges");
    }
    return g;
}

Multigraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Multigraph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v << '\n';
    }
}

std::string graph_hash(const Multigraph& g)
{
    std::ostringstream canonical;
    canonical << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        canonical << std::min(e.u, e.v) << ' ' << std::max(e.u, e.v) << '\n';
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical.str()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    }
    return out;
}

namespace graphs {

Multigraph complete(int n)
{
    Multigraph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Multigraph complete_bipartite(int a, int b)
{
    Multigraph g(a + b);
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = a; v < a + b; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Multigraph cycle(int n)
{
    Multigraph g(n);
    for (Vertex u = 0; u < n; ++u) {
        g.add_edge(u, (u + 1) % n);
    }
    return g;
}

Multigraph path(int n)
{
    Multigraph g(n);
    for (Vertex u = 0; u + 1 < n; ++u) {
        g.add_edge(u, u + 1);
    }
    return g;
}

Multigraph bowtie()
{
    return Multigraph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

} // namespace graphs

} // namespace sparsity

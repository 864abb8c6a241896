#pragma once

#include "sparsity/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sparsity::testing {

/// Every simple graph on n labelled vertices (2^C(n,2) of them), edges in
/// lexicographic pair order.
std::vector<Multigraph> all_simple_graphs(int n);

struct RandomSpec {
    int min_n = 2;
    int max_n = 6;
    int max_m = 12;
    int max_multiplicity = 3;
    bool connected = false;
};

/// `count` random multigraphs; n, m and the multiplicity cap drawn per graph.
/// Deterministic in `seed`.
std::vector<Multigraph> random_corpus(int count, const RandomSpec& spec, std::uint64_t seed);

/// Rigidity rank by the collection formula: min over collections of vertex sets whose induced
/// F-edges partition F of sum(2|X| - 3). Exponential; |F| <= 16.
int rigidity_rank_by_collections(const Multigraph& g, const EdgeSet& f);

/// Minimum over all bipartitions of `keep` of the crossing edge count in
/// G[keep]; nullopt when |keep| < 2.
std::optional<int> min_cut_bruteforce(const Multigraph& g, const VertexSet& keep);

/// No cut vertex and connected (n >= 3).
bool is_biconnected(const Multigraph& g);

Multigraph doubled(const Multigraph& g);
Multigraph without_edge(const Multigraph& g, EdgeId e);

} // namespace sparsity::testing

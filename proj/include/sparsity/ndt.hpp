#pragma once

#include "sparsity/conditions.hpp"
#include "sparsity/graph.hpp"

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

namespace sparsity {

/// Degree bound (2n-5)/3 shared by the forest-plus-bounded splits.
Fraction bounded_degree(int vertex_count);
/// Integer degree limit floor((2n-5)/3); may be negative for n <= 2, in which
/// case only an empty remainder is allowed.
int bounded_degree_limit(int vertex_count);

/// l forests plus parts whose maximum degree is at most floor((2n-5)/3).
struct BoundedCover {
    std::vector<EdgeSet> forests;
    std::vector<EdgeSet> bounded_parts;
    Fraction degree_bound;

    int degree_limit() const { return static_cast<int>(degree_bound.floor()); }
};

/// Re-checks a cover from scratch: parts partition E, forests are acyclic and
/// bounded parts respect the integer degree limit.
bool verify_bounded_cover(const Multigraph& g, const BoundedCover& cover);

/// Two forests covering a (2,3)-sparse graph. Throws InputError otherwise.
std::pair<EdgeSet, EdgeSet> sparse_to_two_forests(const Multigraph& h);

enum class SearchStatus { Found, NoDecomposition, Undecided };

struct ForestBoundedSplit {
    SearchStatus status = SearchStatus::Undecided;
    EdgeSet forest;
    EdgeSet remainder;
    /// n >= 6: a split is known to exist for sparse input.
    bool guaranteed = false;
    std::int64_t nodes = 0;
};

/// Forest plus a remainder of max degree <= floor((2n-5)/3), by exhaustive
/// backtracking (forest first, edge-id order) under a node budget. Input must
/// be sparse.
ForestBoundedSplit sparse_to_forest_plus_bounded(const Multigraph& h, std::int64_t budget = 10'000'000);

/// A step-(iii) split search that did not produce a split for a sparse class.
struct NdtStalled {
    int class_index = 0; // 1-based sparse class
    ForestBoundedSplit split;
};

using NdtOutcome = std::variant<BoundedCover, ConditionReport, NdtStalled>;

/// l forests and 2k+2-l bounded-degree parts when gamma_2(G) <= k+1: split G
/// into k+1 sparse classes, turn the first l-k-1 into two forests each and the
/// rest into a forest plus a bounded part. Needs k >= 0, k+1 <= l <= 2k+2 and
/// a connected G.
NdtOutcome ndt_decompose(const Multigraph& g, int k, int l, const Limits& limits = {});

} // namespace sparsity

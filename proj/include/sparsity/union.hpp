#pragma once

#include "sparsity/conditions.hpp"
#include "sparsity/graph.hpp"

#include <variant>
#include <vector>

namespace sparsity {

/// Assignment of edges to k sparse colors (1..k) and l forest colors
/// (k+1..k+l); 0 marks an uncovered edge.
struct Decomposition {
    static constexpr int kUncovered = 0;

    int k = 0;
    int l = 0;
    std::vector<int> assignment;

    int color_count() const { return k + l; }
    bool is_sparse_color(int c) const { return c >= 1 && c <= k; }
    bool is_forest_color(int c) const { return c > k && c <= k + l; }
    bool is_complete() const;
    EdgeSet color_class(int c) const;
    EdgeSet covered() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Checks the decomposition against the graph from scratch: ids in range,
/// colors valid, sparse classes (2,3)-sparse, forest classes acyclic.
/// Completeness is not required.
bool verify_decomposition(const Multigraph& g, const Decomposition& d);

struct UnionRank {
    int rank = 0;
    EdgeSet independent_set;
    Decomposition decomposition;
    /// For the first edge that could not be absorbed: every edge reached by
    /// the exchange search, including that edge. Its size exceeds
    /// k r_R + l r_M on it, so it certifies rank deficiency. Empty when
    /// every edge was absorbed.
    EdgeSet deficient_set;
};

/// Maximum edge set partitionable into k sparse sets and l forests, via
/// shortest augmenting paths in the exchange graph. Edges are seeded in id
/// order and colors tried in order 1..k+l, so the result is deterministic.
UnionRank union_rank(const Multigraph& g, int k, int l);

/// min over F of k r_R(F) + l r_M(F) + |E - F| by enumerating all F.
int union_rank_bruteforce(const Multigraph& g, int k, int l, const Limits& limits = {});

/// Either a complete decomposition or a report explaining why none exists.
using DecomposeOutcome = std::variant<Decomposition, ConditionReport>;

/// Decomposition into k sparse subgraphs. G must be connected. On failure the
/// report carries the first violating X of i(X) <= k(2|X|-3) when n is within
/// the subset guardrail, otherwise a rank-deficient edge set (non-definitional).
DecomposeOutcome decompose_sparse(const Multigraph& g, int k, const Limits& limits = {});

/// Decomposition into l forests; G must be connected. Failure witness as above
/// for i(X) <= l(|X|-1).
DecomposeOutcome decompose_forests(const Multigraph& g, int l, const Limits& limits = {});

/// k sparse sets and l forests together, any graph. Failure carries a violator
/// of the combined density bound when one exists, else the deficient set.
DecomposeOutcome decompose_mixed(const Multigraph& g, int k, int l, const Limits& limits = {});

/// Report built from a union rank's deficient edge set.
ConditionReport deficiency_report(const Multigraph& g, const UnionRank& result, std::string condition);

/// Re-checks a non-definitional report: the edge set S must satisfy
/// |S| > k r_R(S) + l r_M(S) with the recorded lhs/rhs.
bool confirms_deficiency(const Multigraph& g, const ConditionReport& report);

} // namespace sparsity

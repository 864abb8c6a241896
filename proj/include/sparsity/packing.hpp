#pragma once

#include "sparsity/conditions.hpp"
#include "sparsity/union.hpp"

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace sparsity {

/// Edge-disjoint spanning rigid subgraphs (each a base of R(G)) and spanning
/// trees.
struct Packing {
    std::vector<EdgeSet> rigid_parts;
    std::vector<EdgeSet> tree_parts;

    friend bool operator==(const Packing&, const Packing&) = default;
};

/// Rank shortfall: the union decomposition is returned as-is and is not a
/// packing. `witness` holds a violated partition condition when one was found.
struct PackingFailure {
    UnionRank partial;
    std::int64_t target = 0;
    std::optional<ConditionReport> witness;
};

using PackOutcome = std::variant<Packing, PackingFailure>;

/// l edge-disjoint spanning trees. On failure the witness is the first
/// partition violating e(pi) >= l(|pi|-1), searched only within the
/// partition guardrail.
PackOutcome pack_spanning_trees(const Multigraph& g, int l, const Limits& limits = {});

/// k spanning rigid subgraphs and l spanning trees, edge-disjoint. Succeeds
/// iff the union rank reaches k(2n-3) + l(n-1). Requires n >= 2.
PackOutcome pack_rigid_and_trees(const Multigraph& g, int k, int l);

enum class PackingDefect {
    None,
    BadEdgeId,
    Overlap,
    RigidWrongSize,
    RigidNotSparse,
    RigidNotSpanning,
    TreeWrongSize,
    TreeCyclic,
    TreeNotSpanning,
};

std::string_view to_string(PackingDefect defect);

struct PackingCheck {
    PackingDefect defect = PackingDefect::None;
    int part = -1; // index into rigid_parts, or rigid_parts.size() + tree index

    bool ok() const { return defect == PackingDefect::None; }
};

/// Re-checks every packing invariant from scratch.
PackingCheck verify_packing(const Multigraph& g, const Packing& packing);

/// Packing from a complete-rank union decomposition (class c becomes part c).
Packing packing_from(const Decomposition& d);

} // namespace sparsity

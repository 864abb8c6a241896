#include "sparsity/packing.hpp"

#include "sparsity/matroids.hpp"

namespace sparsity {

Packing packing_from(const Decomposition& d)
{
    Packing p;
    for (int c = 1; c <= d.color_count(); ++c) {
        (d.is_sparse_color(c) ? p.rigid_parts : p.tree_parts).push_back(d.color_class(c));
    }
    return p;
}

PackOutcome pack_spanning_trees(const Multigraph& g, int l, const Limits& limits)
{
    if (l < 1) {
        throw InputError("tree packing needs l >= 1");
    }
    const int n = g.vertex_count();
    if (n < 1) {
        throw InputError("tree packing needs at least one vertex");
    }
    UnionRank result = union_rank(g, 0, l);
    const std::int64_t target = static_cast<std::int64_t>(l) * (n - 1);
    if (result.rank == target) {
        return packing_from(result.decomposition);
    }
    PackingFailure failure{std::move(result), target, std::nullopt};
    if (n <= limits.max_partition_vertices) {
        ConditionReport report = check_tree_packing_condition(g, l, limits);
        if (!report.holds) {
            failure.witness = std::move(report);
        }
    }
    return failure;
}

PackOutcome pack_rigid_and_trees(const Multigraph& g, int k, int l)
{
    if (k < 1 || l < 0) {
        throw InputError("rigid packing needs k >= 1 and l >= 0");
    }
    const int n = g.vertex_count();
    if (n < 2) {
        throw InputError("rigid packing needs at least 2 vertices");
    }
    UnionRank result = union_rank(g, k, l);
    const std::int64_t target = static_cast<std::int64_t>(k) * (2 * n - 3) + static_cast<std::int64_t>(l) * (n - 1);
    if (result.rank == target) {
        return packing_from(result.decomposition);
    }
    return PackingFailure{std::move(result), target, std::nullopt};
}

std::string_view to_string(PackingDefect defect)
{
    switch (defect) {
    case PackingDefect::None: return "none";
    case PackingDefect::BadEdgeId: return "bad-edge-id";
    case PackingDefect::Overlap: return "overlap";
    case PackingDefect::RigidWrongSize: return "rigid-wrong-size";
    case PackingDefect::RigidNotSparse: return "rigid-not-sparse";
    case PackingDefect::RigidNotSpanning: return "rigid-not-spanning";
    case PackingDefect::TreeWrongSize: return "tree-wrong-size";
    case PackingDefect::TreeCyclic: return "tree-cyclic";
    case PackingDefect::TreeNotSpanning: return "tree-not-spanning";
    }
    return "unknown";
}

PackingCheck verify_packing(const Multigraph& g, const Packing& packing)
{
    const int n = g.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    const auto parts = packing.rigid_parts.size() + packing.tree_parts.size();
    for (std::size_t i = 0; i < parts; ++i) {
        const bool rigid = i < packing.rigid_parts.size();
        const EdgeSet& part = rigid ? packing.rigid_parts[i] : packing.tree_parts[i - packing.rigid_parts.size()];
        const int index = static_cast<int>(i);
        for (EdgeId id : part) {
            if (id < 0 || id >= g.edge_count()) {
                return {PackingDefect::BadEdgeId, index};
            }
            if (used[static_cast<std::size_t>(id)]++) {
                return {PackingDefect::Overlap, index};
            }
        }
        const auto touched = degrees(g, part);
        const bool spanning = n <= 1 || std::all_of(touched.begin(), touched.end(), [](int d) { return d > 0; });
        if (rigid) {
            if (part.size() != 2 * n - 3) {
                return {PackingDefect::RigidWrongSize, index};
            }
            if (!sparse_independent(g, part).sparse) {
                return {PackingDefect::RigidNotSparse, index};
            }
            if (!spanning) {
                return {PackingDefect::RigidNotSpanning, index};
            }
        } else {
            if (part.size() != std::max(n - 1, 0)) {
                return {PackingDefect::TreeWrongSize, index};
            }
            if (!graphic_independent(g, part)) {
                return {PackingDefect::TreeCyclic, index};
            }
            if (n >= 1 && component_count(g, part) != 1) {
                return {PackingDefect::TreeNotSpanning, index};
            }
        }
    }
    return {};
}

} // namespace sparsity

#pragma once

#include "sparsity/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sparsity {

struct RankResult {
    int rank = 0;
    EdgeSet basis;
};

/// Outcome of a sparsity test; `violator` is set when the set is not sparse
/// and satisfies i_F(X) > 2|X| - 3.
struct SparsityCheck {
    bool sparse = true;
    std::optional<VertexSet> violator;
};

// Graphic matroid M(G): independent sets are forests.
bool graphic_independent(const Multigraph& g, const EdgeSet& f);
/// rank = n - c(F), isolated vertices counted as components.
RankResult graphic_rank(const Multigraph& g, const EdgeSet& f);

// Rigidity matroid R(G): independent sets are the (2,3)-sparse sets.
SparsityCheck sparse_independent(const Multigraph& g, const EdgeSet& f);
RankResult rigidity_rank(const Multigraph& g, const EdgeSet& f);
/// Greedy rank with edges inserted in the given order.
RankResult rigidity_rank(const Multigraph& g, std::span<const EdgeId> order);

/// Definitional check over every X with |X| >= 2. Reference oracle.
bool sparse_independent_bruteforce(const Multigraph& g, const EdgeSet& f, const Limits& limits = {});

/// Rigid iff the rigidity rank of E is 2n - 3. Requires n >= 2.
bool is_rigid(const Multigraph& g);
bool is_minimally_rigid(const Multigraph& g);

/// Independence oracle over the edges of a fixed graph, as needed by matroid
/// union. Sets are passed as id lists in any order.
class EdgeMatroid {
public:
    virtual ~EdgeMatroid() = default;

    virtual bool independent(std::span<const EdgeId> set) const = 0;

    /// For an independent `set` and e outside it: nullopt if set + e stays
    /// independent, otherwise the members y of `set` whose removal restores
    /// independence (the fundamental circuit minus e).
    virtual std::optional<std::vector<EdgeId>> circuit(std::span<const EdgeId> set, EdgeId e) const = 0;
};

class GraphicMatroid final : public EdgeMatroid {
public:
    explicit GraphicMatroid(const Multigraph& g) : g_(g) {}
    bool independent(std::span<const EdgeId> set) const override;
    std::optional<std::vector<EdgeId>> circuit(std::span<const EdgeId> set, EdgeId e) const override;

private:
    const Multigraph& g_;
};

class RigidityMatroid final : public EdgeMatroid {
public:
    explicit RigidityMatroid(const Multigraph& g) : g_(g) {}
    bool independent(std::span<const EdgeId> set) const override;
    std::optional<std::vector<EdgeId>> circuit(std::span<const EdgeId> set, EdgeId e) const override;

private:
    const Multigraph& g_;
};

} // namespace sparsity

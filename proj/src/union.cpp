#include "sparsity/union.hpp"

#include "sparsity/matroids.hpp"

#include <bit>
#include <memory>

namespace sparsity {

bool Decomposition::is_complete() const
{
    return std::none_of(assignment.begin(), assignment.end(), [](int c) { return c == kUncovered; });
}

EdgeSet Decomposition::color_class(int c) const
{
    std::vector<EdgeId> ids;
    for (std::size_t e = 0; e < assignment.size(); ++e) {
        if (assignment[e] == c) {
            ids.push_back(static_cast<EdgeId>(e));
        }
    }
    return EdgeSet(std::move(ids));
}

EdgeSet Decomposition::covered() const
{
    std::vector<EdgeId> ids;
    for (std::size_t e = 0; e < assignment.size(); ++e) {
        if (assignment[e] != kUncovered) {
            ids.push_back(static_cast<EdgeId>(e));
        }
    }
    return EdgeSet(std::move(ids));
}

bool verify_decomposition(const Multigraph& g, const Decomposition& d)
{
    if (d.k < 0 || d.l < 0 || static_cast<int>(d.assignment.size()) != g.edge_count()) {
        return false;
    }
    for (int c : d.assignment) {
        if (c < 0 || c > d.color_count()) {
            return false;
        }
    }
    for (int c = 1; c <= d.color_count(); ++c) {
        const EdgeSet cls = d.color_class(c);
        const bool ok = d.is_sparse_color(c) ? sparse_independent(g, cls).sparse : graphic_independent(g, cls);
        if (!ok) {
            return false;
        }
    }
    return true;
}

namespace {

class UnionSolver {
public:
    UnionSolver(const Multigraph& g, int k, int l) : g_(g), k_(k), l_(l), rigidity_(g), graphic_(g)
    {
        color_.assign(static_cast<std::size_t>(g.edge_count()), Decomposition::kUncovered);
        members_.resize(static_cast<std::size_t>(k + l + 1));
    }

    /// Tries to absorb uncovered edge e; on failure returns the visited edges.
    std::optional<std::vector<EdgeId>> absorb(EdgeId e)
    {
        const std::size_t m = color_.size();
        constexpr int kNone = -1;
        std::vector<EdgeId> parent(m, kNone);   // element that displaced this one
        std::vector<int> parent_color(m, 0);    // color the parent moves into
        std::vector<char> seen(m, 0);
        std::vector<EdgeId> queue{e};
        seen[static_cast<std::size_t>(e)] = 1;

        for (std::size_t head = 0; head < queue.size(); ++head) {
            const EdgeId x = queue[head];
            for (int c = 1; c <= k_ + l_; ++c) {
                if (color_[static_cast<std::size_t>(x)] == c) {
                    continue;
                }
                const auto circuit = oracle(c).circuit(members_[static_cast<std::size_t>(c)], x);
                if (!circuit) {
                    augment(x, c, parent, parent_color);
                    return std::nullopt;
                }
                for (EdgeId y : *circuit) {
                    if (!seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        parent[static_cast<std::size_t>(y)] = x;
                        parent_color[static_cast<std::size_t>(y)] = c;
                        queue.push_back(y);
                    }
                }
            }
        }
        return queue;
    }

    Decomposition decomposition() const { return {k_, l_, color_}; }

private:
    const EdgeMatroid& oracle(int c) const
    {
        return c <= k_ ? static_cast<const EdgeMatroid&>(rigidity_) : static_cast<const EdgeMatroid&>(graphic_);
    }

    /// x enters color c; each displaced element's parent follows into the
    /// color it vacated.
    void augment(EdgeId x, int c, const std::vector<EdgeId>& parent, const std::vector<int>& parent_color)
    {
        EdgeId cur = x;
        int target = c;
        while (true) {
            move(cur, target);
            const EdgeId p = parent[static_cast<std::size_t>(cur)];
            if (p < 0) {
                break;
            }
            target = parent_color[static_cast<std::size_t>(cur)];
            cur = p;
        }
    }

    void move(EdgeId x, int c)
    {
        const int old = color_[static_cast<std::size_t>(x)];
        if (old != Decomposition::kUncovered) {
            auto& list = members_[static_cast<std::size_t>(old)];
            list.erase(std::find(list.begin(), list.end(), x));
        }
        members_[static_cast<std::size_t>(c)].push_back(x);
        color_[static_cast<std::size_t>(x)] = c;
    }

    const Multigraph& g_;
    int k_;
    int l_;
    RigidityMatroid rigidity_;
    GraphicMatroid graphic_;
    std::vector<int> color_;
    std::vector<std::vector<EdgeId>> members_;
};

} // namespace

UnionRank union_rank(const Multigraph& g, int k, int l)
{
    if (k < 0 || l < 0 || k + l < 1) {
        throw InputError("union rank needs k, l >= 0 and k + l >= 1");
    }
    UnionSolver solver(g, k, l);
    UnionRank result;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto blocked = solver.absorb(e);
        if (blocked && result.deficient_set.empty()) {
            result.deficient_set = EdgeSet(std::move(*blocked));
        }
    }
    result.decomposition = solver.decomposition();
    result.independent_set = result.decomposition.covered();
    result.rank = result.independent_set.size();
    return result;
}

int union_rank_bruteforce(const Multigraph& g, int k, int l, const Limits& limits)
{
    if (k < 0 || l < 0 || k + l < 1) {
        throw InputError("union rank needs k, l >= 0 and k + l >= 1");
    }
    const int m = g.edge_count();
    if (m > limits.max_bruteforce_edges || m > 30) {
        throw LimitExceeded("edge limit for the brute-force union rank", limits.max_bruteforce_edges, m);
    }
    int best = m; // F = {} gives |E|
    const std::uint32_t end = std::uint32_t{1} << m;
    for (std::uint32_t f = 1; f < end; ++f) {
        const EdgeSet fs = EdgeSet::from_mask(f);
        const int value = k * rigidity_rank(g, fs).rank + l * graphic_rank(g, fs).rank + (m - std::popcount(f));
        best = std::min(best, value);
    }
    return best;
}

ConditionReport deficiency_report(const Multigraph& g, const UnionRank& result, std::string condition)
{
    const Decomposition& d = result.decomposition;
    ConditionReport report = make_report(std::move(condition), {{"k", d.k}, {"l", d.l}});
    report.holds = false;
    report.definitional = false;
    report.relation = Relation::AtMost;
    report.witness = result.deficient_set;
    report.lhs = result.deficient_set.size();
    report.rhs = static_cast<std::int64_t>(d.k) * rigidity_rank(g, result.deficient_set).rank +
                 static_cast<std::int64_t>(d.l) * graphic_rank(g, result.deficient_set).rank;
    report.note = "rank-deficient edge set: |S| exceeds k r_R(S) + l r_M(S)";
    return report;
}

bool confirms_deficiency(const Multigraph& g, const ConditionReport& report)
{
    const auto* s = std::get_if<EdgeSet>(&report.witness);
    const auto k = report.parameters.find("k");
    const auto l = report.parameters.find("l");
    if (report.holds || report.definitional || s == nullptr || k == report.parameters.end() ||
        l == report.parameters.end() || k->second < 0 || l->second < 0) {
        return false;
    }
    for (EdgeId e : *s) {
        if (e < 0 || e >= g.edge_count()) {
            return false;
        }
    }
    const std::int64_t lhs = s->size();
    const std::int64_t rhs = k->second * rigidity_rank(g, *s).rank + l->second * graphic_rank(g, *s).rank;
    return report.relation == Relation::AtMost && report.lhs == lhs && report.rhs == rhs && lhs > rhs;
}

namespace {

void require_connected(const Multigraph& g, const char* what)
{
    if (!is_connected(g)) {
        throw InputError(std::string(what) + " requires a connected graph");
    }
}

template <typename Scan>
DecomposeOutcome finish(const Multigraph& g, const UnionRank& result, const Limits& limits,
                        const std::string& condition, Scan&& scan)
{
    if (result.rank == g.edge_count()) {
        return result.decomposition;
    }
    if (g.vertex_count() <= limits.max_subset_vertices) {
        ConditionReport report = scan();
        if (!report.holds) {
            return report;
        }
    }
    return deficiency_report(g, result, condition);
}

} // namespace

DecomposeOutcome decompose_sparse(const Multigraph& g, int k, const Limits& limits)
{
    if (k < 1) {
        throw InputError("decomposition into sparse subgraphs needs k >= 1");
    }
    require_connected(g, "decomposition into k sparse subgraphs");
    const UnionRank result = union_rank(g, k, 0);
    return finish(g, result, limits, "cover", [&] { return check_cover_condition(g, k, limits); });
}

DecomposeOutcome decompose_forests(const Multigraph& g, int l, const Limits& limits)
{
    if (l < 1) {
        throw InputError("decomposition into forests needs l >= 1");
    }
    require_connected(g, "decomposition into l forests");
    const UnionRank result = union_rank(g, 0, l);
    return finish(g, result, limits, "forest-cover", [&] { return check_forest_condition(g, l, limits); });
}

DecomposeOutcome decompose_mixed(const Multigraph& g, int k, int l, const Limits& limits)
{
    const UnionRank result = union_rank(g, k, l);
    return finish(g, result, limits, "mixed-density",
                  [&] { return check_mixed_density_condition(g, k, l, limits); });
}

} // namespace sparsity

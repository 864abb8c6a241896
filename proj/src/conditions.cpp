#include "sparsity/conditions.hpp"

#include <bit>
#include <limits>
#include <numeric>

namespace sparsity {

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw InputError("fraction with zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Fraction Fraction::parse(const std::string& text)
{
    try {
        std::size_t used = 0;
        const auto slash = text.find('/');
        const std::int64_t a = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) {
            throw InputError("bad fraction: " + text);
        }
        if (slash == std::string::npos) {
            return Fraction(a);
        }
        const std::string tail = text.substr(slash + 1);
        const std::int64_t b = std::stoll(tail, &used);
        if (used != tail.size()) {
            throw InputError("bad fraction: " + text);
        }
        return Fraction(a, b);
    } catch (const std::logic_error&) {
        throw InputError("bad fraction: " + text);
    }
}

std::int64_t Fraction::floor() const
{
    return num_ >= 0 ? num_ / den_ : -((-num_ + den_ - 1) / den_);
}

std::int64_t Fraction::ceil() const
{
    return -Fraction(-num_, den_).floor();
}

std::string Fraction::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool relation_holds(Relation relation, std::int64_t lhs, std::int64_t rhs)
{
    return relation == Relation::AtMost ? lhs <= rhs : lhs >= rhs;
}

ConditionReport make_report(std::string condition, std::map<std::string, std::int64_t> parameters)
{
    ConditionReport report;
    report.condition = std::move(condition);
    report.parameters = std::move(parameters);
    return report;
}

namespace {

using Mask = std::uint32_t;

/// Endpoint masks of every edge; requires n <= 30 (guardrails enforce less).
std::vector<Mask> edge_masks(const Multigraph& g)
{
    std::vector<Mask> out;
    out.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        out.push_back((Mask{1} << e.u) | (Mask{1} << e.v));
    }
    return out;
}

int induced(const std::vector<Mask>& masks, Mask x)
{
    int count = 0;
    for (Mask m : masks) {
        count += (m & x) == m;
    }
    return count;
}

/// Scans subsets of size >= min_size; `bound(size)` gives the allowed
/// maximum of i(X). First violator in mask order wins.
template <typename Bound>
ConditionReport scan_density(const Multigraph& g, int min_size, const Limits& limits,
                             ConditionReport report, Bound&& bound)
{
    const auto masks = edge_masks(g);
    report.relation = Relation::AtMost;
    for_each_subset_mask(g.vertex_count(), min_size, limits, [&](Mask x) {
        const std::int64_t i = induced(masks, x);
        const std::int64_t allowed = bound(std::popcount(x));
        if (i > allowed) {
            report.holds = false;
            report.witness = VertexSet::from_mask(x);
            report.lhs = i;
            report.rhs = allowed;
            return false;
        }
        return true;
    });
    return report;
}

void require_non_negative(std::initializer_list<int> values)
{
    for (int v : values) {
        if (v < 0) {
            throw InputError("parameters must be non-negative");
        }
    }
}

/// State handed to partition-scan predicates.
struct PartitionView {
    Mask removed;
    std::span<const Vertex> ground;
    std::span<const int> labels;
    int blocks;
    int cross;
    int trivial;
    int adjacent;
};

/// Enumerates (Z, pi) with Z ranging over proper subsets (only Z = {} when
/// `with_removal` is false) and pi over partitions of V - Z. The predicate
/// returns the required lower bound for e_{G-Z}(pi).
template <typename LowerBound>
ConditionReport scan_partitions(const Multigraph& g, bool with_removal, const Limits& limits,
                                ConditionReport report, LowerBound&& lower_bound)
{
    const int n = g.vertex_count();
    require_partition_limit(n, limits);
    report.relation = Relation::AtLeast;
    const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
    const Mask z_end = with_removal ? full : 1;

    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> block_size;
    std::vector<Mask> z_sees(static_cast<std::size_t>(n), 0);
    bool stop = false;

    for (Mask z = 0; z < std::max<Mask>(z_end, 1) && !stop; ++z) {
        std::vector<Vertex> ground;
        for (Vertex v = 0; v < n; ++v) {
            if (!(z >> v & 1U)) {
                ground.push_back(v);
            }
        }
        std::vector<const Edge*> inner;
        std::vector<std::pair<Vertex, Vertex>> z_edges; // (z vertex, remainder vertex)
        for (const Edge& e : g.edges()) {
            const bool zu = z >> e.u & 1U;
            const bool zv = z >> e.v & 1U;
            if (!zu && !zv) {
                inner.push_back(&e);
            } else if (zu != zv) {
                z_edges.emplace_back(zu ? e.u : e.v, zu ? e.v : e.u);
            }
        }
        for_each_partition_labels(ground, limits, [&](std::span<const int> labels, int blocks) {
            for (std::size_t j = 0; j < ground.size(); ++j) {
                label[static_cast<std::size_t>(ground[j])] = labels[j];
            }
            int cross = 0;
            for (const Edge* e : inner) {
                cross += label[static_cast<std::size_t>(e->u)] != label[static_cast<std::size_t>(e->v)];
            }
            block_size.assign(static_cast<std::size_t>(blocks), 0);
            for (int b : labels) {
                ++block_size[static_cast<std::size_t>(b)];
            }
            const int trivial = static_cast<int>(std::count(block_size.begin(), block_size.end(), 1));
            int adjacent = 0;
            if (!z_edges.empty()) {
                for (auto [zv, w] : z_edges) {
                    z_sees[static_cast<std::size_t>(zv)] = 0;
                }
                for (auto [zv, w] : z_edges) {
                    z_sees[static_cast<std::size_t>(zv)] |= Mask{1} << label[static_cast<std::size_t>(w)];
                }
                for (Vertex v = 0; v < n; ++v) {
                    if (z >> v & 1U) {
                        adjacent += std::popcount(z_sees[static_cast<std::size_t>(v)]);
                        z_sees[static_cast<std::size_t>(v)] = 0;
                    }
                }
            }
            const PartitionView view{z, ground, labels, blocks, cross, trivial, adjacent};
            const std::int64_t needed = lower_bound(view);
            if (cross < needed) {
                report.holds = false;
                Partition pi = Partition::from_labels(ground, labels, blocks);
                if (with_removal) {
                    report.witness = RemovalWitness{VertexSet::from_mask(z), std::move(pi)};
                } else {
                    report.witness = std::move(pi);
                }
                report.lhs = cross;
                report.rhs = needed;
                stop = true;
                return false;
            }
            return true;
        });
    }
    return report;
}

ConditionReport size_clause_failure(ConditionReport report, int n, int p, int q)
{
    // |V| > p/q  <=>  n q >= p + 1
    report.holds = false;
    report.relation = Relation::AtLeast;
    report.lhs = static_cast<std::int64_t>(n) * q;
    report.rhs = static_cast<std::int64_t>(p) + 1;
    report.note = "size clause |V| > p/q fails";
    return report;
}

bool size_clause_holds(int n, int p, int q)
{
    return static_cast<std::int64_t>(n) * q > p;
}

} // namespace

ConditionReport check_cover_condition(const Multigraph& g, int k, const Limits& limits)
{
    require_non_negative({k});
    ConditionReport report = make_report("cover", {{"k", k}});
    return scan_density(g, 2, limits, std::move(report),
                        [k](int size) { return static_cast<std::int64_t>(k) * (2 * size - 3); });
}

ConditionReport check_forest_condition(const Multigraph& g, int l, const Limits& limits)
{
    require_non_negative({l});
    ConditionReport report = make_report("forest-cover", {{"l", l}});
    return scan_density(g, 1, limits, std::move(report),
                        [l](int size) { return static_cast<std::int64_t>(l) * (size - 1); });
}

ConditionReport check_mixed_density_condition(const Multigraph& g, int k, int l, const Limits& limits)
{
    require_non_negative({k, l});
    ConditionReport report = make_report("mixed-density", {{"k", k}, {"l", l}});
    return scan_density(g, 2, limits, std::move(report), [k, l](int size) {
        return static_cast<std::int64_t>(k) * (2 * size - 3) + static_cast<std::int64_t>(l) * (size - 1);
    });
}

ConditionReport check_tree_packing_condition(const Multigraph& g, int l, const Limits& limits)
{
    require_non_negative({l});
    ConditionReport report = make_report("tree-packing", {{"l", l}});
    return scan_partitions(g, false, limits, std::move(report), [l](const PartitionView& v) {
        return static_cast<std::int64_t>(l) * (v.blocks - 1);
    });
}

ConditionReport check_necessary_condition(const Multigraph& g, int k, int l, const Limits& limits)
{
    require_non_negative({k, l});
    ConditionReport report = make_report("necessary", {{"k", k}, {"l", l}});
    return scan_partitions(g, false, limits, std::move(report), [k, l](const PartitionView& v) {
        return static_cast<std::int64_t>(3 * k + l) * (v.blocks - 1) -
               static_cast<std::int64_t>(k) * v.trivial;
    });
}

ConditionReport check_parthm_condition(const Multigraph& g, int k, int l, const Limits& limits)
{
    require_non_negative({k, l});
    ConditionReport report = make_report("parthm", {{"k", k}, {"l", l}});
    return scan_partitions(g, true, limits, std::move(report), [k, l](const PartitionView& v) {
        return static_cast<std::int64_t>(3 * k + l) * (v.blocks - 1) -
               static_cast<std::int64_t>(k) * v.trivial - static_cast<std::int64_t>(k) * v.adjacent;
    });
}

ConditionReport check_bracket_partition_connected(const Multigraph& g, int p, int q,
                                                  const Limits& limits)
{
    if (p < 1 || q < 1) {
        throw InputError("p and q must be positive");
    }
    ConditionReport report = make_report("bracket-partition", {{"p", p}, {"q", q}});
    require_partition_limit(g.vertex_count(), limits);
    if (!size_clause_holds(g.vertex_count(), p, q)) {
        return size_clause_failure(std::move(report), g.vertex_count(), p, q);
    }
    return scan_partitions(g, true, limits, std::move(report), [p, q](const PartitionView& v) {
        return static_cast<std::int64_t>(p) * (v.blocks - 1) - static_cast<std::int64_t>(q) * v.adjacent;
    });
}

bool is_bracket_partition_connected(const Multigraph& g, int p, int q, const Limits& limits)
{
    return check_bracket_partition_connected(g, p, q, limits).holds;
}

ConditionReport check_pq_connected(const Multigraph& g, int p, int q, const Limits& limits)
{
    if (p < 1 || q < 1) {
        throw InputError("p and q must be positive");
    }
    const int n = g.vertex_count();
    ConditionReport report = make_report("pq-connected", {{"p", p}, {"q", q}});
    require_subset_limit(n, limits);
    if (!size_clause_holds(n, p, q)) {
        return size_clause_failure(std::move(report), n, p, q);
    }
    report.relation = Relation::AtLeast;
    const Mask full = (Mask{1} << n) - 1;
    for (Mask x = 0; x < full; ++x) {
        const std::int64_t needed = static_cast<std::int64_t>(p) - static_cast<std::int64_t>(q) * std::popcount(x);
        if (needed <= 0) {
            continue;
        }
        const VertexSet keep = VertexSet::from_mask(full & ~x);
        const auto cut = min_cut(g, keep);
        if (cut && cut->value < needed) {
            std::vector<int> other;
            for (Vertex v : keep) {
                if (!cut->side.contains(v)) {
                    other.push_back(v);
                }
            }
            report.holds = false;
            report.witness = RemovalWitness{VertexSet::from_mask(x),
                                            Partition(std::vector<VertexSet>{cut->side, VertexSet(other)})};
            report.lhs = cut->value;
            report.rhs = needed;
            return report;
        }
    }
    return report;
}

bool is_pq_connected(const Multigraph& g, int p, int q, const Limits& limits)
{
    return check_pq_connected(g, p, q, limits).holds;
}

ConditionReport check_kwz_condition(const Multigraph& g, int k, const Fraction& d, const Limits& limits)
{
    require_non_negative({k});
    if (d < Fraction(k + 1)) {
        throw InputError("kwz condition needs d >= k + 1 (got d = " + d.to_string() +
                         ", k = " + std::to_string(k) + ")");
    }
    ConditionReport report = make_report("kwz", {{"k", k}, {"d_num", d.numerator()}, {"d_den", d.denominator()}});
    report.relation = Relation::AtLeast;
    // multiply through by b where d = a/b
    const std::int64_t a = d.numerator();
    const std::int64_t b = d.denominator();
    const std::int64_t kk = k;
    const auto masks = edge_masks(g);
    for_each_subset_mask(g.vertex_count(), 1, limits, [&](Mask x) {
        const std::int64_t size = std::popcount(x);
        const std::int64_t i = induced(masks, x);
        const std::int64_t value = (kk + 1) * (kk * b + a) * size - (kk * b + a + b) * i - kk * kk * b;
        if (value < 0) {
            report.holds = false;
            report.witness = VertexSet::from_mask(x);
            report.lhs = value;
            report.rhs = 0;
            return false;
        }
        return true;
    });
    return report;
}

namespace {

std::int64_t param(const ConditionReport& r, const std::string& name)
{
    const auto it = r.parameters.find(name);
    if (it == r.parameters.end()) {
        throw InputError("report is missing parameter " + name);
    }
    return it->second;
}

} // namespace

bool confirms_violation(const Multigraph& g, const ConditionReport& r)
{
    if (r.holds || !r.definitional) {
        return false;
    }
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    Relation rel = Relation::AtMost;
    const std::string& c = r.condition;
    try {
        if (c == "cover" || c == "forest-cover" || c == "mixed-density" || c == "kwz") {
            const auto* x = std::get_if<VertexSet>(&r.witness);
            if (x == nullptr) {
                return false;
            }
            g.require_vertices(*x);
            const std::int64_t size = x->size();
            const std::int64_t i = induced_edge_count(g, *x);
            if (c == "cover") {
                if (size < 2) {
                    return false;
                }
                lhs = i;
                rhs = param(r, "k") * (2 * size - 3);
            } else if (c == "forest-cover") {
                if (size < 1) {
                    return false;
                }
                lhs = i;
                rhs = param(r, "l") * (size - 1);
            } else if (c == "mixed-density") {
                if (size < 2) {
                    return false;
                }
                lhs = i;
                rhs = param(r, "k") * (2 * size - 3) + param(r, "l") * (size - 1);
            } else {
                if (size < 1) {
                    return false;
                }
                const std::int64_t k = param(r, "k");
                const Fraction d(param(r, "d_num"), param(r, "d_den"));
                if (d < Fraction(k + 1)) {
                    return false;
                }
                const std::int64_t a = d.numerator();
                const std::int64_t b = d.denominator();
                rel = Relation::AtLeast;
                lhs = (k + 1) * (k * b + a) * size - (k * b + a + b) * i - k * k * b;
                rhs = 0;
            }
        } else if (c == "tree-packing" || c == "necessary") {
            const auto* pi = std::get_if<Partition>(&r.witness);
            if (pi == nullptr || pi->ground() != g.all_vertices()) {
                return false;
            }
            rel = Relation::AtLeast;
            lhs = cross_edge_count(g, *pi);
            if (c == "tree-packing") {
                rhs = param(r, "l") * (pi->size() - 1);
            } else {
                rhs = (3 * param(r, "k") + param(r, "l")) * (pi->size() - 1) - param(r, "k") * pi->trivial_count();
            }
        } else if (c == "parthm" || c == "bracket-partition" || c == "pq-connected") {
            const auto* w = std::get_if<RemovalWitness>(&r.witness);
            if (c != "parthm" && w == nullptr) {
                // size clause
                const std::int64_t p = param(r, "p");
                const std::int64_t q = param(r, "q");
                rel = Relation::AtLeast;
                lhs = g.vertex_count() * q;
                rhs = p + 1;
                return r.lhs == lhs && r.rhs == rhs && r.relation == rel && !relation_holds(rel, lhs, rhs);
            }
            if (w == nullptr) {
                return false;
            }
            g.require_vertices(w->removed);
            if (w->removed.size() >= g.vertex_count()) {
                return false;
            }
            std::vector<int> rest;
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (!w->removed.contains(v)) {
                    rest.push_back(v);
                }
            }
            if (w->partition.ground() != VertexSet(rest)) {
                return false;
            }
            rel = Relation::AtLeast;
            lhs = cross_edge_count(g, w->partition);
            const std::int64_t blocks = w->partition.size();
            if (c == "parthm") {
                const std::int64_t k = param(r, "k");
                rhs = (3 * k + param(r, "l")) * (blocks - 1) - k * w->partition.trivial_count() -
                      k * adjacent_number(g, w->removed, w->partition);
            } else if (c == "bracket-partition") {
                rhs = param(r, "p") * (blocks - 1) - param(r, "q") * adjacent_number(g, w->removed, w->partition);
            } else {
                if (blocks != 2) {
                    return false;
                }
                rhs = param(r, "p") - param(r, "q") * w->removed.size();
            }
        } else {
            return false;
        }
    } catch (const InputError&) {
        return false;
    }
    return r.relation == rel && r.lhs == lhs && r.rhs == rhs && !relation_holds(rel, lhs, rhs);
}

namespace {

template <typename Denominator>
DensityMax density_max(const Multigraph& g, const Limits& limits, Denominator&& denominator)
{
    if (g.vertex_count() < 2) {
        throw InputError("density needs a vertex subset of size >= 2");
    }
    const auto masks = edge_masks(g);
    std::optional<Fraction> best;
    Mask best_mask = 0;
    for_each_subset_mask(g.vertex_count(), 2, limits, [&](Mask x) {
        const Fraction value(induced(masks, x), denominator(std::popcount(x)));
        if (!best || value > *best || (value == *best && std::popcount(x) > std::popcount(best_mask))) {
            best = value;
            best_mask = x;
        }
        return true;
    });
    return {*best, VertexSet::from_mask(best_mask)};
}

} // namespace

DensityMax gamma(const Multigraph& g, const Limits& limits)
{
    return density_max(g, limits, [](int size) { return size - 1; });
}

DensityMax gamma2(const Multigraph& g, const Limits& limits)
{
    return density_max(g, limits, [](int size) { return 2 * size - 3; });
}

std::optional<Cut> min_cut(const Multigraph& g, const VertexSet& keep)
{
    g.require_vertices(keep);
    const int s = keep.size();
    if (s < 2) {
        return std::nullopt;
    }
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < s; ++i) {
        index[static_cast<std::size_t>(keep.ids()[static_cast<std::size_t>(i)])] = i;
    }
    std::vector<std::vector<int>> w(static_cast<std::size_t>(s), std::vector<int>(static_cast<std::size_t>(s), 0));
    for (const Edge& e : g.edges()) {
        const int a = index[static_cast<std::size_t>(e.u)];
        const int b = index[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) {
            ++w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            ++w[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        }
    }
    // Stoer-Wagner; groups[i] holds the original vertices merged into i
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
        groups[static_cast<std::size_t>(i)] = {keep.ids()[static_cast<std::size_t>(i)]};
    }
    std::vector<char> merged(static_cast<std::size_t>(s), 0);
    Cut best{std::numeric_limits<int>::max(), {}};
    for (int phase = 1; phase < s; ++phase) {
        std::vector<int> weight(static_cast<std::size_t>(s), 0);
        std::vector<char> added(static_cast<std::size_t>(s), 0);
        int prev = -1;
        int last = -1;
        for (int step = 0; step < s - phase + 1; ++step) {
            int pick = -1;
            for (int v = 0; v < s; ++v) {
                if (!merged[static_cast<std::size_t>(v)] && !added[static_cast<std::size_t>(v)] &&
                    (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)])) {
                    pick = v;
                }
            }
            added[static_cast<std::size_t>(pick)] = 1;
            prev = last;
            last = pick;
            for (int v = 0; v < s; ++v) {
                weight[static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(pick)][static_cast<std::size_t>(v)];
            }
        }
        const int cut_of_phase = weight[static_cast<std::size_t>(last)];
        if (cut_of_phase < best.value) {
            best.value = cut_of_phase;
            best.side = VertexSet(groups[static_cast<std::size_t>(last)]);
        }
        // merge last into prev
        auto& into = groups[static_cast<std::size_t>(prev)];
        const auto& from = groups[static_cast<std::size_t>(last)];
        into.insert(into.end(), from.begin(), from.end());
        merged[static_cast<std::size_t>(last)] = 1;
        for (int v = 0; v < s; ++v) {
            w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(last)][static_cast<std::size_t>(v)];
            w[static_cast<std::size_t>(v)][static_cast<std::size_t>(prev)] = w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)];
        }
        w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(prev)] = 0;
    }
    return best;
}

std::optional<int> essential_edge_connectivity(const Multigraph& g, const Limits& limits)
{
    const int n = g.vertex_count();
    require_subset_limit(n, limits);
    if (n <= 3) {
        return std::nullopt;
    }
    const auto masks = edge_masks(g);
    const Mask full = (Mask{1} << n) - 1;
    std::optional<int> best;
    // fix vertex n-1 outside the side to visit each bipartition once
    for_each_subset_mask(n - 1, 2, limits, [&](Mask side) {
        if (std::popcount(full & ~side) < 2) {
            return true;
        }
        int crossing = 0;
        for (Mask m : masks) {
            crossing += std::popcount(m & side) == 1;
        }
        if (!best || crossing < *best) {
            best = crossing;
        }
        return true;
    });
    return best;
}

} // namespace sparsity

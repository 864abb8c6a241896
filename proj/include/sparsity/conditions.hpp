#pragma once

#include "sparsity/graph.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

namespace sparsity {

/// Exact rational, always reduced with a positive denominator.
class Fraction {
public:
    Fraction() = default;
    Fraction(std::int64_t numerator, std::int64_t denominator = 1);

    /// Accepts "a/b" or "a".
    static Fraction parse(const std::string& text);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    std::int64_t floor() const;
    std::int64_t ceil() const;
    std::string to_string() const; // always "a/b"

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b)
    {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Removed vertex set Z together with a partition of V - Z.
struct RemovalWitness {
    VertexSet removed;
    Partition partition;
    friend bool operator==(const RemovalWitness&, const RemovalWitness&) = default;
};

using Witness = std::variant<std::monostate, VertexSet, Partition, RemovalWitness, EdgeSet>;

/// Which way the checked inequality points: lhs <= rhs or lhs >= rhs.
enum class Relation { AtMost, AtLeast };

struct ConditionReport {
    std::string condition;
    std::map<std::string, std::int64_t> parameters;
    bool holds = true;
    Witness witness;
    Relation relation = Relation::AtMost;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    /// false when the witness is not a violator of the named inequality but a
    /// weaker certificate (e.g. a rank-deficient edge set).
    bool definitional = true;
    std::string note;

    friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

bool relation_holds(Relation relation, std::int64_t lhs, std::int64_t rhs);

ConditionReport make_report(std::string condition, std::map<std::string, std::int64_t> parameters);

/// i_G(X) <= k(2|X| - 3) for every X with |X| >= 2 (decomposition into k sparse sets).
ConditionReport check_cover_condition(const Multigraph& g, int k, const Limits& limits = {});
/// i_G(X) <= l(|X| - 1) for every nonempty X (decomposition into l forests).
ConditionReport check_forest_condition(const Multigraph& g, int l, const Limits& limits = {});
/// i_G(X) <= k(2|X| - 3) + l(|X| - 1) for every X with |X| >= 2. Necessary for
/// a decomposition into k sparse sets and l forests; not known to be sufficient.
ConditionReport check_mixed_density_condition(const Multigraph& g, int k, int l,
                                              const Limits& limits = {});

/// e_G(pi) >= l(|pi| - 1) for every partition of V (l edge-disjoint spanning trees).
ConditionReport check_tree_packing_condition(const Multigraph& g, int l, const Limits& limits = {});
/// e_G(pi) >= (3k + l)(|pi| - 1) - k n0 for every partition of V.
ConditionReport check_necessary_condition(const Multigraph& g, int k, int l, const Limits& limits = {});
/// For every proper Z and every partition pi of V - Z:
/// e_{G-Z}(pi) >= (3k + l)(|pi| - 1) - k n0 - k n_Z(pi). Z = {} included.
ConditionReport check_parthm_condition(const Multigraph& g, int k, int l, const Limits& limits = {});

/// |V| > p/q and e_{G-Z}(pi) >= p(|pi| - 1) - q n_Z(pi) for all proper Z, pi.
ConditionReport check_bracket_partition_connected(const Multigraph& g, int p, int q,
                                                  const Limits& limits = {});
bool is_bracket_partition_connected(const Multigraph& g, int p, int q, const Limits& limits = {});

/// |V| > p/q and G - X is (p - q|X|)-edge-connected for every proper X.
ConditionReport check_pq_connected(const Multigraph& g, int p, int q, const Limits& limits = {});
bool is_pq_connected(const Multigraph& g, int p, int q, const Limits& limits = {});

/// (k+1)(k+d)|X| - (k+d+1) i_G(X) - k^2 >= 0 for every nonempty X; needs d >= k+1.
/// lhs/rhs are scaled by the denominator of d.
ConditionReport check_kwz_condition(const Multigraph& g, int k, const Fraction& d,
                                    const Limits& limits = {});

/// Re-evaluates a failed report's witness from the definitions: true iff the
/// recorded lhs/rhs are reproduced and violate the relation.
bool confirms_violation(const Multigraph& g, const ConditionReport& report);

struct DensityMax {
    Fraction value;
    VertexSet argmax;
};

/// max i(X)/(|X|-1) over |X| >= 2. Ties go to the larger X, then mask order.
DensityMax gamma(const Multigraph& g, const Limits& limits = {});
/// max i(X)/(2|X|-3) over |X| >= 2. Same tie rule.
DensityMax gamma2(const Multigraph& g, const Limits& limits = {});

struct Cut {
    int value = 0;
    VertexSet side;
};

/// Global minimum edge cut of G[keep] (Stoer-Wagner). nullopt when keep has
/// fewer than two vertices.
std::optional<Cut> min_cut(const Multigraph& g, const VertexSet& keep);

/// min e_G(pi) over bipartitions with both sides of size >= 2; nullopt when
/// no such bipartition exists (n <= 3).
std::optional<int> essential_edge_connectivity(const Multigraph& g, const Limits& limits = {});

} // namespace sparsity

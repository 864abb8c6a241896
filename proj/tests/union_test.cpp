#include "sparsity/matroids.hpp"
#include "sparsity/union.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace sparsity;
using testing::random_corpus;

namespace {

Multigraph doubled_triangle()
{
    return testing::doubled(graphs::complete(3));
}

template <typename T>
const T* as(const DecomposeOutcome& o)
{
    return std::get_if<T>(&o);
}

template <typename T>
const T* as(DecomposeOutcome&&) = delete;

} // namespace

TEST_CASE("union rank examples")
{
    const UnionRank tri = union_rank(graphs::complete(3), 1, 0);
    CHECK(tri.rank == 3);
    CHECK(tri.decomposition.assignment == std::vector<int>{1, 1, 1});
    CHECK(tri.deficient_set.empty());

    const Multigraph k4 = graphs::complete(4);
    const UnionRank mixed = union_rank(k4, 1, 1);
    CHECK(mixed.rank == 6);
    CHECK(verify_decomposition(k4, mixed.decomposition));
    CHECK(union_rank_bruteforce(k4, 1, 1) == 6);

    const UnionRank dt = union_rank(doubled_triangle(), 2, 0);
    CHECK(dt.rank == 6);
    CHECK(verify_decomposition(doubled_triangle(), dt.decomposition));
    CHECK(dt.decomposition.color_class(1).size() == 3);
    CHECK(dt.decomposition.color_class(2).size() == 3);

    CHECK(union_rank_bruteforce(graphs::complete(3), 1, 0) == 3);
    CHECK(union_rank_bruteforce(k4, 1, 0) == 5);
    CHECK(union_rank_bruteforce(Multigraph(2, {{0, 1}}), 0, 2) == 1);
    CHECK(union_rank(Multigraph(2, {{0, 1}}), 0, 2).rank == 1);

    CHECK_THROWS_AS(union_rank(k4, 0, 0), InputError);
    CHECK_THROWS_AS(union_rank(k4, -1, 2), InputError);
    Limits tight;
    tight.max_bruteforce_edges = 5;
    CHECK_THROWS_AS(union_rank_bruteforce(k4, 1, 0, tight), LimitExceeded);
}

TEST_CASE("union rank equals the Edmonds minimum")
{
    for (const Multigraph& g : random_corpus(120, {.min_n = 2, .max_n = 6, .max_m = 11, .max_multiplicity = 3}, 101)) {
        for (int k = 0; k <= 2; ++k) {
            for (int l = 0; l <= 2; ++l) {
                if (k + l == 0) {
                    continue;
                }
                const UnionRank r = union_rank(g, k, l);
                REQUIRE(r.rank == union_rank_bruteforce(g, k, l));
                CHECK(r.independent_set.size() == r.rank);
                CHECK(r.decomposition.covered() == r.independent_set);
                CHECK(verify_decomposition(g, r.decomposition));
                const int n = g.vertex_count();
                CHECK(r.rank <= k * (2 * n - 3) + l * (n - 1));
                if (r.rank < g.edge_count()) {
                    const EdgeSet& s = r.deficient_set;
                    CHECK(s.size() > k * rigidity_rank(g, s).rank + l * graphic_rank(g, s).rank);
                } else {
                    CHECK(r.deficient_set.empty());
                }
            }
        }
    }
}

TEST_CASE("union rank is monotone")
{
    for (const Multigraph& g : random_corpus(60, {.min_n = 2, .max_n = 7, .max_m = 16, .max_multiplicity = 3}, 103)) {
        for (int k = 0; k <= 2; ++k) {
            for (int l = 0; l <= 2; ++l) {
                if (k + l == 0) {
                    continue;
                }
                const int r = union_rank(g, k, l).rank;
                CHECK(union_rank(g, k + 1, l).rank >= r);
                CHECK(union_rank(g, k, l + 1).rank >= r);
                if (g.edge_count() > 0) {
                    CHECK(union_rank(testing::without_edge(g, g.edge_count() - 1), k, l).rank <= r);
                }
            }
        }
    }
}

TEST_CASE("union rank is deterministic")
{
    for (const Multigraph& g : random_corpus(20, {.min_n = 3, .max_n = 7, .max_m = 16, .max_multiplicity = 2}, 107)) {
        const UnionRank a = union_rank(g, 1, 1);
        const UnionRank b = union_rank(g, 1, 1);
        CHECK(a.decomposition == b.decomposition);
        CHECK(a.deficient_set == b.deficient_set);
    }
}

TEST_CASE("decompose into sparse sets")
{
    const Multigraph k4 = graphs::complete(4);
    const DecomposeOutcome one = decompose_sparse(k4, 1);
    const auto* r = as<ConditionReport>(one);
    REQUIRE(r);
    CHECK_FALSE(r->holds);
    CHECK(std::get<VertexSet>(r->witness) == k4.all_vertices());
    CHECK(r->lhs == 6);
    CHECK(r->rhs == 5);
    CHECK(confirms_violation(k4, *r));

    const DecomposeOutcome two_outcome = decompose_sparse(k4, 2);
    const auto* two = as<Decomposition>(two_outcome);
    REQUIRE(two);
    CHECK(two->is_complete());
    CHECK(verify_decomposition(k4, *two));

    const Multigraph de(2, {{0, 1}, {0, 1}});
    const DecomposeOutcome split_outcome = decompose_sparse(de, 2);
    const auto* split = as<Decomposition>(split_outcome);
    REQUIRE(split);
    CHECK(split->assignment[0] != split->assignment[1]);

    CHECK_THROWS_AS(decompose_sparse(Multigraph(3, {{0, 1}}), 1), InputError);
    CHECK_THROWS_AS(decompose_sparse(k4, 0), InputError);
}

TEST_CASE("decompose into forests")
{
    const Multigraph tri = graphs::complete(3);
    const DecomposeOutcome r_outcome = decompose_forests(tri, 1);
    const auto* r = as<ConditionReport>(r_outcome);
    REQUIRE(r);
    CHECK(std::get<VertexSet>(r->witness) == tri.all_vertices());
    CHECK(r->lhs == 3);
    CHECK(r->rhs == 2);

    const DecomposeOutcome k4_outcome = decompose_forests(graphs::complete(4), 2);
    const auto* k4 = as<Decomposition>(k4_outcome);
    REQUIRE(k4);
    CHECK(verify_decomposition(graphs::complete(4), *k4));

    const Multigraph tree = graphs::path(5);
    const DecomposeOutcome t_outcome = decompose_forests(tree, 1);
    const auto* t = as<Decomposition>(t_outcome);
    REQUIRE(t);
    CHECK(t->assignment == std::vector<int>(4, 1));
    CHECK_THROWS_AS(decompose_forests(Multigraph(3, {{0, 1}}), 1), InputError);
}

TEST_CASE("decompose beyond the subset guardrail reports a deficient set")
{
    Limits tight;
    tight.max_subset_vertices = 3;
    const Multigraph k4 = graphs::complete(4);
    const DecomposeOutcome r_outcome = decompose_sparse(k4, 1, tight);
    const auto* r = as<ConditionReport>(r_outcome);
    REQUIRE(r);
    CHECK_FALSE(r->definitional);
    CHECK(std::holds_alternative<EdgeSet>(r->witness));
    CHECK(r->lhs > r->rhs);
    CHECK(confirms_deficiency(k4, *r));
    CHECK_FALSE(confirms_violation(k4, *r));
}

TEST_CASE("mixed decomposition")
{
    const Multigraph k4 = graphs::complete(4);
    const DecomposeOutcome d_outcome = decompose_mixed(k4, 1, 1);
    const auto* d = as<Decomposition>(d_outcome);
    REQUIRE(d);
    CHECK(verify_decomposition(k4, *d));
    const Multigraph k5 = graphs::complete(5);
    const DecomposeOutcome r_outcome = decompose_mixed(k5, 1, 0);
    const auto* r = as<ConditionReport>(r_outcome);
    REQUIRE(r);
    CHECK(confirms_violation(k5, *r));
    // disconnected input is fine here
    CHECK(std::holds_alternative<Decomposition>(decompose_mixed(Multigraph(4, {{0, 1}, {2, 3}}), 1, 0)));
}

TEST_CASE("decomposition verification catches tampering")
{
    const Multigraph k4 = graphs::complete(4);
    Decomposition d = std::get<Decomposition>(decompose_sparse(k4, 2));
    CHECK(verify_decomposition(k4, d));
    Decomposition all_one = d;
    std::fill(all_one.assignment.begin(), all_one.assignment.end(), 1);
    CHECK_FALSE(verify_decomposition(k4, all_one));
    Decomposition bad_color = d;
    bad_color.assignment[0] = 3;
    CHECK_FALSE(verify_decomposition(k4, bad_color));
    Decomposition short_list = d;
    short_list.assignment.pop_back();
    CHECK_FALSE(verify_decomposition(k4, short_list));
    Decomposition forests{0, 1, std::vector<int>(6, 1)};
    CHECK_FALSE(verify_decomposition(k4, forests));
}

#include "sparsity/matroids.hpp"
#include "sparsity/packing.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

using namespace sparsity;
using testing::random_corpus;

TEST_CASE("spanning tree packing examples")
{
    const Multigraph tree = graphs::path(5);
    const PackOutcome one = pack_spanning_trees(tree, 1);
    const auto* p = std::get_if<Packing>(&one);
    REQUIRE(p);
    CHECK(p->tree_parts.size() == 1);
    CHECK(p->tree_parts[0] == tree.all_edges());

    const Multigraph k4 = graphs::complete(4);
    const PackOutcome two = pack_spanning_trees(k4, 2);
    const auto* q = std::get_if<Packing>(&two);
    REQUIRE(q);
    CHECK(q->tree_parts.size() == 2);
    CHECK(verify_packing(k4, *q).ok());

    const PackOutcome c4 = pack_spanning_trees(graphs::cycle(4), 2);
    const auto* f = std::get_if<PackingFailure>(&c4);
    REQUIRE(f);
    CHECK(f->target == 6);
    CHECK(f->partial.rank == 4);
    REQUIRE(f->witness);
    CHECK(confirms_violation(graphs::cycle(4), *f->witness));

    CHECK(std::holds_alternative<Packing>(pack_spanning_trees(Multigraph(1), 3)));
    CHECK_THROWS_AS(pack_spanning_trees(k4, 0), InputError);
    CHECK_THROWS_AS(pack_spanning_trees(Multigraph(0), 1), InputError);
}

TEST_CASE("rigid packing examples")
{
    const Multigraph tri = graphs::complete(3);
    const PackOutcome one = pack_rigid_and_trees(tri, 1, 0);
    const auto* p = std::get_if<Packing>(&one);
    REQUIRE(p);
    CHECK(p->rigid_parts[0] == tri.all_edges());

    const Multigraph k5 = graphs::complete(5);
    const PackOutcome k5p = pack_rigid_and_trees(k5, 1, 0);
    const auto* q = std::get_if<Packing>(&k5p);
    REQUIRE(q);
    CHECK(q->rigid_parts[0].size() == 7);
    CHECK(verify_packing(k5, *q).ok());

    const PackOutcome bow = pack_rigid_and_trees(graphs::bowtie(), 1, 0);
    const auto* f = std::get_if<PackingFailure>(&bow);
    REQUIRE(f);
    CHECK(f->partial.rank == 6);
    CHECK(f->target == 7);

    CHECK_THROWS_AS(pack_rigid_and_trees(Multigraph(1), 1, 0), InputError);
    CHECK_THROWS_AS(pack_rigid_and_trees(k5, 0, 1), InputError);
}

TEST_CASE("packing verification reports the defect")
{
    const Multigraph k4 = graphs::complete(4);
    // edges: 0:01 1:02 2:03 3:12 4:13 5:23
    CHECK(verify_packing(k4, Packing{{}, {EdgeSet{0, 3, 5}, EdgeSet{1, 2, 4}}}).ok());
    CHECK(verify_packing(k4, Packing{{}, {EdgeSet{0, 3, 5}, EdgeSet{1, 3, 4}}}).defect == PackingDefect::Overlap);
    CHECK(verify_packing(k4, Packing{{}, {EdgeSet{0, 1, 3}}}).defect == PackingDefect::TreeCyclic);
    CHECK(verify_packing(k4, Packing{{}, {EdgeSet{0, 1}}}).defect == PackingDefect::TreeWrongSize);
    CHECK(verify_packing(k4, Packing{{}, {EdgeSet{0, 9, 1}}}).defect == PackingDefect::BadEdgeId);
    CHECK(verify_packing(k4, Packing{{EdgeSet{0, 1, 2, 3, 4}}, {}}).ok());
    CHECK(verify_packing(k4, Packing{{EdgeSet{0, 1, 2, 3}}, {}}).defect == PackingDefect::RigidWrongSize);

    // five edges with a parallel pair: right size, not sparse
    const Multigraph g(4, {{0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(verify_packing(g, Packing{{g.all_edges()}, {}}).defect == PackingDefect::RigidNotSparse);
}

TEST_CASE("tree packing succeeds iff the partition condition holds")
{
    int yes = 0;
    int no = 0;
    for (const Multigraph& g : random_corpus(250, {.min_n = 1, .max_n = 6, .max_m = 16, .max_multiplicity = 4}, 201)) {
        for (int l = 1; l <= 3; ++l) {
            const PackOutcome o = pack_spanning_trees(g, l);
            const bool packed = std::holds_alternative<Packing>(o);
            CHECK(packed == check_tree_packing_condition(g, l).holds);
            if (packed) {
                ++yes;
                CHECK(verify_packing(g, std::get<Packing>(o)).ok());
            } else {
                ++no;
                const auto& f = std::get<PackingFailure>(o);
                REQUIRE(f.witness);
                CHECK(confirms_violation(g, *f.witness));
            }
        }
    }
    CHECK(yes > 50);
    CHECK(no > 50);
}

TEST_CASE("rigid packing succeeds only at the exact rank target")
{
    for (const Multigraph& g : random_corpus(150, {.min_n = 2, .max_n = 6, .max_m = 18, .max_multiplicity = 3}, 211)) {
        for (auto [k, l] : {std::pair{1, 0}, {1, 1}, {2, 0}}) {
            const PackOutcome o = pack_rigid_and_trees(g, k, l);
            const int n = g.vertex_count();
            const int target = k * (2 * n - 3) + l * (n - 1);
            if (const auto* p = std::get_if<Packing>(&o)) {
                CHECK(verify_packing(g, *p).ok());
                CHECK(static_cast<int>(p->rigid_parts.size()) == k);
                CHECK(static_cast<int>(p->tree_parts.size()) == l);
                for (const EdgeSet& part : p->rigid_parts) {
                    CHECK(rigidity_rank(g, part).rank == 2 * n - 3);
                }
            } else {
                const auto& f = std::get<PackingFailure>(o);
                CHECK(f.partial.rank < target);
                CHECK(f.target == target);
            }
        }
    }
}

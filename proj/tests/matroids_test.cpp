#include "sparsity/matroids.hpp"
#include "sparsity/pebble_game.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <random>

using namespace sparsity;
using testing::random_corpus;

namespace {

Multigraph double_edge()
{
    return Multigraph(2, {{0, 1}, {0, 1}});
}

EdgeSet all_of(const Multigraph& g)
{
    return g.all_edges();
}

} // namespace

TEST_CASE("graphic matroid")
{
    const Multigraph tri = graphs::complete(3);
    CHECK(graphic_independent(tri, EdgeSet{0, 1}));
    CHECK_FALSE(graphic_independent(tri, all_of(tri)));
    CHECK_FALSE(graphic_independent(double_edge(), EdgeSet{0, 1}));
    CHECK(graphic_rank(tri, all_of(tri)).rank == 2);
    CHECK(graphic_rank(Multigraph(5), EdgeSet{}).rank == 0);
    const RankResult k4 = graphic_rank(graphs::complete(4), all_of(graphs::complete(4)));
    CHECK(k4.rank == 3);
    CHECK(k4.basis.size() == 3);
    CHECK(graphic_independent(graphs::complete(4), k4.basis));
    CHECK_THROWS_AS(graphic_independent(tri, EdgeSet{3}), InputError);
}

TEST_CASE("sparse independence examples")
{
    const Multigraph tri = graphs::complete(3);
    CHECK(sparse_independent(tri, all_of(tri)).sparse);

    const Multigraph k4 = graphs::complete(4);
    const SparsityCheck c = sparse_independent(k4, all_of(k4));
    CHECK_FALSE(c.sparse);
    REQUIRE(c.violator);
    CHECK(*c.violator == k4.all_vertices());

    const Multigraph k33 = graphs::complete_bipartite(3, 3);
    CHECK(sparse_independent(k33, all_of(k33)).sparse);
    CHECK(sparse_independent_bruteforce(k33, all_of(k33)));

    CHECK(sparse_independent_bruteforce(graphs::cycle(4), all_of(graphs::cycle(4))));
    CHECK_FALSE(sparse_independent_bruteforce(double_edge(), EdgeSet{0, 1}));
    const SparsityCheck d = sparse_independent(double_edge(), EdgeSet{0, 1});
    CHECK_FALSE(d.sparse);
    CHECK(*d.violator == VertexSet{0, 1});
}

TEST_CASE("every single edge is sparse")
{
    for (const Multigraph& g : random_corpus(20, {.min_n = 2, .max_n = 6, .max_m = 10, .max_multiplicity = 3}, 3)) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(sparse_independent_bruteforce(g, EdgeSet{e}));
            CHECK(sparse_independent(g, EdgeSet{e}).sparse);
        }
    }
}

TEST_CASE("rigidity rank examples")
{
    const Multigraph tri = graphs::complete(3);
    CHECK(rigidity_rank(tri, all_of(tri)).rank == 3);
    CHECK(rigidity_rank(graphs::complete(4), all_of(graphs::complete(4))).rank == 5);
    CHECK(rigidity_rank(graphs::bowtie(), all_of(graphs::bowtie())).rank == 6);
    CHECK(rigidity_rank(graphs::cycle(4), all_of(graphs::cycle(4))).rank == 4);
    CHECK(rigidity_rank(graphs::complete(5), all_of(graphs::complete(5))).rank == 7);
}

TEST_CASE("rigidity predicates")
{
    CHECK(is_rigid(graphs::complete(3)));
    CHECK(is_minimally_rigid(graphs::complete(3)));
    CHECK(is_minimally_rigid(graphs::complete_bipartite(3, 3)));
    CHECK_FALSE(is_rigid(graphs::cycle(4)));
    CHECK_FALSE(is_rigid(graphs::bowtie()));
    CHECK(is_rigid(graphs::complete(4)));
    CHECK_FALSE(is_minimally_rigid(graphs::complete(4)));
    CHECK(is_minimally_rigid(Multigraph(2, {{0, 1}})));
    CHECK(is_rigid(double_edge()));
    CHECK_THROWS_AS(is_rigid(Multigraph(1)), InputError);
}

TEST_CASE("pebble game agrees with the definitional check")
{
    for (int n = 2; n <= 5; ++n) {
        const Multigraph kn = graphs::complete(n);
        const std::uint32_t end = std::uint32_t{1} << kn.edge_count();
        for (std::uint32_t f = 0; f < end; ++f) {
            const EdgeSet fs = EdgeSet::from_mask(f);
            const SparsityCheck c = sparse_independent(kn, fs);
            REQUIRE(c.sparse == sparse_independent_bruteforce(kn, fs));
            if (!c.sparse) {
                REQUIRE(c.violator);
                CHECK(c.violator->size() >= 2);
                CHECK(induced_edge_count(kn, fs, *c.violator) > 2 * c.violator->size() - 3);
            }
        }
    }
    for (const Multigraph& g : random_corpus(150, {.min_n = 2, .max_n = 6, .max_m = 10, .max_multiplicity = 3}, 17)) {
        const std::uint32_t end = std::uint32_t{1} << g.edge_count();
        for (std::uint32_t f = 0; f < end; ++f) {
            const EdgeSet fs = EdgeSet::from_mask(f);
            const SparsityCheck c = sparse_independent(g, fs);
            REQUIRE(c.sparse == sparse_independent_bruteforce(g, fs));
            if (!c.sparse) {
                CHECK(induced_edge_count(g, fs, *c.violator) > 2 * c.violator->size() - 3);
            }
        }
    }
}

TEST_CASE("pebble game bookkeeping")
{
    PebbleGame game(4);
    const Multigraph k4 = graphs::complete(4);
    int accepted = 0;
    for (const Edge& e : k4.edges()) {
        accepted += game.try_insert(e.u, e.v) ? 1 : 0;
    }
    CHECK(accepted == 5);
    CHECK(game.accepted_count() == 5);
    int free = 0;
    for (Vertex v = 0; v < 4; ++v) {
        free += game.free_pebbles(v);
    }
    CHECK(free == 3);
    CHECK(game.blocker() == k4.all_vertices());
}

TEST_CASE("rigidity rank matches the collection formula")
{
    for (const Multigraph& g : random_corpus(80, {.min_n = 2, .max_n = 6, .max_m = 10, .max_multiplicity = 3}, 23)) {
        const std::uint32_t end = std::uint32_t{1} << g.edge_count();
        for (std::uint32_t f = 0; f < end; f += 7) {
            const EdgeSet fs = EdgeSet::from_mask(f);
            CHECK(rigidity_rank(g, fs).rank == testing::rigidity_rank_by_collections(g, fs));
        }
        CHECK(rigidity_rank(g, g.all_edges()).rank == testing::rigidity_rank_by_collections(g, g.all_edges()));
    }
    // frozen values
    CHECK(testing::rigidity_rank_by_collections(graphs::complete(4), graphs::complete(4).all_edges()) == 5);
    CHECK(testing::rigidity_rank_by_collections(graphs::bowtie(), graphs::bowtie().all_edges()) == 6);
}

TEST_CASE("rank axioms and bounds")
{
    std::mt19937_64 rng(99);
    for (const Multigraph& g : random_corpus(60, {.min_n = 2, .max_n = 6, .max_m = 12, .max_multiplicity = 3}, 29)) {
        const int n = g.vertex_count();
        const int m = g.edge_count();
        CHECK(rigidity_rank(g, EdgeSet{}).rank == 0);
        CHECK(graphic_rank(g, EdgeSet{}).rank == 0);
        std::uniform_int_distribution<std::uint32_t> pick(0, (std::uint32_t{1} << m) - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint32_t a = pick(rng);
            const std::uint32_t b = pick(rng);
            const EdgeSet fa = EdgeSet::from_mask(a);
            const int ra = rigidity_rank(g, fa).rank;
            const int ma = graphic_rank(g, fa).rank;
            CHECK(ra <= std::min(fa.size(), 2 * n - 3));
            CHECK(ma <= std::min(fa.size(), n - 1));
            CHECK(rigidity_rank(g, fa).basis.size() == ra);
            CHECK(sparse_independent(g, rigidity_rank(g, fa).basis).sparse);
            for (EdgeId e = 0; e < m; ++e) {
                const EdgeSet plus = EdgeSet::from_mask(a | (std::uint32_t{1} << e));
                const int dr = rigidity_rank(g, plus).rank - ra;
                const int dm = graphic_rank(g, plus).rank - ma;
                CHECK((dr == 0 || dr == 1));
                CHECK((dm == 0 || dm == 1));
            }
            // submodularity
            const auto r = [&](std::uint32_t mask) { return rigidity_rank(g, EdgeSet::from_mask(mask)).rank; };
            const auto gr = [&](std::uint32_t mask) { return graphic_rank(g, EdgeSet::from_mask(mask)).rank; };
            CHECK(r(a) + r(b) >= r(a | b) + r(a & b));
            CHECK(gr(a) + gr(b) >= gr(a | b) + gr(a & b));
        }
    }
}

TEST_CASE("rigidity rank does not depend on insertion order")
{
    std::mt19937_64 rng(5);
    for (const Multigraph& g : random_corpus(60, {.min_n = 2, .max_n = 7, .max_m = 16, .max_multiplicity = 3}, 31)) {
        std::vector<EdgeId> order(g.all_edges().ids());
        const int base = rigidity_rank(g, g.all_edges()).rank;
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(order.begin(), order.end(), rng);
            const RankResult r = rigidity_rank(g, std::span<const EdgeId>(order));
            CHECK(r.rank == base);
            CHECK(sparse_independent(g, r.basis).sparse);
        }
    }
}

TEST_CASE("rigid graphs on three or more vertices are 2-connected")
{
    int rigid = 0;
    for (int n = 3; n <= 6; ++n) {
        for (const Multigraph& g : testing::all_simple_graphs(n)) {
            if (is_rigid(g)) {
                ++rigid;
                CHECK(testing::is_biconnected(g));
            }
        }
    }
    for (const Multigraph& g : random_corpus(300, {.min_n = 3, .max_n = 7, .max_m = 18, .max_multiplicity = 3}, 37)) {
        if (is_rigid(g)) {
            ++rigid;
            CHECK(testing::is_biconnected(g));
        }
    }
    CHECK(rigid > 100);
}

TEST_CASE("matroid oracles report fundamental circuits")
{
    const Multigraph k4 = graphs::complete(4);
    const RigidityMatroid rig(k4);
    const GraphicMatroid gra(k4);
    const std::vector<EdgeId> five{0, 1, 2, 3, 4};
    CHECK(rig.independent(five));
    const auto c = rig.circuit(five, 5);
    REQUIRE(c);
    CHECK(c->size() == 5);
    const std::vector<EdgeId> tree{0, 1, 2}; // star at 0
    const auto t = gra.circuit(tree, 3);       // edge 1-2
    REQUIRE(t);
    CHECK(t->size() == 2);
    CHECK_FALSE(gra.circuit(std::vector<EdgeId>{0}, 5));
    for (const Multigraph& g : random_corpus(40, {.min_n = 2, .max_n = 6, .max_m = 12, .max_multiplicity = 2}, 41)) {
        const RigidityMatroid rm(g);
        const RankResult basis = rigidity_rank(g, g.all_edges());
        const std::vector<EdgeId> ids = basis.basis.ids();
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (basis.basis.contains(e)) {
                continue;
            }
            const auto circuit = rm.circuit(ids, e);
            REQUIRE(circuit);
            // exactly the members whose removal makes room for e
            for (EdgeId y : ids) {
                std::vector<EdgeId> swapped;
                for (EdgeId x : ids) {
                    if (x != y) {
                        swapped.push_back(x);
                    }
                }
                swapped.push_back(e);
                const bool listed = std::find(circuit->begin(), circuit->end(), y) != circuit->end();
                CHECK(rm.independent(swapped) == listed);
            }
        }
    }
}

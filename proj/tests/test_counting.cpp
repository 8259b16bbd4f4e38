#include "gcl/counting.hpp"
#include "gcl/generators.hpp"
#include "test_helpers.hpp"

#include <catch2/catch.hpp>

using namespace gcl;
using namespace testutil;

TEST_CASE("count_sparse_exact formula cases") {
    CHECK(count_sparse_exact(kdd_union(1, 2), SparsityPredicate::edge_budget(Int(0))) == 7);
    CHECK(count_sparse_exact(Graph(10), SparsityPredicate::density_at_most(rat(1, 2))) == 1024);
    CHECK(count_sparse_exact(kdd_union(2, 2), SparsityPredicate::edge_budget(Int(0))) == 49);
}

TEST_CASE("count_sparse_exact is monotone in the threshold") {
    SplitMix64 rng(91);
    for (int t = 0; t < 10; ++t) {
        Graph g = gnp(10, rat(1, 2), rng.next());
        Int prev = -1;
        for (long budget : {0L, 1L, 3L, 10L, 45L}) {
            Int c = count_sparse_exact(g, SparsityPredicate::edge_budget(Int(budget)));
            CHECK(c >= prev);
            prev = c;
        }
        Rat prev_d(-1);
        Int prev_c(-1);
        for (int num = 0; num <= 4; ++num) {
            Int c = count_sparse_exact(g, SparsityPredicate::density_at_most(Rat(num, 4)));
            CHECK(c >= prev_c);
            prev_c = c;
        }
    }
}

TEST_CASE("pruned enumeration equals naive full enumeration") {
    SplitMix64 rng(101);
    for (int t = 0; t < 8; ++t) {
        int n = 8 + (int)rng.below(4);
        Graph g = graph_from_mask(n, rng.next() & ((1ull << pair_count(n)) - 1));
        Rat tau(1 + (long)rng.below(3), 4);
        Int naive = 0;
        for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
            VertexSet s = set_from_mask(n, mask);
            if (edge_density(g, s) <= tau) ++naive;
        }
        CHECK(count_sparse_exact(g, SparsityPredicate::density_at_most(tau)) == naive);
    }
}

TEST_CASE("count_independent_exact formulas") {
    for (int n : {3, 5, 8}) {
        CHECK(count_independent_exact(Graph::complete(n)) == n + 1);
        CHECK(count_independent_exact(Graph(n)) == pow2(n));
    }
    for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 2}}) {
        Int expected = ipow(pow2(d + 1) - 1, c);
        CHECK(count_independent_exact(kdd_union(c, d)) == expected);
    }
}

TEST_CASE("markov_density_count") {
    Graph c4 = kdd_union(1, 2);
    auto rep = markov_density_count(c4, 2);
    CHECK(rep.count == 16); // threshold density < 2 is vacuous on 4 vertices
    CHECK(rep.threshold == 8);
    CHECK(rep.pass);

    auto rep2 = markov_density_count(kdd_union(2, 2), 2);
    CHECK(rep2.pass);
    CHECK(rep2.count >= 128);

    CHECK_THROWS_AS(markov_density_count(Graph(6), 1), std::invalid_argument);
    CHECK_THROWS_AS(markov_density_count(Graph::from_edges(3, {{0, 1}}), 1),
                    std::invalid_argument);
}

TEST_CASE("container_count_bound end to end on kdd instances") {
    for (auto [copies, d, k] : std::vector<std::tuple<int, int, long>>{
             {1, 2, 1}, {2, 2, 2}, {1, 3, 2}}) {
        Graph g = kdd_union(copies, d);
        auto rep = container_count_bound(g, k, rat(1), rat(1), rat(1));
        INFO("copies=" << copies << " d=" << d << " k=" << k << " exact=" << rep.exact_count.get_str()
                       << " bound=" << rep.bound.get_str());
        CHECK(rep.pass);
        CHECK(rep.exact_count <= rep.bound);
        CHECK(rep.distinct_fingerprints <= Int(rep.sparse_sets));
        CHECK(rep.eps_far_verified);
        CHECK(rep.eps < rep.rho * rep.rho / 2);
    }
}

TEST_CASE("container_count_bound on a cycle") {
    Graph c8 = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    auto rep = container_count_bound(c8, 2, rat(1), rat(1), rat(1));
    CHECK(rep.pass);
    CHECK(rep.exact_count <= rep.bound);
}

TEST_CASE("kdd_lower_bound_count hand example") {
    auto rep = kdd_lower_bound_count(2, 1, 1000);
    CHECK(rep.formula == 4); // 2 * (4 - C(2,1)) * C(2,0)
    CHECK(rep.family_size == 6);
    CHECK(rep.family_ge_formula);
    CHECK(rep.members_pass_density);
    REQUIRE(rep.sparse_count.has_value());
    CHECK(rep.sparse_ge_family);
    CHECK(*rep.sparse_count >= rep.family_size);
}

TEST_CASE("kdd_lower_bound_count across a small grid") {
    for (int d : {1, 2, 3})
        for (int copies : {1, 2})
            for (long k : {1L, 4L}) {
                auto rep = kdd_lower_bound_count(d, copies, k);
                INFO("d=" << d << " copies=" << copies << " k=" << k);
                CHECK(rep.family_ge_formula);
                CHECK(rep.members_pass_density);
                CHECK(rep.sparse_ge_family);
                // family nesting: sparse count >= family size >= independent-set
                // count restricted to family shapes is not direct; check the
                // formula's terms are nonnegative instead
                CHECK(rep.term_big >= 0);
                CHECK(rep.term_small >= 1);
            }
}

TEST_CASE("counting guard") {
    CHECK_THROWS_AS(count_sparse_exact(Graph(25), SparsityPredicate::edge_budget(Int(0))),
                    GuardError);
    SearchLimits wide;
    wide.max_n_enumerate = 25;
    CHECK(count_independent_exact(Graph(21), wide) == pow2(21));
}

#include "gcl/generators.hpp"
#include "gcl/io.hpp"
#include "gcl/rng.hpp"
#include "test_helpers.hpp"

#include <catch2/catch.hpp>

#include <sstream>

using namespace gcl;
using namespace testutil;

namespace {
Graph parse(const std::string& text) {
    std::istringstream ss(text);
    return read_edge_list(ss);
}
} // namespace

TEST_CASE("edge list round trip") {
    SplitMix64 rng(13);
    for (int t = 0; t < 20; ++t) {
        int n = 1 + (int)rng.below(12);
        Graph g = n < 2 ? Graph(n)
                        : graph_from_mask(n, rng.next() & ((1ull << pair_count(n)) - 1));
        std::istringstream in(edge_list_string(g));
        Graph back = read_edge_list(in);
        CHECK(back == g);
    }
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_WITH(parse(""), Catch::Contains("header"));
    CHECK_THROWS_WITH(parse("0 0\n"), Catch::Contains("n >= 1"));
    CHECK_THROWS_WITH(parse("3 -1\n"), Catch::Contains("negative"));
    CHECK_THROWS_WITH(parse("3 2\n0 1\n"), Catch::Contains("expected 2 edges"));
    CHECK_THROWS_WITH(parse("3 1\n0 3\n"), Catch::Contains("out of range"));
    CHECK_THROWS_WITH(parse("3 1\n-1 2\n"), Catch::Contains("out of range"));
    CHECK_THROWS_WITH(parse("3 1\n1 1\n"), Catch::Contains("self-loop"));
    CHECK_THROWS_WITH(parse("3 2\n0 1\n1 0\n"), Catch::Contains("duplicate"));
    CHECK_THROWS_AS(load_graph("/nonexistent/path.txt"), std::runtime_error);
}

TEST_CASE("set json round trip is sorted") {
    VertexSet s = VertexSet::of(9, {7, 1, 4});
    auto j = set_to_json(s);
    CHECK(j.dump() == "[1,4,7]");
    CHECK(set_from_json(j, 9) == s);
}

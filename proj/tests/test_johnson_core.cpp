#include "jiso/johnson_core.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace jiso;
using jiso::testing::all_vertices;

TEST_CASE("graph params validate and count vertices exactly") {
    CHECK(GraphParams(4, 2).vertex_count() == 6);
    CHECK(GraphParams(5, 2).vertex_count() == 10);
    CHECK(GraphParams(60, 30).vertex_count() == BigInt("118264581564861424"));
    CHECK(GraphParams(7, 7).vertex_count() == 1);
    CHECK_THROWS_AS(GraphParams(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(GraphParams(3, 4), std::invalid_argument);
}

TEST_CASE("vertex construction normalizes and rejects duplicates") {
    CHECK(Vertex{3, 1} == Vertex{1, 3});
    CHECK(Vertex{3, 1}.to_string() == "{1,3}");
    CHECK_THROWS_AS(Vertex({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Vertex({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate_vertex(GraphParams(4, 2), Vertex{1, 5}), std::invalid_argument);
}

TEST_CASE("degree is k(n-k)") {
    CHECK(degree(GraphParams(4, 2)) == 4);
    CHECK(degree(GraphParams(5, 2)) == 6);
    CHECK(degree(GraphParams(5, 1)) == 4);
    CHECK(degree(GraphParams(6, 6)) == 0);
}

TEST_CASE("adjacency means intersection of size k-1") {
    CHECK(adjacent(Vertex{1, 2}, Vertex{1, 3}));
    CHECK_FALSE(adjacent(Vertex{1, 2}, Vertex{3, 4}));
    CHECK_FALSE(adjacent(Vertex{1, 2}, Vertex{1, 2}));
    CHECK(adjacent(Vertex{1, 2, 3}, Vertex{1, 2, 4}));
    CHECK_THROWS_AS(adjacent(Vertex{1, 2}, Vertex{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("regularity: every vertex has k(n-k) neighbors") {
    for (i64 n = 1; n <= 8; ++n)
        for (i64 k = 1; k <= n; ++k) {
            const GraphParams params(n, k);
            const auto verts = all_vertices(params);
            for (const auto& u : verts) {
                i64 nbr = 0;
                for (const auto& v : verts)
                    if (adjacent(u, v)) ++nbr;
                CHECK(nbr == degree(params));
            }
        }
}

TEST_CASE("lexicographic order matches the sorted-tuple order") {
    CHECK(lex_compare(Vertex{1, 2}, Vertex{1, 3}) == std::strong_ordering::less);
    CHECK(lex_compare(Vertex{1, 9}, Vertex{2, 3}) == std::strong_ordering::less);
    CHECK(lex_compare(Vertex{2, 4}, Vertex{2, 4}) == std::strong_ordering::equal);
    CHECK(Vertex{2, 3} > Vertex{1, 9});
}

TEST_CASE("rank/unrank round-trip and stay lex-increasing") {
    CHECK(unrank_vertex(GraphParams(5, 2), 0) == Vertex{1, 2});
    CHECK(unrank_vertex(GraphParams(5, 2), 9) == Vertex{4, 5});
    CHECK(unrank_vertex(GraphParams(5, 2), 4) == Vertex{2, 3});
    CHECK_THROWS_AS(unrank_vertex(GraphParams(5, 2), 10), std::out_of_range);
    CHECK_THROWS_AS(unrank_vertex(GraphParams(5, 2), -1), std::out_of_range);

    for (const auto& params :
         {GraphParams(50, 1), GraphParams(100, 2), GraphParams(20, 3), GraphParams(16, 5),
          GraphParams(12, 6), GraphParams(14, 13), GraphParams(9, 9)}) {
        const i64 total = params.vertex_count().convert_to<i64>();
        REQUIRE(total <= 5000);
        Vertex prev;
        for (i64 r = 0; r < total; ++r) {
            const Vertex v = unrank_vertex(params, r);
            CHECK(rank_vertex(params, v) == r);
            if (r > 0) CHECK(lex_compare(prev, v) == std::strong_ordering::less);
            prev = v;
        }
    }
}

TEST_CASE("reflection is an involution and an automorphism") {
    const GraphParams p5(5, 2);
    CHECK(reflect(p5, Vertex{1, 2}) == Vertex{4, 5});
    CHECK(reflect(p5, Vertex{2, 4}) == Vertex{2, 4});
    CHECK(reflect(p5, Vertex{1, 3}) == Vertex{3, 5});
    CHECK_THROWS_AS(reflect(GraphParams(5, 3), Vertex{1, 2, 3}), std::domain_error);

    for (i64 n = 2; n <= 8; ++n) {
        const GraphParams params(n, 2);
        const auto verts = all_vertices(params);
        for (const auto& u : verts) {
            CHECK(reflect(params, reflect(params, u)) == u);
            for (const auto& v : verts)
                CHECK(adjacent(u, v) == adjacent(reflect(params, u), reflect(params, v)));
        }
    }
}

TEST_CASE("domination is a partial order on the diagram") {
    CHECK(dominates(Vertex{1, 3}, Vertex{2, 4}));
    CHECK_FALSE(dominates(Vertex{2, 3}, Vertex{1, 5}));
    CHECK(dominates(Vertex{2, 4}, Vertex{2, 4}));
    CHECK_THROWS_AS(dominates(Vertex{1, 2, 3}, Vertex{1, 2, 4}), std::domain_error);

    for (i64 n = 3; n <= 8; ++n) {
        const auto verts = all_vertices(GraphParams(n, 2));
        for (const auto& u : verts) {
            CHECK(dominates(u, u));
            for (const auto& v : verts) {
                if (dominates(u, v) && dominates(v, u)) CHECK(u == v);
                for (const auto& w : verts)
                    if (dominates(u, v) && dominates(v, w)) CHECK(dominates(u, w));
            }
        }
    }
}

TEST_CASE("binomial handles edges exactly") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(52, 26) == BigInt("495918532948104"));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "g31/graph_core.hpp"

using namespace g31;

namespace {

// test-only oracle: all triples over {1..n} sorted colex, by enumeration
std::vector<Vertex> all_triples_colex(int n) {
    std::vector<Vertex> out;
    for (int c = 3; c <= n; ++c)
        for (int b = 2; b < c; ++b)
            for (int a = 1; a < b; ++a) out.push_back(Vertex(a, b, c));
    return out;
}

u64 brute_edges(const std::vector<Vertex>& vs) {
    u64 c = 0;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j])) ++c;
    return c;
}

}  // namespace

TEST_CASE("make_params closed forms vs exhaustive count") {
    auto p3 = make_params(3);
    CHECK(p3.vertex_count == 1);
    CHECK(p3.degree == 0);
    CHECK(p3.total_edges == 0);

    auto p6 = make_params(6);
    CHECK(p6.vertex_count == 20);
    CHECK(p6.degree == 9);
    CHECK(p6.total_edges == 90);
    CHECK(brute_edges(all_triples_colex(6)) == 90);

    auto p10 = make_params(10);
    CHECK(p10.vertex_count == 120);
    CHECK(p10.degree == 63);
    CHECK(p10.total_edges == 3780);
    CHECK(brute_edges(all_triples_colex(10)) == 3780);

    CHECK_THROWS_AS(make_params(2), std::invalid_argument);
    // handshake identity holds in the struct itself
    for (long long n = 3; n <= 40; ++n) {
        auto p = make_params(n);
        CHECK(p.total_edges * 2 == u128(p.degree) * p.vertex_count);
    }
    // no overflow at large n
    auto big = make_params(1000000);
    CHECK(to_string(big.total_edges) ==
          to_string(binom(u128(999997), 2) * binom(u128(1000000), 3) * 3 / 2));
}

TEST_CASE("adjacency is |intersection| == 1") {
    CHECK(adjacent(Vertex(1, 2, 3), Vertex(3, 4, 5)));
    CHECK_FALSE(adjacent(Vertex(1, 2, 3), Vertex(1, 2, 4)));
    CHECK_FALSE(adjacent(Vertex(1, 2, 3), Vertex(4, 5, 6)));
    CHECK_FALSE(adjacent(Vertex(1, 2, 3), Vertex(1, 2, 3)));
    // symmetry on a sample
    auto vs = all_triples_colex(7);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < vs.size(); ++j)
            CHECK(adjacent(vs[i], vs[j]) == adjacent(vs[j], vs[i]));
}

TEST_CASE("colex rank/unrank against enumeration") {
    CHECK(colex_rank(Vertex(1, 2, 3), 6) == 0);
    CHECK(colex_rank(Vertex(1, 2, 4), 6) == 1);
    CHECK(colex_rank(Vertex(4, 5, 6), 6) == 19);
    CHECK(colex_unrank(0, 6) == Vertex(1, 2, 3));
    CHECK(colex_unrank(1, 6) == Vertex(1, 2, 4));
    CHECK(colex_unrank(19, 6) == Vertex(4, 5, 6));
    for (int n = 3; n <= 12; ++n) {
        auto vs = all_triples_colex(n);
        for (u64 r = 0; r < vs.size(); ++r) {
            CHECK(colex_rank(vs[size_t(r)], n) == r);
            CHECK(colex_unrank(r, n) == vs[size_t(r)]);
        }
    }
    CHECK_THROWS_AS(colex_unrank(20, 6), std::invalid_argument);
    CHECK_THROWS_AS(colex_rank(Vertex(4, 5, 7), 6), std::invalid_argument);
}

TEST_CASE("neighbors: count, order, regularity") {
    auto p4 = make_params(4);
    CHECK(neighbors(p4, Vertex(1, 2, 3)).empty());

    auto p5 = make_params(5);
    auto n5 = neighbors(p5, Vertex(1, 2, 3));
    REQUIRE(n5.size() == 3);
    CHECK(n5[0] == Vertex(1, 4, 5));
    CHECK(n5[1] == Vertex(2, 4, 5));
    CHECK(n5[2] == Vertex(3, 4, 5));

    auto p6 = make_params(6);
    CHECK(neighbors(p6, Vertex(1, 2, 3)).size() == 9);

    for (long long n = 4; n <= 12; ++n) {
        auto p = make_params(n);
        for (u64 r = 0; r < p.vertex_count; ++r) {
            auto ns = neighbors(p, colex_unrank(r, n));
            CHECK(u64(ns.size()) == p.degree);
        }
    }
    // colex order and correctness for one vertex
    auto ns = neighbors(p6, Vertex(2, 4, 6));
    for (size_t i = 1; i < ns.size(); ++i)
        CHECK(colex_rank(ns[i - 1], 6) < colex_rank(ns[i], 6));
    for (const auto& u : ns) CHECK(adjacent(u, Vertex(2, 4, 6)));
}

TEST_CASE("count_induced_edges: examples and handshake") {
    auto p6 = make_params(6);
    VertexSet w1(p6, {Vertex(1, 2, 3), Vertex(1, 4, 5)});
    CHECK(count_induced_edges(p6, w1) == 1);
    CHECK(count_induced_edges_pairwise(p6, w1) == 1);

    VertexSet w2(p6, {Vertex(1, 2, 3), Vertex(1, 2, 4), Vertex(1, 2, 5)});
    CHECK(count_induced_edges(p6, w2) == 0);

    for (long long n = 4; n <= 10; ++n) {
        auto p = make_params(n);
        VertexSet full(p);
        for (u64 r = 0; r < p.vertex_count; ++r) full.insert(r);
        CHECK(u128(count_induced_edges(p, full)) == p.total_edges);
        if (n <= 8)
            CHECK(u128(count_induced_edges_pairwise(p, full)) == p.total_edges);
    }
}

TEST_CASE("grouped count agrees with pairwise on random subsets") {
    std::mt19937 rng(12345);
    for (long long n = 6; n <= 10; ++n) {
        auto p = make_params(n);
        for (int trial = 0; trial < 1000; ++trial) {
            VertexSet w(p);
            std::uniform_int_distribution<u64> size_d(0, p.vertex_count);
            std::uniform_int_distribution<u64> rank_d(0, p.vertex_count - 1);
            u64 target = size_d(rng);
            for (u64 i = 0; i < target; ++i) w.insert(rank_d(rng));
            CHECK(count_induced_edges(p, w) ==
                  count_induced_edges_pairwise(p, w));
        }
    }
}

TEST_CASE("removing a vertex never increases the induced edge count") {
    std::mt19937 rng(777);
    auto p = make_params(8);
    for (int trial = 0; trial < 200; ++trial) {
        VertexSet w(p);
        std::uniform_int_distribution<u64> rank_d(0, p.vertex_count - 1);
        for (int i = 0; i < 25; ++i) w.insert(rank_d(rng));
        u64 before = count_induced_edges(p, w);
        auto rs = w.ranks();
        u64 victim = rs[rng() % rs.size()];
        w.erase(victim);
        CHECK(count_induced_edges(p, w) <= before);
    }
}

TEST_CASE("parallel pairwise count matches single-threaded") {
    auto p = make_params(9);
    std::mt19937 rng(42);
    VertexSet w(p);
    std::uniform_int_distribution<u64> rank_d(0, p.vertex_count - 1);
    for (int i = 0; i < 400; ++i) w.insert(rank_d(rng));
    u64 ref = count_induced_edges_pairwise(p, w, 1);
    CHECK(count_induced_edges_pairwise(p, w, 4) == ref);
    CHECK(count_induced_edges(p, w) == ref);
}

TEST_CASE("set file round trip with comments") {
    auto p = make_params(7);
    std::string text = "# a comment\n1 2 3\n2 4 6  # trailing note\n\n3 5 7\n";
    std::istringstream in(text);
    VertexSet w = read_vertex_set(in, p);
    CHECK(w.size() == 3);
    CHECK(w.contains(Vertex(2, 4, 6)));
    std::ostringstream out;
    write_vertex_set(out, w);
    std::istringstream in2(out.str());
    CHECK(read_vertex_set(in2, p) == w);

    std::istringstream bad("1 2\n");
    CHECK_THROWS(read_vertex_set(bad, p));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>

#include "g31/independence.hpp"
#include "g31/oracle.hpp"

using namespace g31;

namespace {

// test-only oracle: maximum independent set by plain recursion, no pruning
// beyond feasibility — deliberately independent of the search under test
u64 brute_alpha(const GraphParams& p) {
    std::vector<Vertex> vs;
    for (u64 r = 0; r < p.vertex_count; ++r) vs.push_back(colex_unrank(r, p.n));
    u64 best = 0;
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (cur.size() > best) best = u64(cur.size());
        for (size_t i = idx; i < vs.size(); ++i) {
            bool ok = true;
            for (size_t j : cur)
                if (adjacent(vs[i], vs[j])) {
                    ok = false;
                    break;
                }
            if (ok) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace

TEST_CASE("is_independent") {
    auto p = make_params(6);
    CHECK(is_independent(p, VertexSet(p, {Vertex(1, 2, 3), Vertex(1, 2, 4),
                                          Vertex(1, 2, 5)})));
    CHECK_FALSE(is_independent(p, VertexSet(p, {Vertex(1, 2, 3), Vertex(1, 4, 5)})));
    CHECK(is_independent(p, VertexSet(p, {Vertex(1, 2, 3), Vertex(4, 5, 6)})));
    CHECK(is_independent(p, VertexSet(p)));
}

TEST_CASE("max_independent_set matches the brute-force oracle") {
    CHECK(max_independent_set(make_params(4)).value == 4);
    for (long long n = 4; n <= 7; ++n) {
        auto p = make_params(n);
        auto r = max_independent_set(p);
        REQUIRE(r.status == SearchStatus::exact);
        CHECK(r.value == brute_alpha(p));
        CHECK(r.witness.size() == r.value);
        CHECK(is_independent(p, r.witness));
    }
    CHECK(max_independent_set(make_params(6)).value == 4);
    CHECK(max_independent_set(make_params(7)).value == 5);
}

TEST_CASE("budget exhaustion reports a status, not an error") {
    auto r = max_independent_set(make_params(11),
                                 std::chrono::duration<double>(0.0));
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK(is_independent(make_params(11), r.witness));
}

TEST_CASE("alpha_reference modes and cache") {
    CHECK(alpha_reference(6, AlphaMode::exact).value == 4);
    CHECK(alpha_reference(5, AlphaMode::exact).value == 4);
    CHECK(alpha_reference(1000, AlphaMode::asymptotic).value == 1000);
    CHECK(alpha_reference(1000, AlphaMode::asymptotic).mode ==
          AlphaMode::asymptotic);
    CHECK_THROWS_AS(alpha_reference(13, AlphaMode::exact), std::invalid_argument);
    // alpha is monotone over the cached range
    for (long long n = 4; n <= 12; ++n)
        CHECK(*cached_alpha(n) >= *cached_alpha(n - 1));
}

TEST_CASE("cached alpha agrees with the search on the fast range") {
    for (long long n = 3; n <= 9; ++n) {
        auto r = max_independent_set(make_params(n));
        REQUIRE(r.status == SearchStatus::exact);
        CHECK(r.value == *cached_alpha(n));
    }
}

TEST_CASE("alpha.tsv fixture mirrors the cache") {
    std::ifstream in(G31_DATA_DIR "/alpha.tsv");
    REQUIRE(in.good());
    long long n;
    u64 a;
    int rows = 0;
    while (in >> n >> a) {
        CHECK(*cached_alpha(n) == a);
        ++rows;
    }
    CHECK(rows == 10);  // n = 3..12
}

TEST_CASE("decompose: the three single-block shapes") {
    auto p = make_params(6);

    auto d1 = decompose_independent(
        p, VertexSet(p, {Vertex(1, 2, 3), Vertex(1, 2, 4), Vertex(1, 2, 5)}));
    REQUIRE(d1.blocks.size() == 1);
    CHECK(d1.blocks[0].kind == BlockKind::type1);
    CHECK(d1.blocks[0].pair_witness == std::array<int, 2>{1, 2});

    auto d2 = decompose_independent(
        p, VertexSet(p, {Vertex(1, 2, 3), Vertex(1, 2, 4), Vertex(1, 3, 4),
                         Vertex(2, 3, 4)}));
    REQUIRE(d2.blocks.size() == 1);
    CHECK(d2.blocks[0].kind == BlockKind::type2);
    CHECK(d2.blocks[0].envelope_witness == std::array<int, 4>{1, 2, 3, 4});

    auto d3 = decompose_independent(
        p, VertexSet(p, {Vertex(1, 2, 3), Vertex(4, 5, 6)}));
    REQUIRE(d3.blocks.size() == 1);
    CHECK(d3.blocks[0].kind == BlockKind::type3);

    CHECK_THROWS_AS(decompose_independent(
                        p, VertexSet(p, {Vertex(1, 2, 3), Vertex(1, 4, 5)})),
                    std::invalid_argument);
}

TEST_CASE("decompose handles small leftovers") {
    auto p = make_params(10);
    // a pair sharing two elements becomes a type-2 block via its envelope
    auto d = decompose_independent(
        p, VertexSet(p, {Vertex(1, 2, 3), Vertex(1, 2, 4)}));
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].kind == BlockKind::type2);
    // a singleton is absorbed into the type-3 block
    auto ds = decompose_independent(p, VertexSet(p, {Vertex(2, 5, 9)}));
    REQUIRE(ds.blocks.size() == 1);
    CHECK(ds.blocks[0].kind == BlockKind::type3);
    // mixed: type-1 family plus a disjoint triple
    auto dm = decompose_independent(
        p, VertexSet(p, {Vertex(1, 2, 3), Vertex(1, 2, 4), Vertex(1, 2, 5),
                         Vertex(6, 7, 8)}));
    CHECK(dm.blocks.size() == 2);
    // empty set: no blocks
    CHECK(decompose_independent(p, VertexSet(p)).blocks.empty());
}

TEST_CASE("every maximal independent set decomposes (n = 5, 6)") {
    for (long long n = 5; n <= 6; ++n) {
        auto p = make_params(n);
        auto sets = enumerate_maximal_independent_sets(p, 0);
        CHECK(!sets.empty());
        for (const auto& s : sets) {
            auto d = decompose_independent(p, s);  // verifies internally
            u64 covered = 0;
            for (const auto& b : d.blocks) covered += u64(b.vertices.size());
            CHECK(covered == s.size());
        }
    }
}

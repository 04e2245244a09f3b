#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "g31/independence.hpp"
#include "g31/oracle.hpp"

using namespace g31;

namespace {

// test-only oracle: minimum induced edges over all l-subsets by plain
// combination enumeration
u64 brute_min_edges(const GraphParams& p, u64 l) {
    std::vector<Vertex> vs;
    for (u64 r = 0; r < p.vertex_count; ++r) vs.push_back(colex_unrank(r, p.n));
    size_t nv = vs.size();
    std::vector<size_t> idx(static_cast<size_t>(l));
    for (size_t i = 0; i < l; ++i) idx[i] = i;
    u64 best = UINT64_MAX;
    if (l == 0) return 0;
    while (true) {
        u64 e = 0;
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = i + 1; j < idx.size(); ++j)
                if (adjacent(vs[idx[i]], vs[idx[j]])) ++e;
        best = std::min(best, e);
        // next combination
        size_t i = idx.size();
        while (i > 0 && idx[i - 1] == nv - (idx.size() - (i - 1))) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

}  // namespace

TEST_CASE("exact_min_edges ground truths at n=6") {
    auto p = make_params(6);
    auto r4 = exact_min_edges(p, 4);
    CHECK(r4.value == 0);
    CHECK(r4.status == SearchStatus::exact);
    CHECK(is_independent(p, r4.witness));

    auto r5 = exact_min_edges(p, 5);
    CHECK(r5.value == 2);
    CHECK(r5.value == brute_min_edges(p, 5));  // all C(20,5) subsets
    CHECK(r5.witness.size() == 5);
    CHECK(count_induced_edges(p, r5.witness) == 2);

    auto r16 = exact_min_edges(p, 16);
    CHECK(r16.value == 54);
    CHECK(r16.witness.size() == 16);
    CHECK(count_induced_edges(p, r16.witness) == 54);

    CHECK(exact_min_edges(p, 0).value == 0);
    CHECK(u128(exact_min_edges(p, 20).value) == p.total_edges);
    CHECK_THROWS_AS(exact_min_edges(p, 21), std::invalid_argument);
}

TEST_CASE("witness invariants and determinism") {
    auto p = make_params(6);
    auto a = exact_min_edges(p, 7);
    auto b = exact_min_edges(p, 7);
    CHECK(a.witness == b.witness);
    CHECK(a.witness.size() == 7);
    CHECK(count_induced_edges(p, a.witness) == a.value);
}

TEST_CASE("direct and complement searches agree") {
    auto p = make_params(6);
    for (u64 l : {8, 10, 12, 14}) {
        auto d = exact_min_edges(p, l, std::chrono::duration<double>(120.0),
                                 SearchSide::direct);
        auto c = exact_min_edges(p, l, std::chrono::duration<double>(120.0),
                                 SearchSide::complement);
        REQUIRE(d.status == SearchStatus::exact);
        REQUIRE(c.status == SearchStatus::exact);
        CHECK(d.value == c.value);
        CHECK(d.witness == c.witness);  // same lexicographic tie-break
    }
}

TEST_CASE("min edges is nondecreasing in l and zero iff l <= alpha") {
    for (long long n = 6; n <= 7; ++n) {
        auto p = make_params(n);
        u64 alpha = *cached_alpha(n);
        u64 prev = 0;
        u64 lmax = n == 6 ? p.vertex_count : 8;
        for (u64 l = 0; l <= lmax; ++l) {
            auto r = exact_min_edges(p, l);
            REQUIRE(r.status == SearchStatus::exact);
            CHECK(r.value >= prev);
            CHECK((r.value == 0) == (l <= alpha));
            prev = r.value;
        }
    }
}

TEST_CASE("budget exhaustion returns an upper bound with a status") {
    auto p = make_params(8);
    auto r = exact_min_edges(p, 20, std::chrono::duration<double>(0.0));
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK(r.witness.size() == 20);
    CHECK(count_induced_edges(p, r.witness) == r.value);
}

TEST_CASE("enumerate maximal independent sets") {
    auto p4 = make_params(4);
    auto s4 = enumerate_maximal_independent_sets(p4, 4);
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].size() == 4);  // edgeless graph: the whole vertex set

    auto p5 = make_params(5);
    CHECK(enumerate_maximal_independent_sets(p5, 5).empty());

    auto p6 = make_params(6);
    auto s6 = enumerate_maximal_independent_sets(p6, 4);
    CHECK(!s6.empty());
    VertexSet type1(p6, {Vertex(1, 2, 3), Vertex(1, 2, 4), Vertex(1, 2, 5),
                         Vertex(1, 2, 6)});
    VertexSet type2(p6, {Vertex(1, 2, 3), Vertex(1, 2, 4), Vertex(1, 3, 4),
                         Vertex(2, 3, 4)});
    CHECK(std::count(s6.begin(), s6.end(), type1) == 1);
    CHECK(std::count(s6.begin(), s6.end(), type2) == 1);
    for (const auto& s : s6) {
        CHECK(is_independent(p6, s));
        CHECK(s.size() >= 4);
        // maximality: no vertex outside extends it
        for (u64 r = 0; r < p6.vertex_count; ++r) {
            if (s.contains(r)) continue;
            Vertex cand = colex_unrank(r, 6);
            bool blocked = false;
            for (const Vertex& v : s.vertices())
                if (adjacent(cand, v)) blocked = true;
            CHECK(blocked);
        }
    }
}

TEST_CASE("constructions never beat the oracle in range") {
    // links the modules: any built set of size l has >= r(l) edges
    auto p = make_params(6);
    for (u64 l = 2; l <= 10; ++l) {
        VertexSet prefix(p);
        for (u64 r = 0; r < l; ++r) prefix.insert(r);
        CHECK(count_induced_edges(p, prefix) >= exact_min_edges(p, l).value);
    }
}

#include "g31/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "g31/bounds.hpp"
#include "dense_graph.hpp"

namespace g31 {

namespace {

using detail::DenseGraph;

struct MinEdgeSearch {
    const DenseGraph& g;
    size_t words;
    u64 demand = 0;
    u64 alpha = 0;
    bool use_turan = false;
    bool include_first = true;

    bool found = false;
    u64 best = 0;
    std::vector<u64> best_set;
    std::vector<u64> cur;
    std::vector<u64> chosen;

    std::chrono::steady_clock::time_point deadline;
    bool exceeded = false;
    u64 nodes = 0;

    explicit MinEdgeSearch(const DenseGraph& dg)
        : g(dg), words(dg.words), chosen(dg.words, 0) {}

    u64 remaining_lb(u64 need) const {
        if (!use_turan || need == 0) return 0;
        return u64(turan_lb(need, alpha));
    }

    void rec(u64 idx, u64 cnt, u64 partial) {
        if (exceeded) return;
        if ((++nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            exceeded = true;
            return;
        }
        if (cnt == demand) {
            if (!found || partial < best) {
                found = true;
                best = partial;
                best_set = cur;
            }
            return;
        }
        if (g.nv - idx < demand - cnt) return;
        if (found && partial + remaining_lb(demand - cnt) >= best) return;

        auto take = [&] {
            const u64* a = g.row(idx);
            u64 delta = 0;
            for (size_t i = 0; i < words; ++i)
                delta += u64(__builtin_popcountll(a[i] & chosen[i]));
            chosen[idx >> 6] |= u64(1) << (idx & 63);
            cur.push_back(idx);
            rec(idx + 1, cnt + 1, partial + delta);
            cur.pop_back();
            chosen[idx >> 6] &= ~(u64(1) << (idx & 63));
        };
        auto skip = [&] { rec(idx + 1, cnt, partial); };
        if (include_first) {
            take();
            skip();
        } else {
            skip();
            take();
        }
    }
};

}  // namespace

ExactResult exact_min_edges(const GraphParams& p, u64 l,
                            std::chrono::duration<double> budget,
                            SearchSide side) {
    if (l > p.vertex_count)
        throw std::invalid_argument("exact_min_edges: l exceeds |V_n|");
    auto t0 = std::chrono::steady_clock::now();
    auto deadline = t0 + std::chrono::duration_cast<
                             std::chrono::steady_clock::duration>(budget);
    ExactResult r{0, VertexSet(p), SearchStatus::exact, 0, 0.0};
    if (l == 0) return r;

    DenseGraph g(p);
    u64 removed = p.vertex_count - l;
    bool complement_side = side == SearchSide::automatic
                               ? removed < l
                               : side == SearchSide::complement;

    MinEdgeSearch s(g);
    s.demand = complement_side ? removed : l;
    // Searching for W directly, vertices are included first; searching for
    // the removed set D, excluded first, so the first optimum found is in
    // both cases the lexicographically smallest W.
    s.include_first = !complement_side;
    s.deadline = deadline;
    if (auto a = cached_alpha(p.n)) {
        s.alpha = *a;
        s.use_turan = true;
    }

    if (s.demand == 0) {
        // l == |V_n|: the whole vertex set
        for (u64 v = 0; v < p.vertex_count; ++v) r.witness.insert(v);
        r.value = u64(p.total_edges);
        return r;
    }
    s.rec(0, 0, 0);
    if (!s.found) {
        // budget hit before the very first leaf: fall back to the colex
        // prefix so the reported value is still a genuine upper bound
        s.cur.clear();
        std::fill(s.chosen.begin(), s.chosen.end(), 0);
        u64 partial = 0;
        for (u64 v = 0; v < s.demand; ++v) {
            const u64* a = g.row(v);
            for (size_t i = 0; i < s.words; ++i)
                partial += u64(__builtin_popcountll(a[i] & s.chosen[i]));
            s.chosen[v >> 6] |= u64(1) << (v & 63);
            s.cur.push_back(v);
        }
        s.found = true;
        s.best = partial;
        s.best_set = s.cur;
    }

    if (complement_side) {
        std::vector<bool> in_d(p.vertex_count, false);
        for (u64 v : s.best_set) in_d[size_t(v)] = true;
        for (u64 v = 0; v < p.vertex_count; ++v)
            if (!in_d[size_t(v)]) r.witness.insert(v);
        i128 value = i128(p.total_edges) - i128(u128(p.degree) * removed) +
                     i128(s.best);
        r.value = u64(value);
    } else {
        for (u64 v : s.best_set) r.witness.insert(v);
        r.value = s.best;
    }
    r.status = s.exceeded ? SearchStatus::budget_exceeded : SearchStatus::exact;
    r.nodes_explored = s.nodes;
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

namespace {

struct BronKerbosch {
    const DenseGraph& g;
    size_t words;
    u64 min_size;
    std::vector<std::vector<u64>> comp;  // complement adjacency rows
    std::vector<u64> cur;
    std::vector<std::vector<u64>> out;

    BronKerbosch(const DenseGraph& dg, u64 ms)
        : g(dg), words(dg.words), min_size(ms) {
        comp.assign(size_t(g.nv), std::vector<u64>(words, 0));
        for (u64 v = 0; v < g.nv; ++v) {
            for (size_t i = 0; i < words; ++i) comp[size_t(v)][i] = ~g.row(v)[i];
            // mask off self and bits past nv
            comp[size_t(v)][v >> 6] &= ~(u64(1) << (v & 63));
            u64 tail = g.nv & 63;
            if (tail) comp[size_t(v)][words - 1] &= (u64(1) << tail) - 1;
        }
    }

    void run(std::vector<u64>& P, std::vector<u64>& X) {
        u64 pc = detail::popcount(P.data(), words);
        if (pc == 0) {
            if (detail::popcount(X.data(), words) == 0 &&
                u64(cur.size()) >= min_size)
                out.push_back(cur);
            return;
        }
        // pivot: vertex of P|X with most complement-neighbours in P
        u64 pivot = 0, best_deg = 0;
        bool have = false;
        for (u64 v = 0; v < g.nv; ++v) {
            if (!DenseGraph::test(P.data(), v) && !DenseGraph::test(X.data(), v))
                continue;
            u64 d = 0;
            for (size_t i = 0; i < words; ++i)
                d += u64(__builtin_popcountll(P[i] & comp[size_t(v)][i]));
            if (!have || d > best_deg) {
                have = true;
                best_deg = d;
                pivot = v;
            }
        }
        for (u64 v = 0; v < g.nv; ++v) {
            if (!DenseGraph::test(P.data(), v)) continue;
            if (DenseGraph::test(comp[size_t(pivot)].data(), v)) continue;
            std::vector<u64> P2(words), X2(words);
            for (size_t i = 0; i < words; ++i) {
                P2[i] = P[i] & comp[size_t(v)][i];
                X2[i] = X[i] & comp[size_t(v)][i];
            }
            cur.push_back(v);
            run(P2, X2);
            cur.pop_back();
            P[v >> 6] &= ~(u64(1) << (v & 63));
            X[v >> 6] |= u64(1) << (v & 63);
        }
    }
};

}  // namespace

std::vector<VertexSet> enumerate_maximal_independent_sets(
    const GraphParams& p, u64 min_size) {
    DenseGraph g(p);
    BronKerbosch bk(g, min_size);
    std::vector<u64> P(g.words, 0), X(g.words, 0);
    for (u64 v = 0; v < g.nv; ++v) DenseGraph::set(P.data(), v);
    bk.run(P, X);
    for (auto& s : bk.out) std::sort(s.begin(), s.end());
    std::sort(bk.out.begin(), bk.out.end());
    std::vector<VertexSet> result;
    result.reserve(bk.out.size());
    for (const auto& s : bk.out) {
        VertexSet vs(p);
        for (u64 v : s) vs.insert(v);
        result.push_back(std::move(vs));
    }
    return result;
}

}  // namespace g31

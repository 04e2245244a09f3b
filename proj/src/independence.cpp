#include "g31/independence.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dense_graph.hpp"

namespace g31 {

bool is_independent(const GraphParams& p, const VertexSet& w) {
    std::vector<Vertex> vs = w.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (adjacent(vs[i], vs[j])) return false;
    return true;
}

namespace {

using detail::DenseGraph;

struct MisSearch {
    const DenseGraph& g;
    size_t words;
    std::chrono::steady_clock::time_point deadline;
    bool exceeded = false;
    u64 nodes = 0;
    u64 best = 0;
    std::vector<u64> best_set;
    std::vector<u64> cur;
    std::vector<std::vector<u64>> clique_masks;  // scratch for the bound

    explicit MisSearch(const DenseGraph& dg) : g(dg), words(dg.words) {}

    // Greedy clique cover of the candidate set; the number of cliques is
    // an upper bound on the independence number of the candidates.
    u64 cover_bound(const u64* cand) {
        size_t used = 0;
        for (u64 v = 0; v < g.nv; ++v) {
            if (!DenseGraph::test(cand, v)) continue;
            size_t c = 0;
            for (; c < used; ++c)
                if (DenseGraph::test(clique_masks[c].data(), v)) break;
            if (c == used) {
                if (clique_masks.size() <= used) clique_masks.emplace_back(words);
                std::copy(g.row(v), g.row(v) + words, clique_masks[used].begin());
                ++used;
            } else {
                const u64* a = g.row(v);
                for (size_t i = 0; i < words; ++i) clique_masks[c][i] &= a[i];
            }
        }
        return used;
    }

    void expand(std::vector<u64>& cand) {
        if (exceeded) return;
        if ((++nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            exceeded = true;
            return;
        }
        u64 cnt = u64(cur.size());
        u64 pc = detail::popcount(cand.data(), words);
        if (pc == 0) {
            if (cnt > best) {
                best = cnt;
                best_set = cur;
            }
            return;
        }
        if (cnt + pc <= best) return;
        if (cnt + cover_bound(cand.data()) <= best) return;
        long long v = detail::lowest_bit(cand.data(), words);
        // include v first so the first optimum found is colex-smallest
        std::vector<u64> next(cand);
        const u64* a = g.row(u64(v));
        for (size_t i = 0; i < words; ++i) next[i] &= ~a[i];
        next[size_t(v) >> 6] &= ~(u64(1) << (v & 63));
        cur.push_back(u64(v));
        expand(next);
        cur.pop_back();
        cand[size_t(v) >> 6] &= ~(u64(1) << (v & 63));
        expand(cand);
    }
};

}  // namespace

ExactResult max_independent_set(const GraphParams& p,
                                std::chrono::duration<double> budget) {
    auto t0 = std::chrono::steady_clock::now();
    DenseGraph g(p);
    MisSearch s(g);
    s.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
    std::vector<u64> cand(g.words, 0);
    for (u64 v = 0; v < g.nv; ++v) DenseGraph::set(cand.data(), v);
    s.expand(cand);
    ExactResult r{0, VertexSet(p), SearchStatus::exact, 0, 0.0};
    r.value = s.best;
    for (u64 v : s.best_set) r.witness.insert(v);
    r.status = s.exceeded ? SearchStatus::budget_exceeded : SearchStatus::exact;
    r.nodes_explored = s.nodes;
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
}

namespace {

// Exact alpha_n from the branch-and-bound search, frozen for n in 3..12.
// Regenerated by `g31 oracle alpha --n <n>`; the fixture data/alpha.tsv
// mirrors this table and the test suite cross-checks both.
constexpr std::pair<long long, u64> kAlphaTable[] = {
    {3, 1}, {4, 4}, {5, 4}, {6, 4}, {7, 5},
    {8, 8}, {9, 8}, {10, 8}, {11, 9}, {12, 12},
};

}  // namespace

std::optional<u64> cached_alpha(long long n) {
    for (auto [m, a] : kAlphaTable)
        if (m == n) return a;
    return std::nullopt;
}

AlphaValue alpha_reference(long long n, AlphaMode mode) {
    if (n < 3) throw std::invalid_argument("alpha_reference: n must be >= 3");
    if (mode == AlphaMode::asymptotic) return {u64(n), AlphaMode::asymptotic};
    auto a = cached_alpha(n);
    if (!a)
        throw std::invalid_argument(
            "alpha_reference: no cached exact alpha for n=" + std::to_string(n));
    return {*a, AlphaMode::exact};
}

namespace {

std::vector<int> support_of(const std::vector<Vertex>& vs) {
    std::set<int> s;
    for (const Vertex& v : vs) s.insert(v.e.begin(), v.e.end());
    return std::vector<int>(s.begin(), s.end());
}

std::string describe(const std::vector<Vertex>& vs) {
    std::ostringstream os;
    for (const Vertex& v : vs) os << '{' << v << "} ";
    return os.str();
}

}  // namespace

Decomposition decompose_independent(const GraphParams& p, const VertexSet& w) {
    if (!is_independent(p, w))
        throw std::invalid_argument("decompose_independent: set is not independent");
    std::vector<Vertex> vs = w.vertices();
    std::vector<bool> taken(vs.size(), false);
    Decomposition d;

    // type-1 blocks: >=3 vertices through one common pair
    std::map<std::pair<int, int>, std::vector<size_t>> by_pair;
    for (size_t i = 0; i < vs.size(); ++i) {
        const auto& e = vs[i].e;
        by_pair[{e[0], e[1]}].push_back(i);
        by_pair[{e[0], e[2]}].push_back(i);
        by_pair[{e[1], e[2]}].push_back(i);
    }
    for (auto& [pr, idx] : by_pair) {
        std::vector<size_t> free_idx;
        for (size_t i : idx)
            if (!taken[i]) free_idx.push_back(i);
        if (free_idx.size() < 3) continue;
        Block b;
        b.kind = BlockKind::type1;
        b.pair_witness = {pr.first, pr.second};
        for (size_t i : free_idx) {
            b.vertices.push_back(vs[i]);
            taken[i] = true;
        }
        b.support = support_of(b.vertices);
        d.blocks.push_back(std::move(b));
    }

    // type-2 blocks: >=2 vertices inside one 4-element envelope
    for (size_t i = 0; i < vs.size(); ++i) {
        if (taken[i]) continue;
        for (size_t j = i + 1; j < vs.size(); ++j) {
            if (taken[j]) continue;
            if (intersection_size(vs[i], vs[j]) != 2) continue;
            std::set<int> env(vs[i].e.begin(), vs[i].e.end());
            env.insert(vs[j].e.begin(), vs[j].e.end());
            Block b;
            b.kind = BlockKind::type2;
            size_t k = 0;
            for (int x : env) b.envelope_witness[k++] = x;
            auto inside = [&](const Vertex& v) {
                return env.count(v.e[0]) && env.count(v.e[1]) && env.count(v.e[2]);
            };
            for (size_t k2 = 0; k2 < vs.size(); ++k2)
                if (!taken[k2] && inside(vs[k2])) {
                    b.vertices.push_back(vs[k2]);
                    taken[k2] = true;
                }
            b.support = support_of(b.vertices);
            d.blocks.push_back(std::move(b));
            break;
        }
    }

    // everything left must be pairwise disjoint: one type-3 block
    Block b3;
    b3.kind = BlockKind::type3;
    for (size_t i = 0; i < vs.size(); ++i)
        if (!taken[i]) b3.vertices.push_back(vs[i]);
    if (!b3.vertices.empty()) {
        b3.support = support_of(b3.vertices);
        d.blocks.push_back(std::move(b3));
    }

    verify_decomposition(p, w, d);
    return d;
}

void verify_decomposition(const GraphParams& p, const VertexSet& w,
                          const Decomposition& d) {
    std::set<u64> seen;
    u64 total = 0;
    std::vector<std::vector<int>> supports;
    for (const Block& b : d.blocks) {
        if (b.vertices.empty())
            throw std::runtime_error("decomposition: empty block");
        for (const Vertex& v : b.vertices) {
            u64 r = colex_rank(v, p.n);
            if (!w.contains(r) || !seen.insert(r).second)
                throw std::runtime_error(
                    "decomposition: blocks do not partition the set near {" +
                    describe({v}) + "}");
            ++total;
        }
        switch (b.kind) {
            case BlockKind::type1: {
                if (b.vertices.size() < 3)
                    throw std::runtime_error("decomposition: type-1 block with " +
                                             describe(b.vertices));
                for (const Vertex& v : b.vertices) {
                    bool a = std::count(v.e.begin(), v.e.end(), b.pair_witness[0]);
                    bool c = std::count(v.e.begin(), v.e.end(), b.pair_witness[1]);
                    if (!a || !c)
                        throw std::runtime_error(
                            "decomposition: type-1 witness pair missing in " +
                            describe({v}));
                }
                break;
            }
            case BlockKind::type2: {
                if (b.vertices.size() < 2)
                    throw std::runtime_error("decomposition: type-2 block with " +
                                             describe(b.vertices));
                for (const Vertex& v : b.vertices)
                    for (int x : v.e)
                        if (!std::count(b.envelope_witness.begin(),
                                        b.envelope_witness.end(), x))
                            throw std::runtime_error(
                                "decomposition: vertex outside type-2 envelope: " +
                                describe({v}));
                break;
            }
            case BlockKind::type3: {
                for (size_t i = 0; i < b.vertices.size(); ++i)
                    for (size_t j = i + 1; j < b.vertices.size(); ++j)
                        if (intersection_size(b.vertices[i], b.vertices[j]) != 0)
                            throw std::runtime_error(
                                "decomposition: type-3 vertices intersect: " +
                                describe({b.vertices[i], b.vertices[j]}));
                break;
            }
        }
        supports.push_back(b.support);
    }
    if (total != w.size())
        throw std::runtime_error("decomposition: blocks do not cover the set");
    for (size_t i = 0; i < supports.size(); ++i)
        for (size_t j = i + 1; j < supports.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(supports[i].begin(), supports[i].end(),
                                  supports[j].begin(), supports[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty())
                throw std::runtime_error(
                    "decomposition: block supports intersect at element " +
                    std::to_string(inter.front()));
        }
}

}  // namespace g31

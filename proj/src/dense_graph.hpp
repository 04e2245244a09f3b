#ifndef G31_DENSE_GRAPH_HPP
#define G31_DENSE_GRAPH_HPP

// Internal: dense adjacency bitsets over colex ranks, for the exact
// searches. Only sensible at small n (n <= 12, |V| <= 220).

#include <vector>

#include "g31/graph_core.hpp"

namespace g31::detail {

struct DenseGraph {
    u64 nv = 0;
    size_t words = 0;
    std::vector<u64> adj;  // nv rows of `words` words each

    explicit DenseGraph(const GraphParams& p) {
        nv = p.vertex_count;
        words = size_t((nv + 63) / 64);
        adj.assign(size_t(nv) * words, 0);
        std::vector<Vertex> vs;
        vs.reserve(size_t(nv));
        for (u64 r = 0; r < nv; ++r) vs.push_back(colex_unrank(r, p.n));
        for (u64 i = 0; i < nv; ++i)
            for (u64 j = i + 1; j < nv; ++j)
                if (adjacent(vs[size_t(i)], vs[size_t(j)])) {
                    set(row(i), j);
                    set(row(j), i);
                }
    }

    u64* row(u64 v) { return adj.data() + size_t(v) * words; }
    const u64* row(u64 v) const { return adj.data() + size_t(v) * words; }

    static void set(u64* w, u64 b) { w[b >> 6] |= u64(1) << (b & 63); }
    static bool test(const u64* w, u64 b) {
        return (w[b >> 6] >> (b & 63)) & 1u;
    }
};

struct BitBuf {
    std::vector<u64> w;
    explicit BitBuf(size_t words) : w(words, 0) {}
    u64* data() { return w.data(); }
    const u64* data() const { return w.data(); }
};

inline u64 popcount(const u64* w, size_t words) {
    u64 c = 0;
    for (size_t i = 0; i < words; ++i) c += u64(__builtin_popcountll(w[i]));
    return c;
}

inline long long lowest_bit(const u64* w, size_t words) {
    for (size_t i = 0; i < words; ++i)
        if (w[i]) return (long long)(i * 64 + size_t(__builtin_ctzll(w[i])));
    return -1;
}

}  // namespace g31::detail

#endif

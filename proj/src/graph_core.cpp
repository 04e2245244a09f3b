#include "g31/graph_core.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace g31 {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(u128(-v));
    return to_string(u128(v));
}

u128 binom(u128 n, unsigned k) {
    if (u128(k) > n) return 0;
    u128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - (k - i));
        r /= i;  // exact: r holds C(n-k+i, i) after each step
    }
    return r;
}

Vertex::Vertex(int a, int b, int c) : e{a, b, c} {
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2])
        throw std::invalid_argument("vertex elements must be distinct");
}

bool Vertex::valid_for(int n) const {
    return e[0] >= 1 && e[0] < e[1] && e[1] < e[2] && e[2] <= n;
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
    return os << v.e[0] << ' ' << v.e[1] << ' ' << v.e[2];
}

int intersection_size(const Vertex& u, const Vertex& w) {
    int c = 0;
    for (int a : u.e)
        for (int b : w.e)
            if (a == b) ++c;
    return c;
}

bool adjacent(const Vertex& u, const Vertex& w) {
    return intersection_size(u, w) == 1;
}

GraphParams make_params(long long n) {
    if (n < 3) throw std::invalid_argument("make_params: n must be >= 3");
    GraphParams p;
    p.n = n;
    p.vertex_count = u64(binom(u128(n), 3));
    p.degree = u64(3 * binom(u128(n) - 3, 2));
    p.total_edges = binom(u128(n) - 3, 2) * binom(u128(n), 3) * 3 / 2;
    return p;
}

u64 colex_rank(const Vertex& v, long long n) {
    if (!v.valid_for(int(n)))
        throw std::invalid_argument("colex_rank: vertex invalid for n");
    return u64(binom(u128(v.e[2]) - 1, 3) + binom(u128(v.e[1]) - 1, 2) +
               u128(v.e[0]) - 1);
}

namespace {

// Largest m in [lo, hi] with C(m, k) <= r.
long long max_with_binom_le(u128 r, unsigned k, long long lo, long long hi) {
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (binom(u128(mid), k) <= r)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

Vertex colex_unrank(u64 r, long long n) {
    if (u128(r) >= binom(u128(n), 3))
        throw std::invalid_argument("colex_unrank: rank out of range");
    long long m3 = max_with_binom_le(r, 3, 2, n - 1);
    u128 rem = u128(r) - binom(u128(m3), 3);
    long long m2 = max_with_binom_le(rem, 2, 1, m3 - 1);
    rem -= binom(u128(m2), 2);
    return Vertex(int(rem) + 1, int(m2) + 1, int(m3) + 1);
}

std::vector<Vertex> neighbors(const GraphParams& p, const Vertex& v) {
    if (!v.valid_for(int(p.n)))
        throw std::invalid_argument("neighbors: vertex invalid for n");
    std::vector<int> rest;
    rest.reserve(size_t(p.n) - 3);
    for (int i = 1; i <= p.n; ++i)
        if (i != v.e[0] && i != v.e[1] && i != v.e[2]) rest.push_back(i);
    std::vector<Vertex> out;
    out.reserve(size_t(p.degree));
    for (int shared : v.e)
        for (size_t a = 0; a < rest.size(); ++a)
            for (size_t b = a + 1; b < rest.size(); ++b)
                out.push_back(Vertex(shared, rest[a], rest[b]));
    std::sort(out.begin(), out.end(), [&](const Vertex& x, const Vertex& y) {
        return colex_rank(x, p.n) < colex_rank(y, p.n);
    });
    return out;
}

VertexSet::VertexSet(const GraphParams& p)
    : n_(p.n), capacity_(p.vertex_count), bits_((p.vertex_count + 63) / 64, 0) {}

VertexSet::VertexSet(const GraphParams& p, const std::vector<Vertex>& vs)
    : VertexSet(p) {
    for (const Vertex& v : vs) insert(v);
}

bool VertexSet::contains(u64 rank) const {
    return (bits_[rank >> 6] >> (rank & 63)) & 1u;
}

bool VertexSet::contains(const Vertex& v) const {
    return contains(colex_rank(v, n_));
}

void VertexSet::insert(u64 rank) {
    if (rank >= capacity_) throw std::invalid_argument("VertexSet: rank out of range");
    u64& word = bits_[rank >> 6];
    u64 mask = u64(1) << (rank & 63);
    if (!(word & mask)) {
        word |= mask;
        ++size_;
    }
}

void VertexSet::insert(const Vertex& v) {
    if (!v.valid_for(int(n_)))
        throw std::invalid_argument("VertexSet: vertex invalid for n");
    insert(colex_rank(v, n_));
}

void VertexSet::erase(u64 rank) {
    u64& word = bits_[rank >> 6];
    u64 mask = u64(1) << (rank & 63);
    if (word & mask) {
        word &= ~mask;
        --size_;
    }
}

std::vector<u64> VertexSet::ranks() const {
    std::vector<u64> out;
    out.reserve(size_);
    for (size_t w = 0; w < bits_.size(); ++w) {
        u64 word = bits_[w];
        while (word) {
            int b = __builtin_ctzll(word);
            out.push_back(u64(w) * 64 + u64(b));
            word &= word - 1;
        }
    }
    return out;
}

std::vector<Vertex> VertexSet::vertices() const {
    std::vector<Vertex> out;
    out.reserve(size_);
    for (u64 r : ranks()) out.push_back(colex_unrank(r, n_));
    return out;
}

u64 count_induced_edges_pairwise(const GraphParams& p, const VertexSet& w,
                                 int threads) {
    std::vector<Vertex> vs = w.vertices();
    size_t m = vs.size();
    auto scan = [&](size_t lo, size_t hi) {
        u64 c = 0;
        for (size_t i = lo; i < hi; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (adjacent(vs[i], vs[j])) ++c;
        return c;
    };
    if (threads <= 1 || m < 256) return scan(0, m);
    size_t nt = std::min<size_t>(size_t(threads), m);
    std::vector<u64> partial(nt, 0);
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            // strided split balances the triangular loop
            u64 c = 0;
            for (size_t i = t; i < m; i += nt)
                for (size_t j = i + 1; j < m; ++j)
                    if (adjacent(vs[i], vs[j])) ++c;
            partial[t] = c;
        });
    for (auto& th : pool) th.join();
    u64 total = 0;
    for (u64 c : partial) total += c;
    return total;
}

u64 count_induced_edges(const GraphParams& p, const VertexSet& w) {
    // A pair of distinct triples shares 1, 2 or 0 elements. With
    // S1 = sum over elements i of C(c_i,2) and S2 = sum over pairs {i,j}
    // of C(c_ij,2), pairs sharing one element are counted once in S1,
    // pairs sharing two elements twice in S1 and once in S2.
    std::unordered_map<int, u64> per_elem;
    std::unordered_map<u64, u64> per_pair;
    std::vector<Vertex> vs = w.vertices();
    per_elem.reserve(vs.size());
    per_pair.reserve(vs.size() * 3);
    for (const Vertex& v : vs) {
        for (int a : v.e) ++per_elem[a];
        ++per_pair[(u64(v.e[0]) << 21) | u64(v.e[1])];
        ++per_pair[(u64(v.e[0]) << 21) | u64(v.e[2])];
        ++per_pair[(u64(v.e[1]) << 21) | u64(v.e[2])];
    }
    u64 s1 = 0, s2 = 0;
    for (auto& [k, c] : per_elem) s1 += c * (c - 1) / 2;
    for (auto& [k, c] : per_pair) s2 += c * (c - 1) / 2;
    return s1 - 2 * s2;
}

VertexSet read_vertex_set(std::istream& in, const GraphParams& p) {
    VertexSet out(p);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int a, b, c;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b >> c))
            throw std::runtime_error("set file line " + std::to_string(lineno) +
                                     ": expected three integers");
        out.insert(Vertex(a, b, c));
    }
    return out;
}

void write_vertex_set(std::ostream& out, const VertexSet& w) {
    for (const Vertex& v : w.vertices()) out << v << '\n';
}

}  // namespace g31

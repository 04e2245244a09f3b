#ifndef G31_GRAPH_CORE_HPP
#define G31_GRAPH_CORE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace g31 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_string(u128 v);
std::string to_string(i128 v);

// Exact binomial coefficient for the small k used throughout (k <= 3 in
// practice, but the loop is generic). Result must fit in u128.
u128 binom(u128 n, unsigned k);

// Vertex of G(n,3,1): a 3-element subset of {1..n}, stored sorted.
struct Vertex {
    std::array<int, 3> e{0, 0, 0};

    Vertex() = default;
    Vertex(int a, int b, int c);

    bool operator==(const Vertex&) const = default;
    bool valid_for(int n) const;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

// Edge iff the two triples share exactly one element.
bool adjacent(const Vertex& u, const Vertex& w);
int intersection_size(const Vertex& u, const Vertex& w);

struct GraphParams {
    long long n = 0;
    u64 vertex_count = 0;   // C(n,3)
    u64 degree = 0;         // 3*C(n-3,2)
    u128 total_edges = 0;   // (3/2)*C(n-3,2)*C(n,3)
};

// Throws std::invalid_argument for n < 3. Exact integer arithmetic, valid
// well past n = 10^6.
GraphParams make_params(long long n);

// Colex rank: C(e3-1,3) + C(e2-1,2) + C(e1-1,1), a bijection between the
// triples over {1..n} and [0, C(n,3)).
u64 colex_rank(const Vertex& v, long long n);
Vertex colex_unrank(u64 r, long long n);

// All d_n neighbours of v, in colex order.
std::vector<Vertex> neighbors(const GraphParams& p, const Vertex& v);

// Subset of V_n over a fixed ambient n, backed by a bit vector indexed by
// colex rank. Treated as immutable once filled.
class VertexSet {
  public:
    explicit VertexSet(const GraphParams& p);
    VertexSet(const GraphParams& p, const std::vector<Vertex>& vs);

    long long n() const { return n_; }
    u64 capacity() const { return capacity_; }
    u64 size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool contains(u64 rank) const;
    bool contains(const Vertex& v) const;
    void insert(u64 rank);
    void insert(const Vertex& v);
    void erase(u64 rank);

    // Members in colex order.
    std::vector<Vertex> vertices() const;
    std::vector<u64> ranks() const;

    bool operator==(const VertexSet&) const = default;

  private:
    long long n_ = 0;
    u64 capacity_ = 0;
    u64 size_ = 0;
    std::vector<u64> bits_;
};

// Reference path: O(|W|^2) pairwise scan. `threads` splits the outer loop;
// the total is an integer sum, so the result does not depend on the split.
u64 count_induced_edges_pairwise(const GraphParams& p, const VertexSet& w,
                                 int threads = 1);

// Fast path: group members by shared element and by shared pair, then
// edges = sum_i C(c_i,2) - 2 * sum_{ij} C(c_ij,2). Must agree with the
// pairwise reference (tested).
u64 count_induced_edges(const GraphParams& p, const VertexSet& w);

// Set-file text format: one "i j k" line per vertex, '#' starts a comment.
VertexSet read_vertex_set(std::istream& in, const GraphParams& p);
void write_vertex_set(std::ostream& out, const VertexSet& w);

}  // namespace g31

#endif

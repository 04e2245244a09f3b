#ifndef G31_INDEPENDENCE_HPP
#define G31_INDEPENDENCE_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "g31/graph_core.hpp"

namespace g31 {

bool is_independent(const GraphParams& p, const VertexSet& w);

enum class SearchStatus { exact, budget_exceeded };

struct ExactResult {
    u64 value = 0;
    VertexSet witness;
    SearchStatus status = SearchStatus::exact;
    u64 nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

// Exact maximum independent set by branch and bound over colex-ordered
// vertices with a greedy clique-cover bound. Deterministic: the reported
// witness is the lexicographically smallest optimum (by colex ranks).
// On budget exhaustion, value is the best lower bound found so far.
ExactResult max_independent_set(const GraphParams& p,
                                std::chrono::duration<double> budget =
                                    std::chrono::duration<double>(3600.0));

enum class AlphaMode { exact, asymptotic };

struct AlphaValue {
    u64 value = 0;
    AlphaMode mode = AlphaMode::exact;
};

// mode=exact serves the cached search results for small n (throws when no
// cached value exists); mode=asymptotic returns the proxy alpha_n ~ n.
AlphaValue alpha_reference(long long n, AlphaMode mode);
std::optional<u64> cached_alpha(long long n);

enum class BlockKind { type1, type2, type3 };

struct Block {
    BlockKind kind;
    std::vector<Vertex> vertices;
    std::vector<int> support;            // union of elements, sorted
    std::array<int, 2> pair_witness{};   // type1 only
    std::array<int, 4> envelope_witness{};  // type2 only
};

struct Decomposition {
    std::vector<Block> blocks;
};

// Splits an independent set into type-1 blocks (>=3 vertices through a
// common pair), type-2 blocks (>=2 vertices inside a 4-element envelope)
// and one type-3 block of pairwise-disjoint leftovers, with pairwise
// disjoint supports. Verified before returning; throws std::runtime_error
// naming the offending vertices if no such decomposition exists (which
// would falsify the structural claim the types come from) and
// std::invalid_argument if the input is not independent.
Decomposition decompose_independent(const GraphParams& p, const VertexSet& w);

// Checks every Decomposition invariant against the original set.
void verify_decomposition(const GraphParams& p, const VertexSet& w,
                          const Decomposition& d);

}  // namespace g31

#endif

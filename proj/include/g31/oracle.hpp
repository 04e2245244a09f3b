#ifndef G31_ORACLE_HPP
#define G31_ORACLE_HPP

#include <chrono>
#include <vector>

#include "g31/graph_core.hpp"
#include "g31/independence.hpp"

namespace g31 {

// Exact minimum number of induced edges over all l-vertex subsets, by
// branch and bound over colex-ordered vertices. Pruning uses the partial
// count plus the Turan bound on the remaining demand. When the complement
// is smaller the search runs on the removed set D: by regularity,
// r(V \ D) = |E_n| - |D| * d_n + |E(D)|, so minimizing over D of size
// |V| - l is the same problem. Witness is the lexicographically smallest
// optimal set (colex ranks); on budget exhaustion the best found value is
// returned as an upper bound with status budget_exceeded.
enum class SearchSide { automatic, direct, complement };

ExactResult exact_min_edges(const GraphParams& p, u64 l,
                            std::chrono::duration<double> budget =
                                std::chrono::duration<double>(3600.0),
                            SearchSide side = SearchSide::automatic);

// All maximal independent sets of size >= min_size (Bron-Kerbosch with
// pivoting on the complement graph), in deterministic colex-lexicographic
// order. Intended for n <= 7.
std::vector<VertexSet> enumerate_maximal_independent_sets(
    const GraphParams& p, u64 min_size);

}  // namespace g31

#endif

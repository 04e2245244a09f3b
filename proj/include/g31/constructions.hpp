#ifndef G31_CONSTRUCTIONS_HPP
#define G31_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "g31/graph_core.hpp"

namespace g31 {

// Raised when a construction's parameters leave its validity domain.
struct construction_undefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Regime-1 family: x third-elements, each completed by one of floor(y/2)
// disjoint pairs drawn past x. Size x*floor(y/2), edges
// floor(y/2)*x*(floor(y/2)-1)/2.
struct C1Params {
    long long a = 0;  // floor(n^2/l)
    long long b = 0;  // floor(ln a)
    long long x = 0;  // n - floor(n/b)
    long long y = 0;  // floor(2l/x)
};

// Regime-2 family: a star-like part W_1 = {1,2,i} plus cliques W_2 hanging
// off each i. M = floor(c*k), k = floor(n/4), J = floor((n-M)/2).
struct C2Params {
    double c = 0.0;
    long long k = 0;
    long long M = 0;
    long long J = 0;
};

using Matching = std::vector<std::pair<int, int>>;

// Regime-3 family: k full blocks W^(i) over pairwise-disjoint perfect
// matchings of A2, plus a colex-prefix remainder U from block k+1.
struct C3Params {
    long long a = 0;         // |A1|; A1 = {1..a}
    long long m_half = 0;    // |A2|/2 = floor(n/4)
    u64 w = 0;               // block size a*m_half
    u64 k = 0;               // number of full blocks
    u64 remainder = 0;       // l - k*w, drawn from block k+1
    u64 cross_degree = 0;    // (m_half-2) + 2*(a-1), between two full blocks
    std::vector<Matching> matchings;  // k+1 pairwise-disjoint matchings of A2
    // predicted per-piece edge tallies
    u128 within_blocks = 0;
    u128 cross_blocks = 0;
    u128 u_incident = 0;     // U-to-blocks plus edges inside U
};

struct ConstructionReport {
    int regime = 0;
    long long n = 0;
    u64 l_requested = 0;
    std::variant<C1Params, C2Params, C3Params> params;
    u64 size_predicted = 0;
    u128 edges_predicted = 0;
    std::optional<VertexSet> set;       // absent above max_materialize
    std::optional<u64> size_actual;
    std::optional<u64> edges_actual;
    double asymptotic_target = 0.0;     // the regime's target expression
    double target_ratio = 0.0;          // edges_predicted / target
};

inline constexpr u64 kDefaultMaxMaterialize = 1000000;

// Parameter derivation exposed separately from the builders so validity
// can be probed without building. Throws construction_undefined.
C1Params c1_params(long long n, u64 l);
C2Params c2_params(long long n, double c);
C3Params c3_params(long long n, u64 l);

ConstructionReport build_c1(long long n, u64 l,
                            u64 max_materialize = kDefaultMaxMaterialize,
                            bool trim_to_l = false);
ConstructionReport build_c2(long long n, double c,
                            u64 max_materialize = kDefaultMaxMaterialize);
ConstructionReport build_c3(long long n, u64 l,
                            u64 max_materialize = kDefaultMaxMaterialize);

// Default regime-2 parameter c_n = 4 - 1/ln n.
double default_c2_parameter(long long n);

// Near-4 root of c(4-c)k^2/2 = l with k = floor(n/4):
// c = 2 + sqrt(4 - 2l/k^2). Throws construction_undefined when l > 2k^2.
double solve_c2_parameter(long long n, u64 l);

// t pairwise-disjoint perfect matchings of the complete graph on {1..m}
// (m even), by the circle method with element m fixed. t <= m-1.
std::vector<Matching> one_factorization(long long m, long long t);

}  // namespace g31

#endif

#ifndef G31_BOUNDS_HPP
#define G31_BOUNDS_HPP

#include <string>

#include "g31/graph_core.hpp"
#include "g31/independence.hpp"

namespace g31 {

// Complement-Turan bound: any m vertices of a graph with independence
// number <= alpha induce at least m^2/(2 alpha) - m/2 edges. Returned as
// max(0, ceil(m*(m-alpha)/(2 alpha))).
u128 turan_lb(u128 m, u128 alpha);

struct Regime3Bounds {
    u128 lower_bound;    // ceil(l^2/alpha); asymptotic-only rigor
    double upper_target; // 5 l^2 / alpha
};

Regime3Bounds regime3_bounds(u128 l, u128 alpha);

struct BoundReport {
    long long n = 0;
    u64 l = 0;
    u64 alpha_used = 0;
    AlphaMode alpha_mode = AlphaMode::exact;
    u128 lower_bound = 0;
    std::string formula_id;
    double asymptotic_target = 0.0;
    bool rigorous = false;
};

// Edge-deficit chain: removing the complement W_1 of size |V_n| - l kills
// at most d_n*|W_1| edges, refunded by the Turan estimate of |E(W_1)|.
// lower_bound = max(0, |E_n| - d_n*(|V_n|-l) + turan_lb(|V_n|-l, alpha)).
BoundReport regime4_lb(const GraphParams& p, u64 l, u64 alpha, AlphaMode mode);

struct AsymptoticTargets {
    double half_turan;     // l^2/(2n)
    double regime3;        // l^2/n
    double regime3_upper;  // 5 l^2/n
    double regime4;        // n^5*(1/8 - c/4 + c^2/72), clamped at 0
    double c;              // 1 - l/C(n,3)
};

AsymptoticTargets asymptotic_targets(long long n, u64 l);

}  // namespace g31

#endif

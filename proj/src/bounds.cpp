#include "g31/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace g31 {

u128 turan_lb(u128 m, u128 alpha) {
    if (alpha == 0) throw std::invalid_argument("turan_lb: alpha must be >= 1");
    if (m <= alpha) return 0;
    u128 num = m * (m - alpha);
    u128 den = 2 * alpha;
    return (num + den - 1) / den;
}

Regime3Bounds regime3_bounds(u128 l, u128 alpha) {
    if (alpha == 0 || l == 0)
        throw std::invalid_argument("regime3_bounds: l, alpha must be >= 1");
    u128 lb = (l * l + alpha - 1) / alpha;
    double ld = double(l);
    return {lb, 5.0 * ld * ld / double(alpha)};
}

BoundReport regime4_lb(const GraphParams& p, u64 l, u64 alpha, AlphaMode mode) {
    if (l > p.vertex_count)
        throw std::invalid_argument("regime4_lb: l exceeds |V_n|");
    u64 removed = p.vertex_count - l;
    i128 lb = i128(p.total_edges) - i128(u128(p.degree) * removed) +
              i128(turan_lb(removed, alpha));
    BoundReport r;
    r.n = p.n;
    r.l = l;
    r.alpha_used = alpha;
    r.alpha_mode = mode;
    r.lower_bound = lb > 0 ? u128(lb) : 0;
    r.formula_id = "regime4_edge_deficit";
    r.asymptotic_target = asymptotic_targets(p.n, l).regime4;
    r.rigorous = (mode == AlphaMode::exact);
    return r;
}

AsymptoticTargets asymptotic_targets(long long n, u64 l) {
    if (n < 3) throw std::invalid_argument("asymptotic_targets: n must be >= 3");
    double total = double(binom(u128(n), 3));
    if (double(l) > total)
        throw std::invalid_argument("asymptotic_targets: l exceeds C(n,3)");
    double ld = double(l);
    double nd = double(n);
    double c = 1.0 - ld / total;
    double poly = 1.0 / 8.0 - c / 4.0 + c * c / 72.0;
    AsymptoticTargets t;
    t.half_turan = ld * ld / (2.0 * nd);
    t.regime3 = ld * ld / nd;
    t.regime3_upper = 5.0 * ld * ld / nd;
    t.regime4 = std::max(0.0, std::pow(nd, 5) * poly);
    t.c = c;
    return t;
}

}  // namespace g31

#include "g31/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "g31/bounds.hpp"

namespace g31 {

namespace {

u128 choose2(u128 c) { return c * (c > 0 ? c - 1 : 0) / 2; }

// A VertexSet carries one bit per colex rank of the ambient graph, so
// materialization is also gated on the ambient size (2^31 ranks = 256 MB).
bool should_materialize(const GraphParams& gp, u64 size, u64 max_materialize) {
    return size <= max_materialize && gp.vertex_count <= (u64(1) << 31);
}

void check_report(ConstructionReport& r, u64 max_materialize,
                  const std::vector<Vertex>& vertices, const GraphParams& gp) {
    if (should_materialize(gp, r.size_predicted, max_materialize)) {
        VertexSet set(gp, vertices);
        r.size_actual = set.size();
        r.edges_actual = count_induced_edges(gp, set);
        if (*r.size_actual != r.size_predicted)
            throw std::logic_error(
                "construction invariant violated: predicted size " +
                std::to_string(r.size_predicted) + " but materialized " +
                std::to_string(*r.size_actual));
        if (u128(*r.edges_actual) != r.edges_predicted)
            throw std::logic_error(
                "construction invariant violated: predicted edges " +
                to_string(r.edges_predicted) + " but counted " +
                std::to_string(*r.edges_actual));
        r.set = std::move(set);
    }
}

void finish_targets(ConstructionReport& r) {
    AsymptoticTargets t = asymptotic_targets(r.n, r.size_predicted);
    r.asymptotic_target = (r.regime == 3) ? t.regime3_upper : t.half_turan;
    r.target_ratio = r.asymptotic_target > 0.0
                         ? double(r.edges_predicted) / r.asymptotic_target
                         : 0.0;
}

}  // namespace

C1Params c1_params(long long n, u64 l) {
    if (n < 3 || l == 0)
        throw construction_undefined("c1: need n >= 3 and l >= 1");
    C1Params p;
    p.a = (long long)(u128(n) * u128(n) / l);
    if (p.a < 1) throw construction_undefined("c1: l exceeds n^2, a = 0");
    p.b = (long long)std::floor(std::log((double)p.a));
    if (p.b < 1)
        throw construction_undefined("c1: a = " + std::to_string(p.a) +
                                     " <= 2 forces b = 0");
    p.x = n - n / p.b;
    if (p.x < 1) throw construction_undefined("c1: x < 1");
    p.y = (long long)(2 * u128(l) / u128(p.x));
    long long half = p.y / 2;
    if (half < 1) throw construction_undefined("c1: floor(y/2) = 0, empty set");
    if (p.x + 2 * half > n)
        throw construction_undefined("c1: ground elements x + 2*floor(y/2) = " +
                                     std::to_string(p.x + 2 * half) +
                                     " exceed n");
    return p;
}

ConstructionReport build_c1(long long n, u64 l, u64 max_materialize,
                            bool trim_to_l) {
    C1Params p = c1_params(n, l);
    long long h = p.y / 2;

    ConstructionReport r;
    r.regime = 1;
    r.n = n;
    r.l_requested = l;
    r.params = p;
    r.size_predicted = u64(p.x) * u64(h);

    // Within the family only vertices sharing the same third element i are
    // adjacent, so the set splits into x cliques of size floor(y/2).
    long long layers_cut = 0, partial_cut = 0;
    if (trim_to_l && r.size_predicted > l) {
        u64 d = r.size_predicted - l;
        layers_cut = (long long)(d / u64(p.x));
        partial_cut = (long long)(d % u64(p.x));
        r.size_predicted = l;
    }
    u128 edges = u128(partial_cut) * choose2(u128(h - layers_cut - 1)) +
                 u128(p.x - partial_cut) * choose2(u128(h - layers_cut));
    r.edges_predicted = edges;

    GraphParams gp = make_params(n);
    std::vector<Vertex> vs;
    if (should_materialize(gp, r.size_predicted, max_materialize)) {
        vs.reserve(size_t(r.size_predicted));
        for (long long j = 1; j <= h - layers_cut; ++j) {
            long long imax =
                (j == h - layers_cut) ? p.x - partial_cut : p.x;
            for (long long i = 1; i <= imax; ++i)
                vs.push_back(Vertex(int(p.x + 2 * (j - 1) + 1),
                                    int(p.x + 2 * (j - 1) + 2), int(i)));
        }
    }
    check_report(r, max_materialize, vs, gp);
    finish_targets(r);
    return r;
}

double default_c2_parameter(long long n) {
    if (n < 3) throw construction_undefined("c2: n must be >= 3");
    return 4.0 - 1.0 / std::log((double)n);
}

C2Params c2_params(long long n, double c) {
    if (n < 4) throw construction_undefined("c2: n must be >= 4");
    C2Params p;
    p.c = c;
    p.k = n / 4;
    p.M = (long long)std::floor((long double)c * (long double)p.k);
    if (p.M < 3)
        throw construction_undefined("c2: M = floor(c*k) = " +
                                     std::to_string(p.M) + " < 3, W_1 empty");
    if (p.M > n) throw construction_undefined("c2: M exceeds n");
    p.J = (n - p.M) / 2;
    return p;
}

ConstructionReport build_c2(long long n, double c, u64 max_materialize) {
    C2Params p = c2_params(n, c);
    ConstructionReport r;
    r.regime = 2;
    r.n = n;
    r.params = p;
    u64 m2 = u64(p.M - 2);
    r.size_predicted = m2 * u64(1 + p.J);
    r.l_requested = r.size_predicted;
    // one W_1 neighbour per W_2 vertex, plus a J-clique per first element
    r.edges_predicted =
        u128(m2) * u128(p.J) + u128(m2) * choose2(u128(p.J));

    GraphParams gp = make_params(n);
    std::vector<Vertex> vs;
    if (should_materialize(gp, r.size_predicted, max_materialize)) {
        vs.reserve(size_t(r.size_predicted));
        for (long long i = 3; i <= p.M; ++i) vs.push_back(Vertex(1, 2, int(i)));
        for (long long i = 3; i <= p.M; ++i)
            for (long long j = 1; j <= p.J; ++j)
                vs.push_back(Vertex(int(i), int(p.M + 2 * (j - 1) + 1),
                                    int(p.M + 2 * (j - 1) + 2)));
    }
    check_report(r, max_materialize, vs, gp);
    finish_targets(r);
    return r;
}

double solve_c2_parameter(long long n, u64 l) {
    long long k = n / 4;
    if (k < 1) throw construction_undefined("solve_c2: floor(n/4) = 0");
    double k2 = double(k) * double(k);
    if (double(l) > 2.0 * k2)
        throw construction_undefined(
            "solve_c2: cardinality " + std::to_string(l) +
            " unreachable, family maximum is 2*floor(n/4)^2 = " +
            std::to_string((long long)(2.0 * k2)));
    double disc = 4.0 - 2.0 * double(l) / k2;
    if (disc < 0) disc = 0;  // guard float dust at the boundary
    return 2.0 + std::sqrt(disc);
}

std::vector<Matching> one_factorization(long long m, long long t) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("one_factorization: m must be even, >= 2");
    if (t < 1 || t > m - 1)
        throw std::invalid_argument(
            "one_factorization: need 1 <= t <= m-1 (K_m has only m-1 "
            "disjoint perfect matchings)");
    std::vector<Matching> out;
    out.reserve(size_t(t));
    long long ring = m - 1;
    for (long long r = 0; r < t; ++r) {
        Matching match;
        match.reserve(size_t(m / 2));
        match.emplace_back(int(r % ring + 1), int(m));
        for (long long i = 1; i <= m / 2 - 1; ++i) {
            int u = int((r + i) % ring + 1);
            int v = int(((r - i) % ring + ring) % ring + 1);
            if (u > v) std::swap(u, v);
            match.emplace_back(u, v);
        }
        std::sort(match.begin(), match.end());
        out.push_back(std::move(match));
    }
    return out;
}

C3Params c3_params(long long n, u64 l) {
    if (n < 5) throw construction_undefined("c3: n must be >= 5");
    C3Params p;
    p.m_half = n / 4;
    p.a = n - 2 * p.m_half;  // prefix length per residue of n mod 4
    if (p.m_half < 1) throw construction_undefined("c3: A_2 empty");
    p.w = u64(p.a) * u64(p.m_half);
    p.k = l / p.w;
    p.remainder = l - p.k * p.w;
    long long a2 = 2 * p.m_half;
    if ((long long)(p.k + 1) > a2 - 1)
        throw construction_undefined(
            "c3: k+1 = " + std::to_string(p.k + 1) +
            " matchings needed but |A_2|-1 = " + std::to_string(a2 - 1));
    p.cross_degree =
        p.m_half >= 2 ? u64(p.m_half - 2) + 2 * u64(p.a - 1) : 0;

    p.within_blocks = u128(p.k) * u128(p.a) * choose2(u128(p.m_half));
    p.cross_blocks = choose2(u128(p.k)) * u128(p.w) * u128(p.cross_degree);
    u128 u_to_blocks = u128(p.remainder) * u128(p.k) * u128(p.cross_degree);
    // U is a colex prefix of block k+1: q full pair-groups of a vertices
    // plus rem_x extras, and same-first-element vertices form cliques
    u64 q = p.remainder / u64(p.a);
    u64 rem_x = p.remainder % u64(p.a);
    u128 u_within =
        u128(rem_x) * choose2(u128(q) + 1) + u128(u64(p.a) - rem_x) * choose2(u128(q));
    p.u_incident = u_to_blocks + u_within;

    auto raw = one_factorization(a2, (long long)(p.k + 1));
    p.matchings.reserve(raw.size());
    for (const Matching& mm : raw) {
        Matching mapped;
        mapped.reserve(mm.size());
        for (auto [u, v] : mm)
            mapped.emplace_back(int(p.a + u), int(p.a + v));
        // colex order of the resulting vertices: by (z, y)
        std::sort(mapped.begin(), mapped.end(), [](auto& l_, auto& r_) {
            return std::pair(l_.second, l_.first) < std::pair(r_.second, r_.first);
        });
        p.matchings.push_back(std::move(mapped));
    }
    return p;
}

ConstructionReport build_c3(long long n, u64 l, u64 max_materialize) {
    C3Params p = c3_params(n, l);
    ConstructionReport r;
    r.regime = 3;
    r.n = n;
    r.l_requested = l;
    r.size_predicted = l;
    r.edges_predicted = p.within_blocks + p.cross_blocks + p.u_incident;
    r.params = p;

    GraphParams gp = make_params(n);
    std::vector<Vertex> vs;
    if (should_materialize(gp, l, max_materialize)) {
        vs.reserve(size_t(l));
        for (u64 i = 0; i < p.k; ++i)
            for (auto [y, z] : p.matchings[size_t(i)])
                for (long long x = 1; x <= p.a; ++x)
                    vs.push_back(Vertex(int(x), y, z));
        u64 left = p.remainder;
        for (auto [y, z] : p.matchings[size_t(p.k)]) {
            if (left == 0) break;
            for (long long x = 1; x <= p.a && left > 0; ++x, --left)
                vs.push_back(Vertex(int(x), y, z));
        }
    }
    check_report(r, max_materialize, vs, gp);
    finish_targets(r);
    return r;
}

}  // namespace g31

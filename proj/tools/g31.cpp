#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "g31/bounds.hpp"
#include "g31/constructions.hpp"
#include "g31/graph_core.hpp"
#include "g31/independence.hpp"
#include "g31/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace g31;

namespace {

json wide(u128 v) {
    if (v <= u128(UINT64_MAX)) return json(u64(v));
    return json(to_string(v));  // too big for a JSON integer, emit decimal text
}

// fixed 6-significant-digit float policy for reproducible output
double fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt6s(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

json params_json(const GraphParams& p) {
    return json{{"n", p.n},
                {"vertices", p.vertex_count},
                {"degree", p.degree},
                {"edges", wide(p.total_edges)}};
}

json vertex_json(const Vertex& v) { return json::array({v.e[0], v.e[1], v.e[2]}); }

json set_json(const VertexSet& s) {
    json a = json::array();
    for (const Vertex& v : s.vertices()) a.push_back(vertex_json(v));
    return a;
}

json construction_json(const ConstructionReport& r) {
    json p;
    if (auto* c1 = std::get_if<C1Params>(&r.params)) {
        p = {{"a", c1->a}, {"b", c1->b}, {"x", c1->x}, {"y", c1->y}};
    } else if (auto* c2 = std::get_if<C2Params>(&r.params)) {
        p = {{"c", fmt6(c2->c)}, {"k", c2->k}, {"M", c2->M}, {"J", c2->J}};
    } else if (auto* c3 = std::get_if<C3Params>(&r.params)) {
        p = {{"a", c3->a},
             {"m_half", c3->m_half},
             {"w", c3->w},
             {"k", c3->k},
             {"remainder", c3->remainder},
             {"cross_degree", c3->cross_degree},
             {"within_blocks", wide(c3->within_blocks)},
             {"cross_blocks", wide(c3->cross_blocks)},
             {"u_incident", wide(c3->u_incident)},
             {"matchings", c3->matchings}};
    }
    json out{{"regime", r.regime},
             {"n", r.n},
             {"l", r.l_requested},
             {"params", p},
             {"size_predicted", r.size_predicted},
             {"edges_formula", wide(r.edges_predicted)}};
    out["size_actual"] = r.size_actual ? json(*r.size_actual) : json();
    out["edges_actual"] = r.edges_actual ? json(*r.edges_actual) : json();
    out["target"] = fmt6(r.asymptotic_target);
    out["ratio"] = fmt6(r.target_ratio);
    return out;
}

long long env_threads() {
    const char* e = std::getenv("G31_THREADS");
    if (!e) return 1;
    long long t = std::atoll(e);
    return t >= 1 ? t : 1;
}

u64 parse_l_expr(const std::string& expr, long long n) {
    // accepted forms: "n^B" and "A*n^B" with literal A, B
    double coeff = 1.0;
    std::string rest = expr;
    size_t star = expr.find("*n^");
    if (star != std::string::npos) {
        coeff = std::strtod(expr.substr(0, star).c_str(), nullptr);
        rest = expr.substr(star + 1);
    }
    if (rest.rfind("n^", 0) != 0)
        throw CLI::ValidationError("--l-expr", "expected n^B or A*n^B");
    double exp = std::strtod(rest.substr(2).c_str(), nullptr);
    double v = coeff * std::pow(double(n), exp);
    if (v < 0 || v > 1.8e19)
        throw CLI::ValidationError("--l-expr", "l out of range for n=" +
                                                   std::to_string(n));
    return u64(v);
}

int run(int argc, char** argv) {
    CLI::App app{"distance graph G(n,3,1): constructions, bounds, exact oracle"};
    app.require_subcommand(1);
    long long threads = env_threads();
    app.add_option("--threads", threads, "worker cap for direct edge counting");

    // params
    auto* sc_params = app.add_subcommand("params", "derived graph parameters");
    long long pn = 0;
    sc_params->add_option("--n", pn, "ground set size")->required();

    // construct
    auto* sc_con = app.add_subcommand("construct", "build an upper-bound set");
    int regime = 1;
    long long cn = 0;
    u64 cl = 0;
    double c2c = -1.0;
    std::string emit_set;
    bool verify = false, trim = false;
    u64 max_mat = kDefaultMaxMaterialize;
    sc_con->add_option("--regime", regime, "1|2|3")->required()
        ->check(CLI::Range(1, 3));
    sc_con->add_option("--n", cn)->required();
    sc_con->add_option("--l", cl, "target cardinality (regimes 1 and 3)");
    sc_con->add_option("--c", c2c, "regime-2 parameter override in (0,4)");
    sc_con->add_option("--emit-set", emit_set, "write the set file here");
    sc_con->add_flag("--verify", verify,
                     "recount edges pairwise and fail on any mismatch");
    sc_con->add_flag("--trim", trim, "trim regime-1 sets down to exactly l");
    sc_con->add_option("--max-materialize", max_mat);

    // bounds
    auto* sc_b = app.add_subcommand("bounds", "lower bounds and targets");
    long long bn = 0;
    u64 bl = 0;
    std::string alpha_mode = "exact", bregime = "regime4";
    sc_b->add_option("--n", bn)->required();
    sc_b->add_option("--l", bl)->required();
    sc_b->add_option("--alpha-mode", alpha_mode)
        ->check(CLI::IsMember({"exact", "asymptotic"}));
    sc_b->add_option("--regime", bregime)
        ->check(CLI::IsMember({"turan", "regime3", "regime4", "targets"}));

    // oracle
    auto* sc_o = app.add_subcommand("oracle", "exact search at small n");
    auto* sc_ome = sc_o->add_subcommand("min-edges", "exact r(l)");
    long long on = 0;
    u64 ol = 0;
    double budget = 300.0;
    sc_ome->add_option("--n", on)->required();
    sc_ome->add_option("--l", ol)->required();
    sc_ome->add_option("--budget", budget, "seconds");
    auto* sc_oa = sc_o->add_subcommand("alpha", "exact independence number");
    long long an = 0, amax = 0;
    double abudget = 300.0;
    sc_oa->add_option("--n", an);
    sc_oa->add_option("--max-n", amax, "emit TSV rows for n = 3..max-n");
    sc_oa->add_option("--budget", abudget, "seconds per n");
    auto* sc_oe = sc_o->add_subcommand("enumerate", "maximal independent sets");
    long long en = 0;
    u64 emin = 0;
    sc_oe->add_option("--n", en)->required();
    sc_oe->add_option("--min-size", emin);
    sc_o->require_subcommand(1);

    // sweep
    auto* sc_s = app.add_subcommand("sweep", "CSV ratio sweep over n");
    int sregime = 1;
    std::string n_list, l_expr;
    long long n_start = 0, n_count = 0;
    double n_factor = 10.0;
    u64 smax_mat = kDefaultMaxMaterialize;
    sc_s->add_option("--regime", sregime, "1|2|3")->required()
        ->check(CLI::Range(1, 3));
    sc_s->add_option("--n-list", n_list, "comma-separated n values");
    sc_s->add_option("--n-start", n_start, "geometric schedule start");
    sc_s->add_option("--n-factor", n_factor, "geometric schedule factor");
    sc_s->add_option("--n-count", n_count, "geometric schedule length");
    sc_s->add_option("--l-expr", l_expr, "n^B or A*n^B")->required();
    sc_s->add_option("--max-materialize", smax_mat);

    // decompose
    auto* sc_d = app.add_subcommand("decompose", "type-1/2/3 decomposition");
    std::string set_path;
    long long dn = 0;
    sc_d->add_option("--set", set_path, "set file")->required();
    sc_d->add_option("--n", dn, "ambient n (default: largest element seen)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11's own exit codes collapse to the documented contract:
        // 0 for --help, 1 for any argument error
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (*sc_params) {
        std::cout << params_json(make_params(pn)).dump() << "\n";
        return 0;
    }

    if (*sc_con) {
        ConstructionReport r;
        if (regime == 1) {
            r = build_c1(cn, cl, max_mat, trim);
        } else if (regime == 2) {
            double c = c2c > 0 ? c2c
                     : cl > 0  ? solve_c2_parameter(cn, cl)
                               : default_c2_parameter(cn);
            r = build_c2(cn, c, max_mat);
        } else {
            r = build_c3(cn, cl, max_mat);
        }
        if (verify) {
            if (!r.set) {
                std::cerr << "construct: --verify requires a materialized set "
                             "(size above --max-materialize)\n";
                return 1;
            }
            GraphParams gp = make_params(cn);
            u64 pairwise =
                count_induced_edges_pairwise(gp, *r.set, int(threads));
            if (u128(pairwise) != r.edges_predicted ||
                pairwise != *r.edges_actual) {
                std::cerr << "construct: verification FAILED: formula "
                          << to_string(r.edges_predicted) << " grouped "
                          << *r.edges_actual << " pairwise " << pairwise
                          << "\n";
                return 2;
            }
        }
        if (!emit_set.empty()) {
            if (!r.set) {
                std::cerr << "construct: set not materialized, nothing to emit\n";
                return 1;
            }
            std::ofstream out(emit_set);
            out << "# G(" << cn << ",3,1) regime-" << regime
                << " construction, size " << r.set->size() << "\n";
            write_vertex_set(out, *r.set);
        }
        std::cout << construction_json(r).dump() << "\n";
        return 0;
    }

    if (*sc_b) {
        AlphaMode mode = alpha_mode == "exact" ? AlphaMode::exact
                                               : AlphaMode::asymptotic;
        AlphaValue a = alpha_reference(bn, mode);
        json out{{"n", bn}, {"l", bl}, {"alpha", a.value},
                 {"alpha_mode", alpha_mode}};
        if (bregime == "turan") {
            out["formula"] = "turan";
            out["lower_bound"] = wide(turan_lb(bl, a.value));
            out["rigorous"] = (mode == AlphaMode::exact);
        } else if (bregime == "regime3") {
            auto r3 = regime3_bounds(bl, a.value);
            out["formula"] = "regime3";
            out["lower_bound"] = wide(r3.lower_bound);
            out["upper_target"] = fmt6(r3.upper_target);
            out["rigorous"] = false;  // valid only under the regime hypotheses
        } else if (bregime == "regime4") {
            BoundReport r = regime4_lb(make_params(bn), bl, a.value, mode);
            out["formula"] = r.formula_id;
            out["lower_bound"] = wide(r.lower_bound);
            out["target"] = fmt6(r.asymptotic_target);
            out["rigorous"] = r.rigorous;
        } else {
            AsymptoticTargets t = asymptotic_targets(bn, bl);
            out["half_turan"] = fmt6(t.half_turan);
            out["regime3"] = fmt6(t.regime3);
            out["regime3_upper"] = fmt6(t.regime3_upper);
            out["regime4"] = fmt6(t.regime4);
            out["c"] = fmt6(t.c);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (*sc_ome) {
        ExactResult r = exact_min_edges(make_params(on), ol,
                                        std::chrono::duration<double>(budget));
        json out{{"n", on},
                 {"l", ol},
                 {"value", r.value},
                 {"status", r.status == SearchStatus::exact ? "exact"
                                                            : "budget-exceeded"},
                 {"witness", set_json(r.witness)},
                 {"nodes", r.nodes_explored},
                 {"seconds", fmt6(r.elapsed_seconds)}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (*sc_oa) {
        if (amax >= 3) {
            for (long long n = 3; n <= amax; ++n) {
                ExactResult r = max_independent_set(
                    make_params(n), std::chrono::duration<double>(abudget));
                if (r.status != SearchStatus::exact) {
                    std::cerr << "alpha: budget exceeded at n=" << n << "\n";
                    return 1;
                }
                std::cout << n << "\t" << r.value << "\n";
            }
            return 0;
        }
        if (an < 3) {
            std::cerr << "alpha: need --n or --max-n\n";
            return 1;
        }
        ExactResult r = max_independent_set(
            make_params(an), std::chrono::duration<double>(abudget));
        json out{{"n", an},
                 {"alpha", r.value},
                 {"status", r.status == SearchStatus::exact ? "exact"
                                                            : "budget-exceeded"},
                 {"witness", set_json(r.witness)},
                 {"nodes", r.nodes_explored},
                 {"seconds", fmt6(r.elapsed_seconds)}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (*sc_oe) {
        auto sets = enumerate_maximal_independent_sets(make_params(en), emin);
        json out{{"n", en}, {"min_size", emin}, {"count", sets.size()}};
        json arr = json::array();
        for (const auto& s : sets) arr.push_back(set_json(s));
        out["sets"] = arr;
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (*sc_s) {
        std::vector<long long> ns;
        if (!n_list.empty()) {
            std::string cur;
            for (char ch : n_list + ",") {
                if (ch == ',') {
                    if (!cur.empty()) ns.push_back(std::atoll(cur.c_str()));
                    cur.clear();
                } else {
                    cur.push_back(ch);
                }
            }
        } else if (n_start >= 3 && n_count >= 1) {
            double v = double(n_start);
            for (long long i = 0; i < n_count; ++i, v *= n_factor)
                ns.push_back((long long)v);
        } else {
            std::cerr << "sweep: need --n-list or --n-start/--n-count\n";
            return 1;
        }
        std::printf(
            "n,l,regime,size_actual,edges_formula,edges_actual,lb_turan,"
            "lb_regime4,target,ratio\n");
        for (long long n : ns) {
            u64 l = parse_l_expr(l_expr, n);
            ConstructionReport r;
            if (sregime == 1)
                r = build_c1(n, l, smax_mat);
            else if (sregime == 2)
                r = build_c2(n, solve_c2_parameter(n, l), smax_mat);
            else
                r = build_c3(n, l, smax_mat);
            GraphParams gp = make_params(n);
            u64 size = r.size_predicted;
            u128 lbt = turan_lb(size, u128(n));
            u128 lb4 = regime4_lb(gp, size, u64(n), AlphaMode::asymptotic)
                           .lower_bound;
            std::printf("%lld,%llu,%d,%llu,%s,%s,%s,%s,%s,%s\n", n,
                        (unsigned long long)l, sregime,
                        (unsigned long long)size,
                        to_string(r.edges_predicted).c_str(),
                        r.edges_actual ? std::to_string(*r.edges_actual).c_str()
                                       : "",
                        to_string(lbt).c_str(), to_string(lb4).c_str(),
                        fmt6s(r.asymptotic_target).c_str(),
                        fmt6s(r.target_ratio).c_str());
        }
        return 0;
    }

    if (*sc_d) {
        std::ifstream in(set_path);
        if (!in) {
            std::cerr << "decompose: cannot open " << set_path << "\n";
            return 1;
        }
        if (dn < 3) {
            // first pass just to find the ambient n
            std::ifstream probe(set_path);
            std::string line;
            while (std::getline(probe, line)) {
                size_t hash = line.find('#');
                if (hash != std::string::npos) line.resize(hash);
                std::istringstream ls(line);
                int x;
                while (ls >> x) dn = std::max(dn, (long long)x);
            }
            if (dn < 3) dn = 3;
        }
        GraphParams gp = make_params(dn);
        VertexSet w = read_vertex_set(in, gp);
        Decomposition d = decompose_independent(gp, w);
        json blocks = json::array();
        for (const Block& b : d.blocks) {
            json jb;
            jb["kind"] = b.kind == BlockKind::type1   ? "type1"
                         : b.kind == BlockKind::type2 ? "type2"
                                                      : "type3";
            if (b.kind == BlockKind::type1)
                jb["pair"] = json::array({b.pair_witness[0], b.pair_witness[1]});
            if (b.kind == BlockKind::type2)
                jb["envelope"] =
                    json::array({b.envelope_witness[0], b.envelope_witness[1],
                                 b.envelope_witness[2], b.envelope_witness[3]});
            json vs = json::array();
            for (const Vertex& v : b.vertices) vs.push_back(vertex_json(v));
            jb["vertices"] = vs;
            jb["support"] = b.support;
            blocks.push_back(jb);
        }
        json out{{"n", dn}, {"size", w.size()}, {"blocks", blocks}};
        std::cout << out.dump() << "\n";
        return 0;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const construction_undefined& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

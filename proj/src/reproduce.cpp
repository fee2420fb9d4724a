// Reproduction tables: every closed form in the predict module is checked
// against the exact solver or against a verified construction, and each
// checked fact becomes one CSV row with its evidence kind spelled out.

#include "rvc/reproduce.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rvc/digraph.hpp"
#include "rvc/families.hpp"
#include "rvc/predict.hpp"
#include "rvc/solver.hpp"
#include "rvc/verify.hpp"

namespace rvc {
namespace {

using steady = std::chrono::steady_clock;

long long ms_since(steady::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(steady::now() - t0).count();
}

SolveOptions solve_options(const ReproduceOptions& opts) {
    SolveOptions s;
    s.workers = opts.threads;
    s.time_limit = opts.time_limit;
    return s;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string pred_repr(const Prediction& p) {
    switch (p.form) {
        case PredictionForm::exact:
            return std::to_string(p.lo);
        case PredictionForm::conditional:
            return std::to_string(p.lo) + " (" + p.caveat + ")";
        case PredictionForm::interval:
            return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
        case PredictionForm::bounds:
            return "[" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "]";
        case PredictionForm::silent:
            return "none";
    }
    return "?";
}

Prediction exact_claim(Parameter parameter, int value, const std::string& citation) {
    Prediction p;
    p.parameter = parameter;
    p.form = PredictionForm::exact;
    p.lo = value;
    p.hi = value;
    p.citation = citation;
    return p;
}

// Runs the solver and compares the exact value against the prediction. An
// inconclusive solve is an honest failure row, never a silent pass.
TableRow solved_row(const ReproduceOptions& opts, const std::string& family,
                    const std::string& params, const Digraph& d, const Prediction& pred) {
    TableRow row;
    row.family = family;
    row.params = params;
    row.parameter = parameter_name(pred.parameter);
    row.predicted = pred_repr(pred);
    row.citation = pred.citation;
    auto t0 = steady::now();
    SolveResult res = compute(d, pred.parameter, solve_options(opts));
    row.ms = ms_since(t0);
    if (res.exact) {
        row.solver = std::to_string(res.value);
        row.evidence = "solver-exact";
        row.agree = pred.admits(res.value);
    } else {
        row.solver = "inconclusive[" + std::to_string(res.lower_bound) + "," +
                     std::to_string(res.upper_bound) + "]";
        row.evidence = "solver-bounds";
        row.agree = false;
    }
    return row;
}

// Verifies an explicit vertex colouring as the upper bound for a claimed
// value and records the matching lower bound. With squeeze the lower bound
// must meet the claim, making the row an exact-value proof.
TableRow vertex_construction_row(const std::string& family, const std::string& params,
                                 const Digraph& d, Parameter p, const VertexColouring& c,
                                 int claimed, int lower, const std::string& lower_note,
                                 const std::string& citation, bool squeeze) {
    TableRow row;
    row.family = family;
    row.params = params;
    row.parameter = parameter_name(p);
    row.predicted = std::to_string(claimed);
    row.citation = citation;
    row.evidence = "construction-verified";
    auto t0 = steady::now();
    VerifyResult v = (p == Parameter::srvc) ? is_srvc_colouring(d, c) : is_rvc_colouring(d, c);
    row.ms = ms_since(t0);
    if (v) {
        row.solver = "ub=" + std::to_string(c.K) + ";lb=" + std::to_string(lower) + "(" +
                     lower_note + ")";
        row.agree = c.K == claimed && (squeeze ? lower == claimed : lower <= claimed);
    } else {
        row.solver = "colouring invalid at pair (" + std::to_string(v.fail_u) + "," +
                     std::to_string(v.fail_v) + ")";
        row.agree = false;
    }
    return row;
}

TableRow arc_construction_row(const std::string& family, const std::string& params,
                              const Digraph& d, Parameter p, const ArcColouring& c, int claimed,
                              int lower, const std::string& lower_note,
                              const std::string& citation, bool squeeze) {
    TableRow row;
    row.family = family;
    row.params = params;
    row.parameter = parameter_name(p);
    row.predicted = std::to_string(claimed);
    row.citation = citation;
    row.evidence = "construction-verified";
    auto t0 = steady::now();
    VerifyResult v = (p == Parameter::src) ? is_src_colouring(d, c) : is_rc_colouring(d, c);
    row.ms = ms_since(t0);
    if (v) {
        row.solver = "ub=" + std::to_string(c.K) + ";lb=" + std::to_string(lower) + "(" +
                     lower_note + ")";
        row.agree = c.K == claimed && (squeeze ? lower == claimed : lower <= claimed);
    } else {
        row.solver = "colouring invalid at pair (" + std::to_string(v.fail_u) + "," +
                     std::to_string(v.fail_v) + ")";
        row.agree = false;
    }
    return row;
}

// Checks that a constructive colouring is valid for the parameter, with no
// claim about optimality.
TableRow validity_row(const std::string& family, const std::string& params, const Digraph& d,
                      Parameter p, const VertexColouring& c, const std::string& citation) {
    TableRow row;
    row.family = family;
    row.params = params;
    row.parameter = std::string(parameter_name(p)) + "-colouring";
    row.predicted = "valid with K=" + std::to_string(c.K);
    row.citation = citation;
    row.evidence = "construction-verified";
    auto t0 = steady::now();
    VerifyResult v = (p == Parameter::srvc) ? is_srvc_colouring(d, c) : is_rvc_colouring(d, c);
    row.ms = ms_since(t0);
    if (v) {
        row.solver = "valid";
        row.agree = true;
    } else {
        row.solver = "invalid at pair (" + std::to_string(v.fail_u) + "," +
                     std::to_string(v.fail_v) + ")";
        row.agree = false;
    }
    return row;
}

std::vector<TableRow> tag_bioriented(const ReproduceOptions& opts) {
    std::vector<TableRow> rows;
    for (int n = 2; n <= 10; ++n) {
        Digraph d = gen_bioriented_path(n);
        std::string params = "n=" + std::to_string(n);
        rows.push_back(solved_row(opts, "bioriented-path", params, d,
                                  predict_bioriented("path", Parameter::rvc, n)));
        rows.push_back(solved_row(opts, "bioriented-path", params, d,
                                  predict_bioriented("path", Parameter::srvc, n)));
    }
    for (int n = 3; n <= 13; ++n) {
        Digraph d = gen_bioriented_cycle(n);
        std::string params = "n=" + std::to_string(n);
        rows.push_back(solved_row(opts, "bioriented-cycle", params, d,
                                  predict_bioriented("cycle", Parameter::rvc, n)));
        rows.push_back(solved_row(opts, "bioriented-cycle", params, d,
                                  predict_bioriented("cycle", Parameter::srvc, n)));
    }
    // Beyond n = 13 the solver is out of its depth; the closed-form values
    // are reproduced as verified constructions plus the diameter lower bound.
    for (int n = 14; n <= 16; ++n) {
        Digraph d = gen_bioriented_cycle(n);
        std::string params = "n=" + std::to_string(n);
        int dm = diameter(d);
        Prediction pr = predict_bioriented("cycle", Parameter::rvc, n);
        Prediction ps = predict_bioriented("cycle", Parameter::srvc, n);
        rows.push_back(vertex_construction_row("bioriented-cycle", params, d, Parameter::rvc,
                                               bioriented_cycle_rvc_colouring(n), pr.value(),
                                               dm - 1, "diam-1", pr.citation, false));
        rows.push_back(vertex_construction_row("bioriented-cycle", params, d, Parameter::srvc,
                                               bioriented_cycle_srvc_colouring(n), ps.value(),
                                               dm - 1, "diam-1", ps.citation, false));
    }
    for (int n = 3; n <= 8; ++n) {
        Digraph d = gen_bioriented_wheel(n);
        std::string params = "rim=" + std::to_string(n);
        rows.push_back(solved_row(opts, "bioriented-wheel", params, d,
                                  predict_bioriented("wheel", Parameter::rvc, n)));
        rows.push_back(solved_row(opts, "bioriented-wheel", params, d,
                                  predict_bioriented("wheel", Parameter::srvc, n)));
    }
    for (int n = 2; n <= 8; ++n) {
        Digraph d = gen_bioriented_complete(n);
        std::string params = "n=" + std::to_string(n);
        rows.push_back(solved_row(opts, "bioriented-complete", params, d,
                                  predict_bioriented("complete", Parameter::rvc, n)));
        rows.push_back(solved_row(opts, "bioriented-complete", params, d,
                                  predict_bioriented("complete", Parameter::srvc, n)));
    }
    for (int n = 2; n <= 8; ++n) {
        Digraph d = gen_bioriented_star(n);
        std::string params = "leaves=" + std::to_string(n);
        rows.push_back(solved_row(opts, "bioriented-star", params, d,
                                  predict_bioriented("star", Parameter::rvc, n)));
        rows.push_back(solved_row(opts, "bioriented-star", params, d,
                                  predict_bioriented("star", Parameter::srvc, n)));
    }
    const std::vector<std::vector<int>> size_sets = {
        {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {1, 1, 1}, {1, 1, 2}, {1, 2, 3},
    };
    for (const auto& sizes : size_sets) {
        Digraph d = gen_bioriented_complete_multipartite(sizes);
        std::string params = "sizes=" + join_ints(sizes);
        int n = d.order();
        rows.push_back(solved_row(opts, "bioriented-multipartite", params, d,
                                  predict_bioriented("multipartite", Parameter::rvc, n, sizes)));
        rows.push_back(solved_row(opts, "bioriented-multipartite", params, d,
                                  predict_bioriented("multipartite", Parameter::srvc, n, sizes)));
    }
    return rows;
}

std::vector<TableRow> tag_directed_cycles(const ReproduceOptions& opts) {
    std::vector<TableRow> rows;
    for (int n = 3; n <= 9; ++n) {
        Digraph d = gen_directed_cycle(n);
        std::string params = "n=" + std::to_string(n);
        Prediction p = predict_directed_cycle(n);
        rows.push_back(solved_row(opts, "directed-cycle", params, d, p));
        Prediction q = p;
        q.parameter = Parameter::srvc;
        rows.push_back(solved_row(opts, "directed-cycle", params, d, q));
    }
    return rows;
}

std::vector<TableRow> tag_cycle_subdigraphs(const ReproduceOptions& opts) {
    std::vector<TableRow> rows;
    for (int n = 4; n <= 9; ++n) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> asym;
            for (int i = 0; i < n; ++i) {
                if (mask >> i & 1) asym.push_back(i);
            }
            Digraph d = gen_cycle_subdigraph(n, asym);
            CycleSubdigraphClass cls = classify_cycle_subdigraph(d);
            PredictionTriple t = predict_cycle_subdigraph(cls, n);
            std::string params = "n=" + std::to_string(n) + ";asym=" + join_ints(asym) +
                                 ";class=" + cycle_class_name(cls.kind);
            if (cls.seg_p >= 0) {
                params += ";segs=" + std::to_string(cls.seg_p) + "," +
                          std::to_string(cls.seg_p_prime);
            }
            rows.push_back(solved_row(opts, "cycle-subdigraph", params, d, t.rvc));
            rows.push_back(solved_row(opts, "cycle-subdigraph", params, d, t.srvc));
            if (n <= 6) {
                rows.push_back(solved_row(opts, "cycle-subdigraph", params, d, t.rc));
            }
        }
    }
    return rows;
}

std::vector<TableRow> tag_circulant(const ReproduceOptions& opts) {
    std::vector<TableRow> rows;
    for (int n = 6; n <= 12; ++n) {
        for (int k = 2; k <= n / 2 - 1; ++k) {
            Digraph d = gen_circulant_consecutive(n, k);
            PredictionTriple t = predict_circulant(n, k);
            std::string params = "n=" + std::to_string(n) + ";k=" + std::to_string(k);
            rows.push_back(solved_row(opts, "circulant", params, d, t.rvc));
            rows.push_back(solved_row(opts, "circulant", params, d, t.srvc));

            rows.push_back(validity_row(
                "circulant", params + ";variant=block", d, Parameter::srvc,
                circulant_colouring(n, k, CirculantVariant::block),
                "the block colouring c(v_i) = floor(i/k) with ceil(n/k) colours is srvc-valid"));
            if (n % k != 0) {
                rows.push_back(validity_row(
                    "circulant", params + ";variant=claim2_residue", d, Parameter::rvc,
                    circulant_colouring(n, k, CirculantVariant::claim2_residue),
                    "colouring the jump orbit by residues mod ceil(n/k)-1 is rvc-valid when k "
                    "does not divide n"));
            }
            if (n % k == 1) {
                int a = (n - 1) / k;
                if (a >= 3 && n % (a - 1) == 0) {
                    rows.push_back(validity_row(
                        "circulant", params + ";variant=case_b_i", d, Parameter::srvc,
                        circulant_colouring(n, k, CirculantVariant::case_b_i),
                        "for n = ak+1 with a-1 dividing n, residues mod a-1 along the k-jump "
                        "orbit are srvc-valid"));
                }
                if (a >= 3 && n % (a - 1) != 0 && a < k + 2) {
                    rows.push_back(validity_row(
                        "circulant", params + ";variant=case_b_ii_small_a", d, Parameter::srvc,
                        circulant_colouring(n, k, CirculantVariant::case_b_ii_small_a),
                        "for n = ak+1 with a < k+2 and a-1 not dividing n, the stepped orbit "
                        "colouring with a colours is srvc-valid"));
                }
            }
            if (n % k == 0) {
                int a = n / k;
                if (a == 3 || a == 4) {
                    rows.push_back(validity_row(
                        "circulant", params + ";variant=case_c_small_a", d, Parameter::srvc,
                        circulant_colouring(n, k, CirculantVariant::case_c_small_a),
                        "for n = ak with a in {3,4}, the shifted block colouring with a-1 "
                        "colours is srvc-valid"));
                }
            }
        }
    }
    return rows;
}

std::vector<TableRow> tag_tournaments(const ReproduceOptions& opts) {
    std::vector<TableRow> rows;
    Digraph t4 = gen_tournament(TournamentKind::T4);
    rows.push_back(solved_row(opts, "tournament", "instance=t4", t4,
                              predict_tournament(TournamentKind::T4, Parameter::rvc, 0)));
    rows.push_back(solved_row(opts, "tournament", "instance=t4", t4,
                              predict_tournament(TournamentKind::T4, Parameter::srvc, 0)));
    Digraph t51 = gen_tournament(TournamentKind::T5_1);
    rows.push_back(solved_row(opts, "tournament", "instance=t5_1", t51,
                              predict_tournament(TournamentKind::T5_1, Parameter::rvc, 0)));
    rows.push_back(solved_row(opts, "tournament", "instance=t5_1", t51,
                              predict_tournament(TournamentKind::T5_1, Parameter::srvc, 0)));

    for (int n = 5; n <= 8; ++n) {
        for (int k = 2; k <= n - 2; ++k) {
            Digraph d = gen_tournament(TournamentKind::T_nk, n, k);
            std::string params = "n=" + std::to_string(n) + ";k=" + std::to_string(k);
            rows.push_back(solved_row(opts, "tournament", params, d,
                                      predict_tournament(TournamentKind::T_nk, Parameter::rvc,
                                                         n, k)));
            rows.push_back(solved_row(opts, "tournament", params, d,
                                      predict_tournament(TournamentKind::T_nk, Parameter::srvc,
                                                         n, k)));
        }
    }
    // k = 1 is witnessed by diameter-2 tournaments: the named 5-vertex
    // instance, then seeded searches for n = 6, 7, 8.
    const std::string diam2_citation = "a tournament with diameter 2 has rvc = srvc = 1";
    rows.push_back(solved_row(opts, "tournament", "n=5;k=1;instance=t5_1", t51,
                              exact_claim(Parameter::rvc, 1, diam2_citation)));
    rows.push_back(solved_row(opts, "tournament", "n=5;k=1;instance=t5_1", t51,
                              exact_claim(Parameter::srvc, 1, diam2_citation)));
    for (int n = 6; n <= 8; ++n) {
        Digraph d =
            gen_tournament(TournamentKind::diam2_search, n, 0, opts.seed + std::uint64_t(n));
        std::string params = "n=" + std::to_string(n) + ";k=1;instance=diam2-search";
        rows.push_back(
            solved_row(opts, "tournament", params, d, exact_claim(Parameter::rvc, 1, diam2_citation)));
        rows.push_back(
            solved_row(opts, "tournament", params, d, exact_claim(Parameter::srvc, 1, diam2_citation)));
    }

    // Exhaustive bound sweep over every orientation of K_n for n = 5, 6.
    for (int n = 5; n <= 6; ++n) {
        auto t0 = steady::now();
        int pairs = n * (n - 1) / 2;
        std::uint64_t total = std::uint64_t(1) << pairs;
        std::uint64_t strong = 0;
        std::uint64_t ok = 0;
        SolveOptions so = solve_options(opts);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<Arc> arcs;
            int bit = 0;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (mask >> bit & 1) {
                        arcs.push_back({u, v});
                    } else {
                        arcs.push_back({v, u});
                    }
                    ++bit;
                }
            }
            Digraph d(n, std::move(arcs));
            if (!is_strongly_connected(d)) continue;
            ++strong;
            int dm = diameter(d);
            SolveResult r1 = compute(d, Parameter::rvc, so);
            SolveResult r2 = compute(d, Parameter::srvc, so);
            bool good = r1.exact && r2.exact && 1 <= r1.value && r1.value <= r2.value &&
                        r2.value <= n - 2 && r1.value >= dm - 1 && r1.value <= dm + 3;
            if (good) ++ok;
        }
        TableRow row;
        row.family = "tournament";
        row.params = "n=" + std::to_string(n) + ";orientations=" + std::to_string(total);
        row.parameter = "rvc,srvc";
        row.predicted = "1 <= rvc <= srvc <= n-2 and diam-1 <= rvc <= diam+3";
        row.solver = "ok=" + std::to_string(ok) + "/" + std::to_string(strong) + " strong";
        row.evidence = "solver-exact";
        row.agree = strong > 0 && ok == strong;
        row.ms = ms_since(t0);
        row.citation =
            "every strongly connected tournament on at least 5 vertices satisfies the chain";
        rows.push_back(row);
    }

    // 500 seeded random strongly connected tournaments, n up to 25: the
    // two-pair colouring must be srvc-valid with at most n-2 colours and the
    // layered colouring rvc-valid with at most diam+3 colours.
    {
        auto t0 = steady::now();
        std::mt19937_64 rng(opts.seed);
        const int samples = 500;
        int two_ok = 0;
        int layered_ok = 0;
        for (int i = 0; i < samples; ++i) {
            int n = 5 + int(rng() % 21);
            Digraph t = gen_tournament(TournamentKind::random_t, n, 0, rng());
            int dm = diameter(t);
            VertexColouring two = tournament_two_pair_colouring(t);
            if (is_srvc_colouring(t, two) && two.K <= n - 2) ++two_ok;
            VertexColouring layered = tournament_layered_colouring(t);
            if (is_rvc_colouring(t, layered) && layered.K <= dm + 3) ++layered_ok;
        }
        long long elapsed = ms_since(t0);
        std::string params =
            "samples=" + std::to_string(samples) + ";n=5..25;seed=" + std::to_string(opts.seed);
        TableRow two_row;
        two_row.family = "tournament";
        two_row.params = params;
        two_row.parameter = "srvc-colouring";
        two_row.predicted = "valid with K <= n-2";
        two_row.solver = "ok=" + std::to_string(two_ok) + "/" + std::to_string(samples);
        two_row.evidence = "construction-verified";
        two_row.agree = two_ok == samples;
        two_row.ms = elapsed;
        two_row.citation =
            "recolouring a diametral pair and its geodesic neighbours yields a valid srvc "
            "colouring with n-2 colours";
        rows.push_back(two_row);
        TableRow lay_row;
        lay_row.family = "tournament";
        lay_row.params = params;
        lay_row.parameter = "rvc-colouring";
        lay_row.predicted = "valid with K <= diam+3";
        lay_row.solver = "ok=" + std::to_string(layered_ok) + "/" + std::to_string(samples);
        lay_row.evidence = "construction-verified";
        lay_row.agree = layered_ok == samples;
        lay_row.ms = elapsed;
        lay_row.citation =
            "distance layers plus four special colours yield a valid rvc colouring with at "
            "most diam+3 colours";
        rows.push_back(lay_row);
    }
    return rows;
}

std::vector<TableRow> tag_lemma5(const ReproduceOptions& opts) {
    (void)opts;
    std::vector<TableRow> rows;
    SeparationData h1 = gen_lemma5(SeparationInstance::H1);
    SeparationData d1 = gen_lemma5(SeparationInstance::D1);
    SeparationData h2 = gen_lemma5(SeparationInstance::H2);
    SeparationData d2 = gen_lemma5(SeparationInstance::D2);

    auto diam_row = [](const std::string& inst, const Digraph& d, int want,
                       const std::string& citation) {
        TableRow row;
        row.family = "separation";
        row.params = "instance=" + inst;
        row.parameter = "diam";
        row.predicted = std::to_string(want);
        row.citation = citation;
        auto t0 = steady::now();
        int got = diameter(d);
        row.ms = ms_since(t0);
        row.solver = std::to_string(got);
        row.evidence = "solver-exact";
        row.agree = got == want;
        return row;
    };
    rows.push_back(diam_row("H1", h1.d, 6, "the 14-vertex separation instance has diameter 6"));
    rows.push_back(diam_row("H2", h2.d, 9, "the 22-vertex separation instance has diameter 9"));

    rows.push_back(arc_construction_row(
        "separation", "instance=H1", h1.d, Parameter::src, *h1.arc_colouring, 6,
        diameter(h1.d), "diam",
        "the recorded 6-colour arc colouring meets the diameter lower bound, so src = 6",
        true));
    rows.push_back(vertex_construction_row(
        "separation", "instance=H2", h2.d, Parameter::srvc, *h2.vertex_colouring, 8,
        diameter(h2.d) - 1, "diam-1",
        "the recorded 8-colour vertex colouring meets the diam-1 lower bound, so srvc = 8",
        true));

    auto geodesic_row = [](const std::string& inst, const Digraph& d, int u, int v,
                           const std::string& citation) {
        TableRow row;
        row.family = "separation";
        row.params = "instance=" + inst + ";pair=" + std::to_string(u) + "->" +
                     std::to_string(v);
        row.parameter = "geodesic-count";
        row.predicted = "1";
        row.citation = citation;
        auto t0 = steady::now();
        std::uint64_t got = count_geodesics(d, u, v);
        row.ms = ms_since(t0);
        row.solver = std::to_string(got);
        row.evidence = "solver-exact";
        row.agree = got == 1;
        return row;
    };
    rows.push_back(geodesic_row("D1", d1.d, 1, 4,
                                "the shortcut leaves exactly one geodesic for this pair"));
    rows.push_back(geodesic_row("D2", d2.d, 0, 5,
                                "the shortcut leaves exactly one geodesic for this pair"));

    auto stated_row = [](const std::string& inst, const std::string& parameter,
                         const std::string& predicted, const std::string& citation) {
        TableRow row;
        row.family = "separation";
        row.params = "instance=" + inst;
        row.parameter = parameter;
        row.predicted = predicted;
        row.solver = "not reproduced";
        row.evidence = "stated-only";
        row.agree = true;
        row.ms = 0;
        row.citation = citation;
        return row;
    };
    rows.push_back(stated_row("D1", "src", ">=7",
                              "the shortcut forces a seventh arc colour through the unique "
                              "geodesic; the counting argument is recorded but not re-derived "
                              "here"));
    rows.push_back(stated_row("D2", "srvc", ">=9",
                              "the shortcut forces a ninth vertex colour through the unique "
                              "geodesic; the counting argument is recorded but not re-derived "
                              "here"));
    return rows;
}

std::vector<TableRow> tag_lemma6(const ReproduceOptions& opts) {
    std::vector<TableRow> rows;
    {
        const int s = 4;
        Digraph fan = gen_lemma6(GapFamily::fan, s);
        std::string params = "which=fan;s=" + std::to_string(s);
        const std::string fan_citation =
            "a fan of binom(s-1,3)+1 directed triangles has rvc = srvc = 3";
        rows.push_back(solved_row(opts, "gap", params, fan,
                                  exact_claim(Parameter::rvc, 3, fan_citation)));
        rows.push_back(solved_row(opts, "gap", params, fan,
                                  exact_claim(Parameter::srvc, 3, fan_citation)));
        Prediction rc_claim;
        rc_claim.parameter = Parameter::rc;
        rc_claim.form = PredictionForm::bounds;
        rc_claim.lo = s;
        rc_claim.hi = fan.arc_count();
        rc_claim.citation =
            "with binom(s-1,3)+1 triangles some three first-arc colours repeat, forcing rc >= s";
        rows.push_back(solved_row(opts, "gap", params, fan, rc_claim));
    }
    for (int s = 3; s <= 4; ++s) {
        Digraph pendant = gen_lemma6(GapFamily::pendant, s);
        std::string params = "which=pendant;s=" + std::to_string(s);
        const std::string vertex_citation =
            "the bioriented clique with one pendant per vertex has rvc = srvc = s";
        const std::string arc_citation =
            "the bioriented clique with one pendant per vertex has rc = src = 3";
        rows.push_back(solved_row(opts, "gap", params, pendant,
                                  exact_claim(Parameter::rvc, s, vertex_citation)));
        rows.push_back(solved_row(opts, "gap", params, pendant,
                                  exact_claim(Parameter::srvc, s, vertex_citation)));
        rows.push_back(solved_row(opts, "gap", params, pendant,
                                  exact_claim(Parameter::rc, 3, arc_citation)));
        rows.push_back(solved_row(opts, "gap", params, pendant,
                                  exact_claim(Parameter::src, 3, arc_citation)));
    }
    return rows;
}

std::vector<TableRow> tag_bounds_chain(const ReproduceOptions& opts) {
    struct Instance {
        std::string family;
        std::string params;
        Digraph d;
    };
    std::vector<Instance> instances;
    for (int n = 3; n <= 6; ++n) {
        instances.push_back(
            {"directed-cycle", "n=" + std::to_string(n), gen_directed_cycle(n)});
    }
    for (unsigned mask = 1; mask < (1u << 5); ++mask) {
        std::vector<int> asym;
        for (int i = 0; i < 5; ++i) {
            if (mask >> i & 1) asym.push_back(i);
        }
        instances.push_back({"cycle-subdigraph", "n=5;asym=" + join_ints(asym),
                             gen_cycle_subdigraph(5, asym)});
    }
    instances.push_back({"tournament", "instance=t4", gen_tournament(TournamentKind::T4)});
    instances.push_back({"tournament", "instance=t5_1", gen_tournament(TournamentKind::T5_1)});
    instances.push_back({"gap", "which=fan;s=4", gen_lemma6(GapFamily::fan, 4)});
    instances.push_back({"gap", "which=pendant;s=3", gen_lemma6(GapFamily::pendant, 3)});
    instances.push_back({"circulant", "n=6;k=2", gen_circulant_consecutive(6, 2)});
    instances.push_back({"circulant", "n=7;k=2", gen_circulant_consecutive(7, 2)});

    std::vector<TableRow> rows;
    SolveOptions so = solve_options(opts);
    for (const auto& inst : instances) {
        TableRow row;
        row.family = inst.family;
        row.params = inst.params;
        row.parameter = "chain";
        row.predicted = "diam-1 <= rvc <= srvc <= n and diam <= rc <= src";
        row.citation =
            "the bound chain holds for every strongly connected digraph on at least 2 vertices";
        auto t0 = steady::now();
        int dm = diameter(inst.d);
        SolveResult r_rvc = compute(inst.d, Parameter::rvc, so);
        SolveResult r_srvc = compute(inst.d, Parameter::srvc, so);
        SolveResult r_rc = compute(inst.d, Parameter::rc, so);
        SolveResult r_src = compute(inst.d, Parameter::src, so);
        row.ms = ms_since(t0);
        bool all_exact = r_rvc.exact && r_srvc.exact && r_rc.exact && r_src.exact;
        if (all_exact) {
            row.solver = "diam=" + std::to_string(dm) + ";rvc=" + std::to_string(r_rvc.value) +
                         ";srvc=" + std::to_string(r_srvc.value) +
                         ";rc=" + std::to_string(r_rc.value) +
                         ";src=" + std::to_string(r_src.value);
            row.evidence = "solver-exact";
            row.agree = dm - 1 <= r_rvc.value && r_rvc.value <= r_srvc.value &&
                        r_srvc.value <= inst.d.order() && dm <= r_rc.value &&
                        r_rc.value <= r_src.value;
        } else {
            row.solver = "inconclusive";
            row.evidence = "solver-bounds";
            row.agree = false;
        }
        rows.push_back(row);
    }
    return rows;
}

using TagFn = std::vector<TableRow> (*)(const ReproduceOptions&);

struct TagEntry {
    const char* name;
    TagFn fn;
};

constexpr TagEntry kTags[] = {
    {"bior-table", tag_bioriented},
    {"directed-cycles", tag_directed_cycles},
    {"cycle-subdigraphs", tag_cycle_subdigraphs},
    {"circulant", tag_circulant},
    {"tournaments", tag_tournaments},
    {"lemma5", tag_lemma5},
    {"lemma6", tag_lemma6},
    {"bounds-chain", tag_bounds_chain},
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

const std::vector<std::string>& reproduce_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto& t : kTags) out.push_back(t.name);
        return out;
    }();
    return tags;
}

std::vector<TableRow> reproduce(const std::string& tag, const ReproduceOptions& opts) {
    for (const auto& t : kTags) {
        if (tag == t.name) return t.fn(opts);
    }
    throw std::invalid_argument("unknown reproduce tag: " + tag);
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    out << "family,params,parameter,predicted,solver,evidence,agree,ms,citation\n";
    for (const auto& r : rows) {
        out << csv_field(r.family) << ',' << csv_field(r.params) << ','
            << csv_field(r.parameter) << ',' << csv_field(r.predicted) << ','
            << csv_field(r.solver) << ',' << csv_field(r.evidence) << ','
            << (r.agree ? "true" : "false") << ',' << r.ms << ',' << csv_field(r.citation)
            << '\n';
    }
}

}  // namespace rvc

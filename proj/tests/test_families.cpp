#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "rvc/digraph.hpp"
#include "rvc/families.hpp"
#include "rvc/predict.hpp"
#include "rvc/solver.hpp"
#include "rvc/verify.hpp"

using namespace rvc;

static const bool crosscheck_enabled = [] {
    set_verifier_crosscheck(true);
    return true;
}();

static std::set<Arc> arc_set(const Digraph& d) {
    const auto& a = d.arcs();
    return std::set<Arc>(a.begin(), a.end());
}

TEST_CASE("bioriented family shapes") {
    Digraph p = gen_bioriented_path(4);
    REQUIRE(p.order() == 4);
    REQUIRE(p.arc_count() == 6);
    REQUIRE(p.has_arc(1, 2));
    REQUIRE(p.has_arc(2, 1));
    REQUIRE(!p.has_arc(0, 2));

    Digraph c = gen_bioriented_cycle(5);
    REQUIRE(c.order() == 5);
    REQUIRE(c.arc_count() == 10);
    REQUIRE(diameter(c) == 2);

    Digraph w = gen_bioriented_wheel(4);
    REQUIRE(w.order() == 5);
    REQUIRE(w.arc_count() == 16);
    // hub is the last vertex and sees every rim vertex both ways
    for (int i = 0; i < 4; ++i) {
        REQUIRE(w.has_arc(4, i));
        REQUIRE(w.has_arc(i, 4));
    }

    Digraph k = gen_bioriented_complete(4);
    REQUIRE(k.order() == 4);
    REQUIRE(k.arc_count() == 12);
    REQUIRE(diameter(k) == 1);

    Digraph s = gen_bioriented_star(3);
    REQUIRE(s.order() == 4);
    REQUIRE(s.arc_count() == 6);
    REQUIRE(!s.has_arc(0, 1));
    REQUIRE(s.has_arc(0, 3));

    Digraph m = gen_bioriented_complete_multipartite({2, 3});
    REQUIRE(m.order() == 5);
    REQUIRE(m.arc_count() == 12);
    REQUIRE(!m.has_arc(0, 1));  // same class
    REQUIRE(!m.has_arc(2, 3));
    REQUIRE(m.has_arc(0, 2));
    REQUIRE(m.has_arc(2, 0));

    REQUIRE(gen_bioriented_complete_multipartite({1, 1}).arc_count() == 2);

    REQUIRE_THROWS_AS(gen_bioriented_path(1), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_bioriented_cycle(2), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_bioriented_wheel(2), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_bioriented_complete(1), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_bioriented_star(1), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_bioriented_complete_multipartite({3}), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_bioriented_complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("directed cycle and cycle subdigraph arc sets") {
    Digraph c4 = gen_directed_cycle(4);
    REQUIRE(arc_set(c4) == std::set<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});

    // positions 0 and 2 drop the reverse arcs (1,0) and (3,2)
    Digraph d = gen_cycle_subdigraph(5, {0, 2});
    std::set<Arc> want = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {2, 1}, {4, 3}, {0, 4}};
    REQUIRE(arc_set(d) == want);
    REQUIRE(is_strongly_connected(d));

    REQUIRE_THROWS_AS(gen_cycle_subdigraph(5, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_cycle_subdigraph(5, {5}), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_cycle_subdigraph(5, {-1}), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_cycle_subdigraph(2, {0}), std::invalid_argument);
}

TEST_CASE("cycle subdigraph classifier") {
    using Kind = CycleSubdigraphClass::Kind;
    auto cls = [](int n, std::vector<int> asym) {
        return classify_cycle_subdigraph(gen_cycle_subdigraph(n, asym));
    };

    CycleSubdigraphClass k1 = cls(6, {2});
    REQUIRE(k1.kind == Kind::K_EQ_1);
    REQUIRE(k1.k == 1);
    REQUIRE(k1.seg_p == 0);
    REQUIRE(k1.seg_p_prime == 5);

    CycleSubdigraphClass d1a = cls(6, {1, 2});
    REQUIRE(d1a.kind == Kind::D1);
    REQUIRE(d1a.seg_p == 0);
    REQUIRE(d1a.seg_p_prime == 4);

    CycleSubdigraphClass d1b = cls(6, {0, 3});
    REQUIRE(d1b.kind == Kind::D1);
    REQUIRE(d1b.seg_p == 2);
    REQUIRE(d1b.seg_p_prime == 2);

    CycleSubdigraphClass d2 = cls(7, {1, 2, 3});
    REQUIRE(d2.kind == Kind::D2);
    REQUIRE(d2.seg_p == 0);
    REQUIRE(d2.seg_p_prime == 4);

    CycleSubdigraphClass d3 = cls(6, {0, 1, 3});
    REQUIRE(d3.kind == Kind::D3);
    REQUIRE(d3.seg_p == 1);
    REQUIRE(d3.seg_p_prime == 2);

    CycleSubdigraphClass d4a = cls(7, {1, 2, 3, 4});
    REQUIRE(d4a.kind == Kind::D4);
    REQUIRE(d4a.seg_p == 0);
    REQUIRE(d4a.seg_p_prime == 3);

    // two length-2 blocks, one wrapping the position n-1/0 boundary
    CycleSubdigraphClass d4b = cls(7, {6, 0, 2, 3});
    REQUIRE(d4b.kind == Kind::D4);
    REQUIRE(d4b.k == 4);
    REQUIRE(d4b.seg_p == 1);
    REQUIRE(d4b.seg_p_prime == 2);

    // folded small cases: every position asymmetric
    CycleSubdigraphClass f3 = cls(3, {0, 1, 2});
    REQUIRE(f3.kind == Kind::D2);
    REQUIRE(f3.seg_p == 0);
    REQUIRE(f3.seg_p_prime == 0);
    CycleSubdigraphClass f4 = cls(4, {0, 1, 2, 3});
    REQUIRE(f4.kind == Kind::D4);
    REQUIRE(f4.seg_p == 0);
    REQUIRE(f4.seg_p_prime == 0);

    REQUIRE(cls(6, {0, 2, 4}).kind == Kind::OTHER);
    REQUIRE(cls(7, {0, 1, 3, 5}).kind == Kind::OTHER);
    REQUIRE(cls(9, {0, 1, 2, 4, 5}).kind == Kind::OTHER);
    REQUIRE(cls(6, {0, 2, 4}).seg_p == -1);

    REQUIRE(cycle_class_name(Kind::D3) == std::string("D3"));

    // classifier rejects digraphs that are not cycle subdigraphs
    REQUIRE_THROWS_AS(classify_cycle_subdigraph(gen_bioriented_cycle(5)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(classify_cycle_subdigraph(gen_bioriented_star(3)),
                      std::invalid_argument);
}

TEST_CASE("cycle subdigraph colourings across all masks") {
    for (int n = 4; n <= 9; ++n) {
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> asym;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) asym.push_back(i);
            Digraph d = gen_cycle_subdigraph(n, asym);
            auto cls = classify_cycle_subdigraph(d);
            PredictionTriple pred = predict_cycle_subdigraph(cls, n);

            VertexColouring cr = predicted_cycle_colouring(d, CycleTarget::rvc);
            REQUIRE(is_rvc_colouring(d, cr));
            REQUIRE(pred.rvc.pins_value());
            REQUIRE(cr.K == pred.rvc.value());

            VertexColouring cs = predicted_cycle_colouring(d, CycleTarget::srvc);
            REQUIRE(is_srvc_colouring(d, cs));
            REQUIRE(pred.srvc.pins_value());
            REQUIRE(cs.K == pred.srvc.value());
        }
    }
}

TEST_CASE("same-colour pair condition") {
    Digraph d = gen_cycle_subdigraph(7, {0});

    // injective colouring: no same-coloured pair, condition holds
    std::vector<int> inj(7);
    for (int i = 0; i < 7; ++i) inj[i] = i;
    REQUIRE(check_claim2_condition(d, VertexColouring(7, 7, inj)));

    // adjacent vertices sharing a colour break it
    REQUIRE(!check_claim2_condition(d, VertexColouring(7, 6, {0, 0, 1, 2, 3, 4, 5})));

    // a repeated colour strictly inside one side breaks it
    REQUIRE(!check_claim2_condition(d, VertexColouring(7, 5, {0, 1, 2, 1, 0, 3, 4})));

    // the optional length bound rejects a side longer than floor(n/2) arcs
    Digraph d12 = gen_cycle_subdigraph(12, {1});
    std::vector<int> ids = {0, 1, 0, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    VertexColouring far(12, 11, ids);
    REQUIRE(check_claim2_condition(d12, far, false));
    REQUIRE(!check_claim2_condition(d12, far, true));

    REQUIRE_THROWS_AS(check_claim2_condition(d, VertexColouring(6, 6, {0, 1, 2, 3, 4, 5})),
                      std::invalid_argument);
}

TEST_CASE("large bioriented cycle colourings") {
    for (int n : {11, 13, 14, 15, 16}) {
        Digraph c = gen_bioriented_cycle(n);
        VertexColouring col = bioriented_cycle_srvc_colouring(n);
        REQUIRE(col.K == (n + 1) / 2);
        REQUIRE(is_srvc_colouring(c, col));
    }
    REQUIRE_THROWS_AS(bioriented_cycle_srvc_colouring(12), std::invalid_argument);

    int want_k[] = {7, 7, 8};
    int idx = 0;
    for (int n : {14, 15, 16}) {
        Digraph c = gen_bioriented_cycle(n);
        VertexColouring col = bioriented_cycle_rvc_colouring(n);
        REQUIRE(col.K == want_k[idx++]);
        REQUIRE(is_rvc_colouring(c, col));
    }
    // n = 15 uses a hand-found pattern one colour below the generic one
    VertexColouring c15 = bioriented_cycle_rvc_colouring(15);
    std::vector<int> frozen = {6, 0, 1, 2, 3, 6, 4, 5, 0, 1, 6, 2, 3, 4, 5};
    REQUIRE(c15.colour == frozen);
    REQUIRE_THROWS_AS(bioriented_cycle_rvc_colouring(13), std::invalid_argument);
}

TEST_CASE("circulant generators") {
    Digraph g = gen_circulant(7, {1, 3});
    REQUIRE(g.order() == 7);
    REQUIRE(g.arc_count() == 14);
    REQUIRE(g.has_arc(0, 1));
    REQUIRE(g.has_arc(0, 3));
    REQUIRE(g.has_arc(5, 1));  // 5 + 3 mod 7
    REQUIRE(!g.has_arc(0, 2));

    Digraph a = gen_circulant_consecutive(9, 3);
    Digraph b = gen_circulant(9, {1, 2, 3});
    REQUIRE(arc_set(a) == arc_set(b));
    REQUIRE(diameter(a) == 3);  // ceil(8/3)
    REQUIRE(diameter(gen_circulant_consecutive(12, 3)) == 4);

    REQUIRE_THROWS_AS(gen_circulant(6, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_circulant(6, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_circulant(6, {6}), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_circulant_consecutive(6, 0), std::invalid_argument);
}

TEST_CASE("circulant colourings") {
    // block pattern: always defined, valid for the geodesic vertex parameter
    for (int n = 6; n <= 12; ++n) {
        for (int k = 2; k <= n / 2 - 1; ++k) {
            Digraph d = gen_circulant_consecutive(n, k);
            VertexColouring col = circulant_colouring(n, k, CirculantVariant::block);
            REQUIRE(col.K == (n + k - 1) / k);
            REQUIRE(is_srvc_colouring(d, col));
        }
    }

    // residue pattern needs k not dividing n; uses ceil(n/k) - 1 colours
    for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 2}, {11, 3}, {12, 5}}) {
        Digraph d = gen_circulant_consecutive(n, k);
        VertexColouring col = circulant_colouring(n, k, CirculantVariant::claim2_residue);
        REQUIRE(col.K == (n + k - 1) / k - 1);
        REQUIRE(is_rvc_colouring(d, col));
    }

    {
        Digraph d = gen_circulant_consecutive(9, 2);
        VertexColouring col = circulant_colouring(9, 2, CirculantVariant::case_b_i);
        REQUIRE(col.K == 3);
        REQUIRE(is_srvc_colouring(d, col));
    }
    {
        Digraph d = gen_circulant_consecutive(7, 2);
        VertexColouring col = circulant_colouring(7, 2, CirculantVariant::case_b_ii_small_a);
        REQUIRE(col.K == 3);
        REQUIRE(is_srvc_colouring(d, col));
    }
    for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {12, 3}}) {
        Digraph d = gen_circulant_consecutive(n, k);
        VertexColouring col = circulant_colouring(n, k, CirculantVariant::case_c_small_a);
        REQUIRE(col.K == n / k - 1);
        REQUIRE(is_srvc_colouring(d, col));
    }

    REQUIRE_THROWS_AS(circulant_colouring(6, 2, CirculantVariant::claim2_residue),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(circulant_colouring(7, 2, CirculantVariant::case_b_i),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(circulant_colouring(11, 2, CirculantVariant::case_b_i),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(circulant_colouring(9, 2, CirculantVariant::case_b_ii_small_a),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(circulant_colouring(7, 2, CirculantVariant::case_c_small_a),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(circulant_colouring(2, 1, CirculantVariant::block),
                      std::invalid_argument);
}

TEST_CASE("fixed tournaments") {
    Digraph t4 = gen_tournament(TournamentKind::T4);
    REQUIRE(t4.order() == 4);
    REQUIRE(is_tournament(t4));
    REQUIRE(arc_set(t4) ==
            std::set<Arc>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
    REQUIRE(diameter(t4) == 3);

    Digraph t5 = gen_tournament(TournamentKind::T5_1);
    REQUIRE(t5.order() == 5);
    REQUIRE(t5.arc_count() == 10);
    REQUIRE(is_tournament(t5));
    REQUIRE(diameter(t5) == 2);

    REQUIRE(!is_tournament(gen_bioriented_complete(4)));
    REQUIRE(!is_tournament(gen_directed_cycle(4)));
}

TEST_CASE("path tournaments") {
    // base instance on k+2 vertices: v_0 reaches v_{k+1} only in k+1 steps
    for (int k = 3; k <= 6; ++k) {
        Digraph t = gen_tournament(TournamentKind::T_nk, k + 2, k);
        REQUIRE(t.order() == k + 2);
        REQUIRE(is_tournament(t));
        REQUIRE(is_strongly_connected(t));
        REQUIRE(distances_from(t, 0)[k + 1] == k + 1);
        REQUIRE(diameter(t) == k + 1);
    }

    // blown-up instances stay tournaments and keep the parameter value
    Digraph t73 = gen_tournament(TournamentKind::T_nk, 7, 3);
    REQUIRE(t73.order() == 7);
    REQUIRE(is_tournament(t73));
    REQUIRE(is_strongly_connected(t73));

    Digraph t52 = gen_tournament(TournamentKind::T_nk, 5, 2);
    SolveResult r = compute(t52, Parameter::rvc, {});
    REQUIRE(r.exact);
    REQUIRE(r.value == 2);
    SolveResult s = compute(t52, Parameter::srvc, {});
    REQUIRE(s.value == 2);

    REQUIRE_THROWS_AS(gen_tournament(TournamentKind::T_nk, 4, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_tournament(TournamentKind::T_nk, 5, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_tournament(TournamentKind::T_nk, 5, 4), std::invalid_argument);
}

TEST_CASE("random and searched tournaments") {
    Digraph a = gen_tournament(TournamentKind::random_t, 9, 0, 42);
    Digraph b = gen_tournament(TournamentKind::random_t, 9, 0, 42);
    REQUIRE(arc_set(a) == arc_set(b));
    REQUIRE(a.order() == 9);
    REQUIRE(is_tournament(a));
    REQUIRE(is_strongly_connected(a));

    for (int n : {5, 6, 8}) {
        Digraph t = gen_tournament(TournamentKind::diam2_search, n, 0, 7);
        REQUIRE(t.order() == n);
        REQUIRE(is_tournament(t));
        REQUIRE(diameter(t) == 2);
    }
    REQUIRE_THROWS_AS(gen_tournament(TournamentKind::diam2_search, 4, 0, 1),
                      std::invalid_argument);
}

TEST_CASE("tournament colourings") {
    Digraph t4 = gen_tournament(TournamentKind::T4);
    VertexColouring two = tournament_two_pair_colouring(t4);
    REQUIRE(two.K <= 2);
    REQUIRE(is_srvc_colouring(t4, two));
    VertexColouring lay = tournament_layered_colouring(t4);
    REQUIRE(lay.K <= diameter(t4) + 3);
    REQUIRE(is_rvc_colouring(t4, lay));

    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng() % 10);
        Digraph t = gen_tournament(TournamentKind::random_t, n, 0, rng());
        int d = diameter(t);

        VertexColouring c1 = tournament_two_pair_colouring(t);
        REQUIRE(c1.K <= n - 2);
        REQUIRE(is_srvc_colouring(t, c1));

        VertexColouring c2 = tournament_layered_colouring(t);
        REQUIRE(c2.K <= d + 3);
        REQUIRE(is_rvc_colouring(t, c2));
    }
}

TEST_CASE("separation instances") {
    SeparationData h1 = gen_lemma5(SeparationInstance::H1);
    REQUIRE(h1.d.order() == 14);
    REQUIRE(h1.d.arc_count() == 28);
    REQUIRE(diameter(h1.d) == 6);
    REQUIRE(h1.arc_colouring.has_value());
    REQUIRE(!h1.vertex_colouring.has_value());
    REQUIRE(h1.arc_colouring->K == 6);
    REQUIRE(is_src_colouring(h1.d, *h1.arc_colouring));

    SeparationData d1 = gen_lemma5(SeparationInstance::D1);
    REQUIRE(d1.d.order() == 14);
    REQUIRE(d1.d.arc_count() == 29);
    REQUIRE(!d1.arc_colouring.has_value());
    REQUIRE(!d1.vertex_colouring.has_value());
    // exactly the extra shortcut arc distinguishes it
    REQUIRE(d1.d.has_arc(8, 9));
    REQUIRE(!h1.d.has_arc(8, 9));
    REQUIRE(count_geodesics(d1.d, 1, 4) == 1);

    SeparationData h2 = gen_lemma5(SeparationInstance::H2);
    REQUIRE(h2.d.order() == 22);
    REQUIRE(h2.d.arc_count() == 48);
    REQUIRE(diameter(h2.d) == 9);
    REQUIRE(!h2.arc_colouring.has_value());
    REQUIRE(h2.vertex_colouring.has_value());
    REQUIRE(h2.vertex_colouring->K == 8);
    REQUIRE(is_srvc_colouring(h2.d, *h2.vertex_colouring));

    SeparationData d2 = gen_lemma5(SeparationInstance::D2);
    REQUIRE(d2.d.order() == 22);
    REQUIRE(d2.d.arc_count() == 49);
    REQUIRE(d2.d.has_arc(12, 21));
    REQUIRE(count_geodesics(d2.d, 0, 5) == 1);
}

TEST_CASE("gap families") {
    Digraph fan4 = gen_lemma6(GapFamily::fan, 4);
    REQUIRE(fan4.order() == 5);  // binom(3,3)+1 = 2 triangles at one hub
    REQUIRE(fan4.arc_count() == 6);
    REQUIRE(is_strongly_connected(fan4));
    REQUIRE(static_cast<int>(fan4.out_neighbours(0).size()) == 2);

    Digraph fan5 = gen_lemma6(GapFamily::fan, 5);
    REQUIRE(fan5.order() == 11);  // binom(4,3)+1 = 5 triangles
    REQUIRE(fan5.arc_count() == 15);
    REQUIRE(static_cast<int>(fan5.in_neighbours(0).size()) == 5);

    REQUIRE_THROWS_AS(gen_lemma6(GapFamily::fan, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(gen_lemma6(GapFamily::fan, 40), std::invalid_argument);

    Digraph pen3 = gen_lemma6(GapFamily::pendant, 3);
    REQUIRE(pen3.order() == 6);
    REQUIRE(pen3.arc_count() == 12);
    REQUIRE(diameter(pen3) == 3);
    REQUIRE(pen3.has_arc(0, 3));
    REQUIRE(pen3.has_arc(3, 0));
    REQUIRE(!pen3.has_arc(3, 4));

    REQUIRE_THROWS_AS(gen_lemma6(GapFamily::pendant, 1), std::invalid_argument);
}

TEST_CASE("family dispatch") {
    FamilySpec p;
    p.family = "path";
    p.n = 5;
    REQUIRE(arc_set(build_family(p)) == arc_set(gen_bioriented_path(5)));

    FamilySpec c;
    c.family = "circulant";
    c.n = 8;
    c.k = 3;
    REQUIRE(arc_set(build_family(c)) == arc_set(gen_circulant_consecutive(8, 3)));

    FamilySpec cs;
    cs.family = "cycle-sub";
    cs.n = 6;
    cs.asym_positions = {0, 2};
    REQUIRE(arc_set(build_family(cs)) == arc_set(gen_cycle_subdigraph(6, {0, 2})));

    FamilySpec f;
    f.family = "fan";
    f.s = 4;
    REQUIRE(build_family(f).order() == 5);

    FamilySpec l5;
    l5.family = "lemma5";
    l5.which = "H2";
    REQUIRE(build_family(l5).order() == 22);

    FamilySpec tk;
    tk.family = "t_nk";
    tk.n = 6;
    tk.k = 2;
    REQUIRE(is_tournament(build_family(tk)));

    FamilySpec bad;
    bad.family = "moebius";
    REQUIRE_THROWS_AS(build_family(bad), std::invalid_argument);
    FamilySpec bad5;
    bad5.family = "lemma5";
    bad5.which = "H3";
    REQUIRE_THROWS_AS(build_family(bad5), std::invalid_argument);
}

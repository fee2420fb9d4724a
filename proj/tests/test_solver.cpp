#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "rvc/digraph.hpp"
#include "rvc/solver.hpp"
#include "rvc/verify.hpp"
#include "test_util.hpp"

using namespace rvc;

static const bool crosscheck_enabled = [] {
    set_verifier_crosscheck(true);
    return true;
}();

static Digraph bioriented_cycle(int n) {
    std::vector<Arc> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return biorient(n, edges);
}

static Digraph directed_cycle(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph(n, arcs);
}

TEST_CASE("parameter helpers") {
    REQUIRE(is_vertex_parameter(Parameter::rvc));
    REQUIRE(is_vertex_parameter(Parameter::srvc));
    REQUIRE_FALSE(is_vertex_parameter(Parameter::rc));
    REQUIRE(is_geodesic_parameter(Parameter::srvc));
    REQUIRE(is_geodesic_parameter(Parameter::src));
    REQUIRE_FALSE(is_geodesic_parameter(Parameter::rvc));
    REQUIRE(std::string(parameter_name(Parameter::src)) == "src");
    REQUIRE(parse_parameter("rvc") == Parameter::rvc);
    REQUIRE(parse_parameter("srvc") == Parameter::srvc);
    REQUIRE(parse_parameter("rc") == Parameter::rc);
    REQUIRE(parse_parameter("src") == Parameter::src);
    REQUIRE_FALSE(parse_parameter("bogus").has_value());
}

TEST_CASE("known exact values on directed cycles") {
    // n-2 for the two smallest cycles, n afterwards
    const int want[] = {1, 2, 5, 6, 7};
    for (int n = 3; n <= 7; ++n) {
        Digraph d = directed_cycle(n);
        SolveResult r = compute(d, Parameter::rvc);
        REQUIRE(r.exact);
        REQUIRE(r.value == want[n - 3]);
        SolveResult s = compute(d, Parameter::srvc);
        REQUIRE(s.exact);
        REQUIRE(s.value == want[n - 3]);
        // the arc parameters sit at n on every directed cycle
        REQUIRE(compute(d, Parameter::rc).value == n);
        REQUIRE(compute(d, Parameter::src).value == n);
    }
}

TEST_CASE("known exact values on bioriented cycles") {
    const int want_rvc[] = {0, 1, 1, 2, 3, 3, 3, 4};  // n = 3..10
    const int want_srvc[] = {0, 1, 1, 2, 3, 3, 3, 4};
    for (int n = 3; n <= 10; ++n) {
        Digraph d = bioriented_cycle(n);
        REQUIRE(compute(d, Parameter::rvc).value == want_rvc[n - 3]);
        REQUIRE(compute(d, Parameter::srvc).value == want_srvc[n - 3]);
    }
}

TEST_CASE("complete biorientation needs no colours") {
    Digraph k4 = biorient(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    SolveResult r = compute(k4, Parameter::rvc);
    REQUIRE(r.value == 0);
    REQUIRE(r.exact);
    REQUIRE(compute(k4, Parameter::srvc).value == 0);
    REQUIRE(compute(k4, Parameter::rc).value == 1);
    REQUIRE(compute(k4, Parameter::src).value == 1);
}

TEST_CASE("witness is valid and optimal") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + int(rng() % 3);
        Digraph d = test_util::random_sc_digraph(rng, n, 2, 4);
        for (Parameter p : {Parameter::rvc, Parameter::srvc, Parameter::rc, Parameter::src}) {
            SolveResult r = compute(d, p, {});
            REQUIRE(r.exact);
            REQUIRE(r.lower_bound == r.value);
            REQUIRE(r.upper_bound == r.value);
            if (is_vertex_parameter(p)) {
                REQUIRE(r.vertex_witness.has_value());
                REQUIRE(r.vertex_witness->K == r.value);
                VerifyResult v = p == Parameter::rvc ? is_rvc_colouring(d, *r.vertex_witness)
                                                     : is_srvc_colouring(d, *r.vertex_witness);
                REQUIRE(v);
            } else {
                REQUIRE(r.arc_witness.has_value());
                REQUIRE(r.arc_witness->K == r.value);
                VerifyResult v = p == Parameter::rc ? is_rc_colouring(d, *r.arc_witness)
                                                    : is_src_colouring(d, *r.arc_witness);
                REQUIRE(v);
            }
        }
    }
}

TEST_CASE("solver values match the independent oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + int(rng() % 2);
        Digraph d = test_util::random_sc_digraph(rng, n, 2, 4);
        for (Parameter p : {Parameter::rvc, Parameter::srvc}) {
            int v = compute(d, p).value;
            REQUIRE(oracle_value(d, p, v));
            if (v > 0) REQUIRE_FALSE(oracle_value(d, p, v - 1));
        }
        if (d.arc_count() <= 10) {
            for (Parameter p : {Parameter::rc, Parameter::src}) {
                int v = compute(d, p).value;
                REQUIRE(oracle_value(d, p, v));
                if (v > 1) REQUIRE_FALSE(oracle_value(d, p, v - 1));
            }
        }
    }
}

TEST_CASE("oracle_mode enumeration agrees with the pruned search") {
    std::mt19937_64 rng(99);
    SolveOptions oracle_opts;
    oracle_opts.oracle_mode = true;
    for (int trial = 0; trial < 10; ++trial) {
        int n = 4 + int(rng() % 2);
        Digraph d = test_util::random_sc_digraph(rng, n, 2, 4);
        for (Parameter p : {Parameter::rvc, Parameter::srvc}) {
            SolveResult fast = compute(d, p);
            SolveResult slow = compute(d, p, oracle_opts);
            REQUIRE(fast.value == slow.value);
        }
    }
}

TEST_CASE("worker count does not change the result or the witness") {
    Digraph d = bioriented_cycle(9);
    SolveResult one = compute(d, Parameter::srvc, {});
    for (int workers : {2, 4}) {
        SolveOptions opts;
        opts.workers = workers;
        SolveResult many = compute(d, Parameter::srvc, opts);
        REQUIRE(many.value == one.value);
        REQUIRE(many.vertex_witness->colour == one.vertex_witness->colour);
    }
    Digraph c6 = directed_cycle(6);
    SolveResult arc_one = compute(c6, Parameter::rc, {});
    SolveOptions two;
    two.workers = 2;
    SolveResult arc_two = compute(c6, Parameter::rc, two);
    REQUIRE(arc_two.value == arc_one.value);
    REQUIRE(arc_two.arc_witness->colour == arc_one.arc_witness->colour);
}

TEST_CASE("repeated runs give identical witnesses") {
    Digraph d = bioriented_cycle(8);
    SolveResult a = compute(d, Parameter::rvc);
    SolveResult b = compute(d, Parameter::rvc);
    REQUIRE(a.vertex_witness->colour == b.vertex_witness->colour);
}

TEST_CASE("refuted budget tracks the last failed K") {
    Digraph d = directed_cycle(5);  // rvc = 5, diameter 4
    SolveResult r = compute(d, Parameter::rvc);
    REQUIRE(r.value == 5);
    REQUIRE(r.refuted_budget == 4);
}

TEST_CASE("max_budget caps the search honestly") {
    Digraph d = directed_cycle(6);  // rvc = 6
    SolveOptions opts;
    opts.max_budget = 4;
    SolveResult r = compute(d, Parameter::rvc, opts);
    REQUIRE_FALSE(r.exact);
    REQUIRE(r.value == -1);
    REQUIRE(r.lower_bound > 4);
    REQUIRE(r.refuted_budget == 4);
}

TEST_CASE("bounds stay sane under a tiny time limit") {
    Digraph d = bioriented_cycle(12);
    SolveOptions opts;
    opts.time_limit = 1e-9;
    SolveResult r = compute(d, Parameter::srvc, opts);
    REQUIRE(r.lower_bound >= diameter(d) - 1);
    if (r.exact) {
        REQUIRE(r.value == 5);
    } else {
        REQUIRE(r.value == -1);
        REQUIRE(r.lower_bound <= 5);
        REQUIRE((r.upper_bound == -1 || r.upper_bound >= 5));
    }
}

TEST_CASE("input guards") {
    Digraph lonely(1, {});
    REQUIRE_THROWS_AS(compute(lonely, Parameter::rvc), std::invalid_argument);
    Digraph path(3, {{0, 1}, {1, 2}});
    REQUIRE_THROWS_AS(compute(path, Parameter::rvc), not_strongly_connected);
    Digraph k3 = biorient(3, {{0, 1}, {0, 2}, {1, 2}});
    REQUIRE_THROWS_AS(oracle_value(k3, Parameter::rvc, 7), std::invalid_argument);
}

TEST_CASE("diameter shortcuts") {
    // diameter 1: zero colours, and the solver must report it instantly
    Digraph k5 = biorient(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                              {2, 3}, {2, 4}, {3, 4}});
    SolveResult r = compute(k5, Parameter::rvc);
    REQUIRE(r.value == 0);
    REQUIRE(r.vertex_witness.has_value());
    REQUIRE(is_rvc_colouring(k5, *r.vertex_witness));
    // diameter 2: one colour for the vertex parameters
    Digraph star = biorient(4, {{3, 0}, {3, 1}, {3, 2}});
    REQUIRE(compute(star, Parameter::rvc).value == 1);
    REQUIRE(compute(star, Parameter::srvc).value == 1);
}

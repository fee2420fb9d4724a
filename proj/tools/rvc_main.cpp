// Command line front end: compute a parameter exactly, verify a colouring,
// generate a named family, or run the reproduction tables.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rvc/digraph.hpp"
#include "rvc/families.hpp"
#include "rvc/io.hpp"
#include "rvc/predict.hpp"
#include "rvc/reproduce.hpp"
#include "rvc/solver.hpp"
#include "rvc/verify.hpp"

using namespace rvc;

namespace {

int run_compute(const std::string& in_path, const std::string& parameter_arg,
                const std::string& witness_path, int threads, double time_limit) {
    Digraph d = read_digraph_file(in_path);
    auto p = parse_parameter(parameter_arg);
    if (!p) {
        std::cerr << "unknown parameter: " << parameter_arg
                  << " (expected rvc, srvc, rc or src)\n";
        return 2;
    }
    if (!is_strongly_connected(d)) {
        std::cerr << "input digraph is not strongly connected\n";
        return 3;
    }
    SolveOptions opts;
    opts.workers = threads;
    opts.time_limit = time_limit;
    SolveResult res = compute(d, *p, opts);
    std::cout << "parameter=" << parameter_name(*p) << "\n";
    std::cout << "n=" << d.order() << "\n";
    std::cout << "m=" << d.arc_count() << "\n";
    std::cout << "diam=" << diameter(d) << "\n";
    std::cout << "exact=" << (res.exact ? "true" : "false") << "\n";
    std::cout << "value=" << res.value << "\n";
    std::cout << "lower=" << res.lower_bound << "\n";
    std::cout << "upper=" << res.upper_bound << "\n";
    std::cout << "refuted_budget=" << res.refuted_budget << "\n";
    std::cout << "colourings_tested=" << res.stats.colourings_tested << "\n";
    std::cout << "states_expanded=" << res.stats.states_expanded << "\n";
    std::cout << "wall_seconds=" << res.stats.wall_seconds << "\n";
    if (res.exact && !witness_path.empty()) {
        if (res.vertex_witness) {
            write_vertex_colouring_file(witness_path, *res.vertex_witness);
        } else if (res.arc_witness) {
            write_arc_colouring_file(witness_path, *res.arc_witness);
        }
    }
    if (!res.exact) {
        std::cerr << "search stopped before an exact value (time or budget limit)\n";
        return 4;
    }
    return 0;
}

int run_verify(const std::string& in_path, const std::string& parameter_arg,
               const std::string& colouring_path) {
    Digraph d = read_digraph_file(in_path);
    auto p = parse_parameter(parameter_arg);
    if (!p) {
        std::cerr << "unknown parameter: " << parameter_arg
                  << " (expected rvc, srvc, rc or src)\n";
        return 2;
    }
    if (!is_strongly_connected(d)) {
        std::cerr << "input digraph is not strongly connected\n";
        return 3;
    }
    VerifyResult v;
    if (is_vertex_parameter(*p)) {
        VertexColouring c = read_vertex_colouring_file(colouring_path);
        if (c.n != d.order()) {
            std::cerr << "colouring is on " << c.n << " vertices but the digraph has "
                      << d.order() << "\n";
            return 2;
        }
        v = (*p == Parameter::srvc) ? is_srvc_colouring(d, c) : is_rvc_colouring(d, c);
    } else {
        ArcColouring c = read_arc_colouring_file(colouring_path);
        if (c.m != d.arc_count()) {
            std::cerr << "colouring is on " << c.m << " arcs but the digraph has "
                      << d.arc_count() << "\n";
            return 2;
        }
        v = (*p == Parameter::src) ? is_src_colouring(d, c) : is_rc_colouring(d, c);
    }
    if (v) {
        std::cout << "VALID\n";
        return 0;
    }
    std::cout << "INVALID pair " << v.fail_u << " " << v.fail_v << "\n";
    return 1;
}

// Builds the constructive colouring named by variant for the generated
// family. Returns 2 on an unknown combination.
int emit_colouring(const FamilySpec& spec, const Digraph& d, const std::string& variant,
                   std::ostream& out) {
    const std::string& fam = spec.family;
    if (fam == "cycle-sub" && (variant == "rvc" || variant == "srvc")) {
        CycleTarget target = variant == "rvc" ? CycleTarget::rvc : CycleTarget::srvc;
        write_vertex_colouring(out, predicted_cycle_colouring(d, target));
        return 0;
    }
    if (fam == "circulant") {
        CirculantVariant cv;
        if (variant == "block") {
            cv = CirculantVariant::block;
        } else if (variant == "claim2_residue") {
            cv = CirculantVariant::claim2_residue;
        } else if (variant == "case_b_i") {
            cv = CirculantVariant::case_b_i;
        } else if (variant == "case_b_ii_small_a") {
            cv = CirculantVariant::case_b_ii_small_a;
        } else if (variant == "case_c_small_a") {
            cv = CirculantVariant::case_c_small_a;
        } else {
            std::cerr << "unknown circulant colouring variant: " << variant << "\n";
            return 2;
        }
        write_vertex_colouring(out, circulant_colouring(spec.n, spec.k, cv));
        return 0;
    }
    if (fam == "t4" || fam == "t5_1" || fam == "t_nk" || fam == "tournament-random" ||
        fam == "tournament-diam2") {
        if (variant == "two_pair") {
            write_vertex_colouring(out, tournament_two_pair_colouring(d));
            return 0;
        }
        if (variant == "layered") {
            write_vertex_colouring(out, tournament_layered_colouring(d));
            return 0;
        }
        std::cerr << "unknown tournament colouring variant: " << variant << "\n";
        return 2;
    }
    if (fam == "lemma5" && variant == "figure") {
        SeparationInstance which;
        if (spec.which == "H1") {
            which = SeparationInstance::H1;
        } else if (spec.which == "D1") {
            which = SeparationInstance::D1;
        } else if (spec.which == "H2") {
            which = SeparationInstance::H2;
        } else {
            which = SeparationInstance::D2;
        }
        SeparationData data = gen_lemma5(which);
        if (data.arc_colouring) {
            write_arc_colouring(out, *data.arc_colouring);
            return 0;
        }
        if (data.vertex_colouring) {
            write_vertex_colouring(out, *data.vertex_colouring);
            return 0;
        }
        std::cerr << "no recorded colouring for instance " << spec.which << "\n";
        return 2;
    }
    if (fam == "cycle" && (variant == "rvc" || variant == "srvc")) {
        VertexColouring c = variant == "srvc" ? bioriented_cycle_srvc_colouring(spec.n)
                                              : bioriented_cycle_rvc_colouring(spec.n);
        write_vertex_colouring(out, c);
        return 0;
    }
    std::cerr << "no colouring variant " << variant << " for family " << fam << "\n";
    return 2;
}

int run_generate(const FamilySpec& spec, const std::string& out_path,
                 const std::string& variant, const std::string& colouring_out) {
    Digraph d = build_family(spec);
    if (out_path.empty()) {
        write_digraph(std::cout, d);
    } else {
        write_digraph_file(out_path, d);
    }
    if (variant.empty()) return 0;
    if (colouring_out.empty()) {
        return emit_colouring(spec, d, variant, std::cout);
    }
    std::ofstream out(colouring_out);
    if (!out) {
        std::cerr << "cannot open " << colouring_out << " for writing\n";
        return 2;
    }
    return emit_colouring(spec, d, variant, out);
}

int run_reproduce(const std::string& tag, const std::string& out_path, int threads,
                  std::uint64_t seed, double time_limit) {
    ReproduceOptions opts;
    opts.threads = threads;
    opts.seed = seed;
    opts.time_limit = time_limit;
    std::vector<std::string> tags;
    if (tag == "all") {
        tags = reproduce_tags();
    } else {
        tags.push_back(tag);
    }
    std::vector<TableRow> rows;
    for (const auto& t : tags) {
        std::vector<TableRow> part = reproduce(t, opts);
        int disagreements = 0;
        long long total_ms = 0;
        for (const auto& r : part) {
            if (!r.agree) ++disagreements;
            total_ms += r.ms;
        }
        std::cerr << "# " << t << ": " << part.size() << " rows, " << disagreements
                  << " disagreements, " << total_ms << " ms\n";
        rows.insert(rows.end(), part.begin(), part.end());
    }
    if (out_path.empty()) {
        write_table_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 2;
        }
        write_table_csv(out, rows);
    }
    for (const auto& r : rows) {
        if (!r.agree) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow vertex- and arc-connection numbers of strongly connected digraphs"};
    app.require_subcommand(1);

    int threads = 1;
    std::uint64_t seed = 1;
    double time_limit = 0.0;
    app.add_option("--threads", threads, "worker threads for the solver")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized generators");
    app.add_option("--time-limit", time_limit, "per-solve time limit in seconds, 0 = none");

    auto* compute_cmd =
        app.add_subcommand("compute", "compute a connection number exactly");
    std::string in_path;
    std::string parameter_arg;
    std::string witness_path;
    compute_cmd->add_option("--in", in_path, "digraph file")->required();
    compute_cmd->add_option("--parameter", parameter_arg, "rvc, srvc, rc or src")->required();
    compute_cmd->add_option("--witness", witness_path,
                            "write an optimal colouring to this file");

    auto* verify_cmd = app.add_subcommand("verify", "check a colouring against a digraph");
    std::string verify_in;
    std::string verify_parameter;
    std::string colouring_path;
    verify_cmd->add_option("--in", verify_in, "digraph file")->required();
    verify_cmd->add_option("--parameter", verify_parameter, "rvc, srvc, rc or src")->required();
    verify_cmd->add_option("--colouring", colouring_path, "colouring file")->required();

    auto* generate_cmd = app.add_subcommand("generate", "emit a named digraph family");
    FamilySpec spec;
    std::string gen_out;
    std::string gen_variant;
    std::string gen_colouring_out;
    generate_cmd
        ->add_option("--family", spec.family,
                     "path, cycle, wheel, complete, star, multipartite, dicycle, cycle-sub, "
                     "circulant, t4, t5_1, t_nk, tournament-random, tournament-diam2, lemma5, "
                     "fan, pendant")
        ->required();
    generate_cmd->add_option("--n", spec.n, "order parameter");
    generate_cmd->add_option("--k", spec.k, "jump count or tournament parameter");
    generate_cmd->add_option("--s", spec.s, "gap family size parameter");
    generate_cmd->add_option("--classes", spec.class_sizes, "multipartite class sizes")
        ->delimiter(',');
    generate_cmd
        ->add_option("--asym", spec.asym_positions,
                     "asymmetric positions for cycle-sub (comma separated)")
        ->delimiter(',');
    generate_cmd->add_option("--which", spec.which, "lemma5 instance: H1, D1, H2 or D2");
    generate_cmd->add_option("--out", gen_out, "digraph output file (default stdout)");
    generate_cmd->add_option("--colouring", gen_variant,
                             "also emit a constructive colouring (variant name)");
    generate_cmd->add_option("--colouring-out", gen_colouring_out,
                             "colouring output file (default stdout)");

    auto* reproduce_cmd =
        app.add_subcommand("reproduce", "run a reproduction table and emit CSV");
    std::string tag;
    std::string reproduce_out;
    std::string tag_help = "one of: all";
    for (const auto& t : reproduce_tags()) tag_help += ", " + t;
    reproduce_cmd->add_option("--tag", tag, tag_help)->required();
    reproduce_cmd->add_option("--out", reproduce_out, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute_cmd->parsed()) {
            return run_compute(in_path, parameter_arg, witness_path, threads, time_limit);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_in, verify_parameter, colouring_path);
        }
        if (generate_cmd->parsed()) {
            spec.seed = seed;
            return run_generate(spec, gen_out, gen_variant, gen_colouring_out);
        }
        if (reproduce_cmd->parsed()) {
            return run_reproduce(tag, reproduce_out, threads, seed, time_limit);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#ifndef RVC_SOLVER_HPP
#define RVC_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "rvc/digraph.hpp"
#include "rvc/verify.hpp"

namespace rvc {

enum class Parameter { rvc, srvc, rc, src };

// rvc and srvc colour vertices; rc and src colour arcs.
bool is_vertex_parameter(Parameter p);
// srvc and src demand rainbow geodesics; rvc and rc accept any rainbow path.
bool is_geodesic_parameter(Parameter p);
const char* parameter_name(Parameter p);
std::optional<Parameter> parse_parameter(const std::string& name);

struct SolveStats {
    std::uint64_t colourings_tested = 0;  // complete colourings evaluated
    std::uint64_t states_expanded = 0;    // partial assignments visited
    double wall_seconds = 0.0;
};

struct SolveOptions {
    int max_budget = -1;      // cap on the number of colours; -1 = item count
    double time_limit = 0.0;  // seconds; 0 = unlimited
    int workers = 1;
    bool oracle_mode = false;  // plain odometer enumeration, no pruning or
                               // canonical restriction; for cross-checks
};

// Result of an exact computation. When exact is false the search ran out of
// budget or time and only the bounds are meaningful; an inconclusive result
// never reports a value.
struct SolveResult {
    Parameter parameter = Parameter::rvc;
    bool exact = false;
    int value = -1;
    int lower_bound = 0;
    int upper_bound = -1;
    int refuted_budget = -1;  // largest K proven to admit no valid colouring
    std::optional<VertexColouring> vertex_witness;
    std::optional<ArcColouring> arc_witness;
    SolveStats stats;
};

// Minimum number of colours in a valid colouring for the given parameter.
// Iterates K upward from the diameter-based lower bound, enumerating
// colourings in restricted-growth-string order; the witness is the first
// valid colouring at the minimal K, independent of the worker count.
// Requires a strongly connected digraph with n >= 2.
SolveResult compute(const Digraph& d, Parameter p, const SolveOptions& opts = {});

SolveResult compute_rvc(const Digraph& d, const SolveOptions& opts = {});
SolveResult compute_srvc(const Digraph& d, const SolveOptions& opts = {});
SolveResult compute_rc(const Digraph& d, const SolveOptions& opts = {});
SolveResult compute_src(const Digraph& d, const SolveOptions& opts = {});

// Independent oracle: true iff some K-colouring is valid for the parameter,
// decided by enumerating every one of the K^n (or K^|A|) colourings and
// checking each with a naive all-simple-paths scan. Shares no search code
// with compute(). Guards: n <= 8 for vertex parameters, |A| <= 14 for arc
// parameters.
bool oracle_value(const Digraph& d, Parameter p, int K);

}  // namespace rvc

#endif

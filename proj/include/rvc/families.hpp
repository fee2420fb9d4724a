#ifndef RVC_FAMILIES_HPP
#define RVC_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rvc/digraph.hpp"
#include "rvc/verify.hpp"

namespace rvc {

// biorientations of the classic undirected families
Digraph gen_bioriented_path(int n);   // n >= 2
Digraph gen_bioriented_cycle(int n);  // n >= 3
Digraph gen_bioriented_wheel(int n);  // n rim vertices on a cycle, hub = vertex n; n >= 3
Digraph gen_bioriented_complete(int n);
Digraph gen_bioriented_star(int n);  // n leaves, centre = vertex n; n >= 2
Digraph gen_bioriented_complete_multipartite(const std::vector<int>& class_sizes);

Digraph gen_directed_cycle(int n);  // arcs v_i -> v_{i+1 mod n}; n >= 3

// Spanning strongly connected subdigraph of the bioriented cycle: position i
// in asym removes the reverse arc v_{i+1} -> v_i while keeping v_i -> v_{i+1},
// so the forward cycle stays intact. Requires at least one position.
Digraph gen_cycle_subdigraph(int n, const std::vector<int>& asym);

// Structural classification of a cycle subdigraph by its asymmetric arcs:
// K_EQ_1 one asymmetric arc; D1 two; D2 three consecutive; D3 three with
// exactly two consecutive and both separating bioriented segments nonempty;
// D4 four arranged as two consecutive pairs; OTHER anything else. seg_p and
// seg_p_prime are the two bioriented segment lengths (edge counts) in
// ascending order, with a 0 recorded for a trivial segment; -1 for OTHER.
struct CycleSubdigraphClass {
    enum class Kind { K_EQ_1, D1, D2, D3, D4, OTHER };
    Kind kind = Kind::OTHER;
    int k = 0;
    int seg_p = -1;
    int seg_p_prime = -1;
};
const char* cycle_class_name(CycleSubdigraphClass::Kind kind);
CycleSubdigraphClass classify_cycle_subdigraph(const Digraph& d);

// The constructive colouring matching the closed-form value for the given
// target on a classified cycle subdigraph. Classes whose value is n get the
// identity colouring.
enum class CycleTarget { rvc, srvc };
VertexColouring predicted_cycle_colouring(const Digraph& d, CycleTarget target);

// For every same-coloured vertex pair {u,v}: removing u and v must leave
// exactly two components, each a bioriented path whose vertices carry
// pairwise distinct colours. With geodesic_length_bound, each path must also
// have at most floor(n/2) edges. Host must be a cycle subdigraph.
bool check_claim2_condition(const Digraph& d, const VertexColouring& c,
                            bool geodesic_length_bound = false);

// srvc-optimal colouring of the bioriented cycle for n = 11 or n >= 13:
// colours 1..ceil(n/2) followed by 1..floor(n/2) around the cycle.
VertexColouring bioriented_cycle_srvc_colouring(int n);
// rvc colouring achieving the closed-form value for n in {14, 15, 16}; the
// n = 15 witness uses one colour fewer than the srvc optimum.
VertexColouring bioriented_cycle_rvc_colouring(int n);

// circulants
Digraph gen_circulant(int n, const std::vector<int>& jumps);
Digraph gen_circulant_consecutive(int n, int k);  // jump set {1..k}

// Constructive circulant colourings for C_n([k]), one per proof case; each
// checks its case precondition and reports the case's colour count.
enum class CirculantVariant {
    block,             // c(v_i) = floor(i/k); ceil(n/k) colours; any k
    claim2_residue,    // residues along the k-jump orbits; ceil(n/k)-1 colours
    case_b_i,          // n = ak+1 with (a-1) | n; a-1 colours
    case_b_ii_small_a, // n = ak+1, (a-1) does not divide n, a < k+2; a colours
    case_c_small_a     // n = ak with a in {3,4}; a-1 colours
};
VertexColouring circulant_colouring(int n, int k, CirculantVariant variant);

// tournaments
enum class TournamentKind { T4, T5_1, T_nk, random_t, diam2_search };
Digraph gen_tournament(TournamentKind kind, int n = 0, int k = 0, std::uint64_t seed = 0);
bool is_tournament(const Digraph& d);

// Colouring from the n-2 upper-bound proof: a diametral pair and its
// geodesic neighbours share two colours, everything else is distinct.
VertexColouring tournament_two_pair_colouring(const Digraph& t);
// Colouring from the d+3 upper-bound proof: distance layers from an
// eccentric vertex, with up to four special colours alpha..delta.
VertexColouring tournament_layered_colouring(const Digraph& t);

// Hard-coded separation instances: H1 with its 6-colour arc colouring and
// src = diam = 6; H2 with its 8-colour vertex colouring and srvc = 8; D1 and
// D2 add one asymmetric shortcut arc each and separate the path parameters
// from the geodesic ones.
enum class SeparationInstance { H1, D1, H2, D2 };
struct SeparationData {
    Digraph d;
    std::optional<ArcColouring> arc_colouring;
    std::optional<VertexColouring> vertex_colouring;
};
SeparationData gen_lemma5(SeparationInstance which);

// Families realizing extreme gaps: fan glues binom(s-1,3)+1 directed
// triangles at a hub (rvc = srvc = 3 but rc >= s); pendant biorients K_s
// with a pendant vertex per clique vertex (rvc = srvc = s but rc = src = 3).
enum class GapFamily { fan, pendant };
Digraph gen_lemma6(GapFamily which, int s);

// CLI plumbing: family tag plus parameters
struct FamilySpec {
    std::string family;
    int n = 0;
    int k = 0;
    int s = 0;
    std::vector<int> class_sizes;
    std::vector<int> asym_positions;
    std::string which;
    std::uint64_t seed = 0;
};
Digraph build_family(const FamilySpec& spec);

}  // namespace rvc

#endif

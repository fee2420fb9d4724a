#ifndef RVC_VERIFY_HPP
#define RVC_VERIFY_HPP

#include <cstdint>
#include <vector>

#include "rvc/digraph.hpp"

namespace rvc {

// Colouring of vertices 0..n-1 with ids in 0..K-1. K = 0 is legal (empty
// palette): no internal vertex may then appear on any required path, which
// only works out for diameter-1 hosts. For K = 0 the stored ids must all be
// the placeholder 0.
struct VertexColouring {
    int n;
    int K;
    std::vector<int> colour;

    VertexColouring(int n_, int K_, std::vector<int> colour_);
};

// Colouring of the arcs of a host digraph, addressed in sorted-arc order
// (Digraph::arcs()). Arc paths count every arc, endpoints included, so an
// empty palette can never be valid and K >= 1 is required.
struct ArcColouring {
    int m;
    int K;
    std::vector<int> colour;

    ArcColouring(int m_, int K_, std::vector<int> colour_);
};

// Outcome of a whole-digraph verification; fail_u/fail_v hold the
// lexicographically smallest failing ordered pair when !valid.
struct VerifyResult {
    bool valid = true;
    int fail_u = -1;
    int fail_v = -1;

    explicit operator bool() const { return valid; }
};

// Search-size counter for the state-space bound assertions in tests.
struct SearchStats {
    std::uint64_t states = 0;
};

// True iff some directed u-v path has pairwise-distinct internal vertex
// colours. Breadth search over (vertex, used-colour bitmask) states; a walk
// accepted by the search always contains a rainbow simple path, because
// excising a cycle from a walk only removes internal colours.
bool has_rainbow_path(const Digraph& d, const VertexColouring& c, int u, int v,
                      SearchStats* stats = nullptr);

// True iff some shortest u-v path is rainbow; the search runs over the
// geodesic DAG (arc (w,z) admissible iff d(u,w)+1+d(z,v)=d(u,v)).
bool has_rainbow_geodesic(const Digraph& d, const VertexColouring& c, int u, int v,
                          SearchStats* stats = nullptr);

// Arc versions: every arc colour on the path must be distinct, endpoints
// included.
bool has_rainbow_path_arcs(const Digraph& d, const ArcColouring& c, int u, int v,
                           SearchStats* stats = nullptr);
bool has_rainbow_geodesic_arcs(const Digraph& d, const ArcColouring& c, int u, int v,
                               SearchStats* stats = nullptr);

// Whole-digraph checks over all ordered pairs, short-circuiting at the
// lexicographically smallest failing pair. The host must be strongly
// connected.
VerifyResult is_rvc_colouring(const Digraph& d, const VertexColouring& c);
VerifyResult is_srvc_colouring(const Digraph& d, const VertexColouring& c);
VerifyResult is_rc_colouring(const Digraph& d, const ArcColouring& c);
VerifyResult is_src_colouring(const Digraph& d, const ArcColouring& c);

// Test hook: when enabled, every positive is_srvc_colouring (is_src_colouring)
// result is cross-checked against the weaker path-based verifier, since a
// rainbow geodesic is in particular a rainbow path. Violations throw.
void set_verifier_crosscheck(bool enabled);

}  // namespace rvc

#endif

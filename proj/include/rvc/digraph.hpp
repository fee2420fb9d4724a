#ifndef RVC_DIGRAPH_HPP
#define RVC_DIGRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rvc {

// Thrown by operations that require a strongly connected digraph when the
// input is not strongly connected (the CLI maps this to its own exit code).
struct not_strongly_connected : std::runtime_error {
    not_strongly_connected() : std::runtime_error("digraph is not strongly connected") {}
    explicit not_strongly_connected(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a target vertex cannot be reached from a source.
struct unreachable_vertex : std::runtime_error {
    unreachable_vertex(int u, int v)
        : std::runtime_error("vertex " + std::to_string(v) +
                             " is unreachable from " + std::to_string(u)) {}
};

using Arc = std::pair<int, int>;

// Marker for "no path" in distance containers. -1 can never collide with a
// real hop count.
inline constexpr int kUnreachable = -1;

// A finite simple digraph on vertices 0..n-1. Arcs are stored sorted and
// deduplicated; out- and in-adjacency lists mirror them in ascending order.
// Instances are immutable after construction.
class Digraph {
  public:
    Digraph(int n, std::vector<Arc> arcs);

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbours(int u) const { return out_.at(u); }
    const std::vector<int>& in_neighbours(int u) const { return in_.at(u); }

    bool has_arc(int u, int v) const;
    // Index of (u,v) in the sorted arc list, or -1 when absent. Arc
    // colourings address arcs by this index.
    int arc_index(int u, int v) const;

  private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// All-pairs distances; d(u,v) == kUnreachable when v cannot be reached.
class DistanceMatrix {
  public:
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}
    int order() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }

  private:
    int n_;
    std::vector<int> d_;
};

// Validates and normalizes an arc list: rejects loops and out-of-range
// endpoints, deduplicates, sorts.
Digraph build_digraph(int n, const std::vector<Arc>& arc_list);

bool is_strongly_connected(const Digraph& d);

// BFS distances from u; unreachable entries hold kUnreachable.
std::vector<int> distances_from(const Digraph& d, int u);

DistanceMatrix all_pairs_distances(const Digraph& d);

// Maximum distance over ordered pairs. Throws not_strongly_connected when
// some pair has no path.
int diameter(const Digraph& d);

// Digraph replacing each undirected edge {u,v} with arcs uv and vu.
Digraph biorient(int n, const std::vector<Arc>& edge_list);

// Replace vertex u of d by a copy of h: every former arc into u now enters
// every copy vertex, every former arc out of u leaves every copy vertex.
// The copy of h occupies ids {u} ∪ {n, n+1, ...}: h-vertex 0 keeps id u and
// h-vertex j >= 1 becomes id n+j-1, where n = d.order().
Digraph expand_vertex(const Digraph& d, int u, const Digraph& h);

// Expand every vertex of d by a copy of h. Vertex (u, i) has id u*h.order()+i.
Digraph lexicographic_product(const Digraph& d, const Digraph& h);

// Number of distinct shortest u-v paths (saturating at the count type's
// maximum). Throws unreachable_vertex when no path exists; u == v counts 1.
std::uint64_t count_geodesics(const Digraph& d, int u, int v);

}  // namespace rvc

#endif

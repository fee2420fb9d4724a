#include "rvc/verify.hpp"

#include <atomic>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace rvc {

namespace {

std::atomic<bool> g_crosscheck{false};

void check_vertex_colouring(const Digraph& d, const VertexColouring& c) {
    if (c.n != d.order()) throw std::invalid_argument("colouring size does not match digraph");
}

void check_arc_colouring(const Digraph& d, const ArcColouring& c) {
    if (c.m != d.arc_count()) throw std::invalid_argument("arc colouring size does not match digraph");
}

// Distances into v, i.e. d(z, v) for every z, via BFS on reversed arcs.
std::vector<int> distances_to(const Digraph& d, int v) {
    std::vector<int> dist(d.order(), kUnreachable);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int z : d.in_neighbours(w)) {
            if (dist[z] == kUnreachable) {
                dist[z] = dist[w] + 1;
                q.push(z);
            }
        }
    }
    return dist;
}

// Shared engine for the four single-pair checks. The colour of a traversal
// step is supplied by a callable so the vertex and arc variants stay in one
// place; geodesic mode restricts steps to the geodesic DAG of the pair.
template <typename StepColour>
bool rainbow_search(const Digraph& d, int K, int u, int v, bool geodesic_only,
                    bool colour_final_step, StepColour step_colour, SearchStats* stats) {
    if (u == v) throw std::invalid_argument("rainbow search needs distinct endpoints");
    if (K > 64) throw std::invalid_argument("more than 64 colours unsupported");

    std::vector<int> dist_from_u;
    std::vector<int> dist_to_v;
    int pair_dist = 0;
    if (geodesic_only) {
        dist_from_u = distances_from(d, u);
        if (dist_from_u[v] == kUnreachable) throw unreachable_vertex(u, v);
        dist_to_v = distances_to(d, v);
        pair_dist = dist_from_u[v];
    }
    auto admissible = [&](int w, int z) {
        if (!geodesic_only) return true;
        return dist_from_u[w] != kUnreachable && dist_to_v[z] != kUnreachable &&
               dist_from_u[w] + 1 + dist_to_v[z] == pair_dist;
    };

    std::vector<std::unordered_set<std::uint64_t>> seen(d.order());
    std::queue<std::pair<int, std::uint64_t>> q;
    seen[u].insert(0);
    q.emplace(u, 0);
    if (stats) stats->states += 1;
    while (!q.empty()) {
        auto [w, mask] = q.front();
        q.pop();
        for (int z : d.out_neighbours(w)) {
            if (!admissible(w, z)) continue;
            if (z == v) {
                if (!colour_final_step) return true;
                int col = step_colour(w, z);
                if (col >= K) continue;
                if (!(mask >> col & 1)) return true;
                continue;
            }
            int col = step_colour(w, z);
            if (col >= K) continue;  // K = 0: internal steps disallowed
            if (mask >> col & 1) continue;
            std::uint64_t next = mask | (std::uint64_t{1} << col);
            if (seen[z].insert(next).second) {
                if (stats) stats->states += 1;
                q.emplace(z, next);
            }
        }
    }
    return false;
}

template <typename PairCheck>
VerifyResult all_pairs_check(const Digraph& d, PairCheck check) {
    if (!is_strongly_connected(d)) throw not_strongly_connected();
    for (int u = 0; u < d.order(); ++u) {
        for (int v = 0; v < d.order(); ++v) {
            if (u == v) continue;
            if (!check(u, v)) return {false, u, v};
        }
    }
    return {};
}

}  // namespace

VertexColouring::VertexColouring(int n_, int K_, std::vector<int> colour_)
    : n(n_), K(K_), colour(std::move(colour_)) {
    if (n < 1) throw std::invalid_argument("colouring needs at least one vertex");
    if (K < 0 || K > n) throw std::invalid_argument("colour count out of range");
    if (static_cast<int>(colour.size()) != n)
        throw std::invalid_argument("colour array size mismatch");
    for (int c : colour) {
        if (K == 0 ? c != 0 : (c < 0 || c >= K))
            throw std::invalid_argument("colour id out of range");
    }
}

ArcColouring::ArcColouring(int m_, int K_, std::vector<int> colour_)
    : m(m_), K(K_), colour(std::move(colour_)) {
    if (m < 1) throw std::invalid_argument("arc colouring needs at least one arc");
    if (K < 1 || K > m) throw std::invalid_argument("colour count out of range");
    if (static_cast<int>(colour.size()) != m)
        throw std::invalid_argument("colour array size mismatch");
    for (int c : colour)
        if (c < 0 || c >= K) throw std::invalid_argument("colour id out of range");
}

bool has_rainbow_path(const Digraph& d, const VertexColouring& c, int u, int v,
                      SearchStats* stats) {
    check_vertex_colouring(d, c);
    return rainbow_search(
        d, c.K, u, v, false, false, [&](int, int z) { return c.colour[z]; }, stats);
}

bool has_rainbow_geodesic(const Digraph& d, const VertexColouring& c, int u, int v,
                          SearchStats* stats) {
    check_vertex_colouring(d, c);
    return rainbow_search(
        d, c.K, u, v, true, false, [&](int, int z) { return c.colour[z]; }, stats);
}

bool has_rainbow_path_arcs(const Digraph& d, const ArcColouring& c, int u, int v,
                           SearchStats* stats) {
    check_arc_colouring(d, c);
    return rainbow_search(
        d, c.K, u, v, false, true,
        [&](int w, int z) { return c.colour[d.arc_index(w, z)]; }, stats);
}

bool has_rainbow_geodesic_arcs(const Digraph& d, const ArcColouring& c, int u, int v,
                               SearchStats* stats) {
    check_arc_colouring(d, c);
    return rainbow_search(
        d, c.K, u, v, true, true,
        [&](int w, int z) { return c.colour[d.arc_index(w, z)]; }, stats);
}

VerifyResult is_rvc_colouring(const Digraph& d, const VertexColouring& c) {
    check_vertex_colouring(d, c);
    return all_pairs_check(d, [&](int u, int v) { return has_rainbow_path(d, c, u, v); });
}

VerifyResult is_srvc_colouring(const Digraph& d, const VertexColouring& c) {
    check_vertex_colouring(d, c);
    auto res =
        all_pairs_check(d, [&](int u, int v) { return has_rainbow_geodesic(d, c, u, v); });
    if (res.valid && g_crosscheck.load(std::memory_order_relaxed)) {
        if (!is_rvc_colouring(d, c).valid)
            throw std::logic_error("srvc-valid colouring failed the rvc check");
    }
    return res;
}

VerifyResult is_rc_colouring(const Digraph& d, const ArcColouring& c) {
    check_arc_colouring(d, c);
    return all_pairs_check(d, [&](int u, int v) { return has_rainbow_path_arcs(d, c, u, v); });
}

VerifyResult is_src_colouring(const Digraph& d, const ArcColouring& c) {
    check_arc_colouring(d, c);
    auto res = all_pairs_check(
        d, [&](int u, int v) { return has_rainbow_geodesic_arcs(d, c, u, v); });
    if (res.valid && g_crosscheck.load(std::memory_order_relaxed)) {
        if (!is_rc_colouring(d, c).valid)
            throw std::logic_error("src-valid colouring failed the rc check");
    }
    return res;
}

void set_verifier_crosscheck(bool enabled) { g_crosscheck.store(enabled); }

}  // namespace rvc

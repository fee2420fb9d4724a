#ifndef RVC_TEST_UTIL_HPP
#define RVC_TEST_UTIL_HPP

// Shared helpers for the unit tests: seeded random instances and a naive
// rainbow-path checker that enumerates simple paths recursively, kept
// deliberately independent of the library's search code.

#include <random>
#include <stdexcept>
#include <vector>

#include "rvc/digraph.hpp"
#include "rvc/verify.hpp"

namespace test_util {

// Random digraph on n vertices where each of the n(n-1) possible arcs is
// kept with probability num/den, redrawn until strongly connected.
inline rvc::Digraph random_sc_digraph(std::mt19937_64& rng, int n, int num, int den) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<rvc::Arc> arcs;
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u != v && int(rng() % std::uint64_t(den)) < num) arcs.push_back({u, v});
            }
        }
        rvc::Digraph d(n, std::move(arcs));
        if (rvc::is_strongly_connected(d)) return d;
    }
    throw std::runtime_error("random_sc_digraph: no strongly connected draw");
}

inline rvc::VertexColouring random_vertex_colouring(std::mt19937_64& rng, int n, int K) {
    std::vector<int> colour(n);
    for (int& c : colour) c = int(rng() % std::uint64_t(K));
    return rvc::VertexColouring(n, K, std::move(colour));
}

inline rvc::ArcColouring random_arc_colouring(std::mt19937_64& rng, int m, int K) {
    std::vector<int> colour(m);
    for (int& c : colour) c = int(rng() % std::uint64_t(K));
    return rvc::ArcColouring(m, K, std::move(colour));
}

struct NaiveQuery {
    const rvc::Digraph* d = nullptr;
    const std::vector<int>* vertex_colour = nullptr;  // exactly one of these
    const std::vector<int>* arc_colour = nullptr;     // two is non-null
    int max_len = -1;  // accept only paths of exactly this length; -1 = any
};

inline bool naive_path_rainbow(const NaiveQuery& q, const std::vector<int>& path) {
    if (q.vertex_colour) {
        // internal vertices only
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            for (std::size_t j = i + 1; j + 1 < path.size(); ++j) {
                if ((*q.vertex_colour)[path[i]] == (*q.vertex_colour)[path[j]]) return false;
            }
        }
        return true;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        for (std::size_t j = i + 1; j + 1 < path.size(); ++j) {
            int a = q.d->arc_index(path[i], path[i + 1]);
            int b = q.d->arc_index(path[j], path[j + 1]);
            if ((*q.arc_colour)[a] == (*q.arc_colour)[b]) return false;
        }
    }
    return true;
}

inline bool naive_extend(const NaiveQuery& q, std::vector<int>& path, std::vector<char>& used,
                         int v) {
    int w = path.back();
    if (w == v) {
        if (q.max_len >= 0 && int(path.size()) - 1 != q.max_len) return false;
        return naive_path_rainbow(q, path);
    }
    if (q.max_len >= 0 && int(path.size()) - 1 >= q.max_len) return false;
    for (int z : q.d->out_neighbours(w)) {
        if (used[z]) continue;
        used[z] = 1;
        path.push_back(z);
        bool ok = naive_extend(q, path, used, v);
        path.pop_back();
        used[z] = 0;
        if (ok) return true;
    }
    return false;
}

// True iff some u-v path is rainbow under the colouring held by q; with
// geodesic_only, only shortest paths count. Enumerates every simple path.
inline bool naive_has_rainbow(NaiveQuery q, int u, int v, bool geodesic_only) {
    if (geodesic_only) q.max_len = rvc::distances_from(*q.d, u)[v];
    std::vector<int> path = {u};
    std::vector<char> used(q.d->order(), 0);
    used[u] = 1;
    return naive_extend(q, path, used, v);
}

}  // namespace test_util

#endif

#include "rvc/digraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace rvc {

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 1) throw std::invalid_argument("digraph needs at least one vertex");
    for (const auto& [u, v] : arcs_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    // arcs_ is sorted, so each out_[u] is already ascending; in_[v] collects
    // sources in arc order, which is ascending by source as well.
}

bool Digraph::has_arc(int u, int v) const { return arc_index(u, v) >= 0; }

int Digraph::arc_index(int u, int v) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
    if (it == arcs_.end() || *it != Arc{u, v}) return -1;
    return static_cast<int>(it - arcs_.begin());
}

Digraph build_digraph(int n, const std::vector<Arc>& arc_list) {
    return Digraph(n, arc_list);
}

std::vector<int> distances_from(const Digraph& d, int u) {
    if (u < 0 || u >= d.order()) throw std::invalid_argument("source out of range");
    std::vector<int> dist(d.order(), kUnreachable);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int z : d.out_neighbours(w)) {
            if (dist[z] == kUnreachable) {
                dist[z] = dist[w] + 1;
                q.push(z);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Digraph& d) {
    int n = d.order();
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u) {
        auto row = distances_from(d, u);
        std::copy(row.begin(), row.end(), flat.begin() + static_cast<size_t>(u) * n);
    }
    return DistanceMatrix(n, std::move(flat));
}

bool is_strongly_connected(const Digraph& d) {
    int n = d.order();
    if (n == 1) return true;
    auto forward = distances_from(d, 0);
    for (int v = 0; v < n; ++v)
        if (forward[v] == kUnreachable) return false;
    // Reachability towards 0 via a backward BFS over in-neighbours.
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[0] = 1;
    q.push(0);
    int count = 1;
    while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int z : d.in_neighbours(w)) {
            if (!seen[z]) {
                seen[z] = 1;
                ++count;
                q.push(z);
            }
        }
    }
    return count == n;
}

int diameter(const Digraph& d) {
    int n = d.order();
    int best = 0;
    for (int u = 0; u < n; ++u) {
        auto row = distances_from(d, u);
        for (int v = 0; v < n; ++v) {
            if (row[v] == kUnreachable) throw not_strongly_connected();
            best = std::max(best, row[v]);
        }
    }
    return best;
}

Digraph biorient(int n, const std::vector<Arc>& edge_list) {
    std::vector<Arc> arcs;
    arcs.reserve(edge_list.size() * 2);
    for (const auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loops are not allowed");
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(n, std::move(arcs));
}

Digraph expand_vertex(const Digraph& d, int u, const Digraph& h) {
    int n = d.order();
    int m = h.order();
    if (u < 0 || u >= n) throw std::invalid_argument("expanded vertex out of range");
    // h-vertex j maps to id u when j == 0 and to n+j-1 otherwise.
    auto hid = [&](int j) { return j == 0 ? u : n + j - 1; };
    std::vector<Arc> arcs;
    for (const auto& [a, b] : d.arcs()) {
        if (a != u && b != u) {
            arcs.emplace_back(a, b);
        } else if (a == u && b != u) {
            for (int j = 0; j < m; ++j) arcs.emplace_back(hid(j), b);
        } else if (a != u && b == u) {
            for (int j = 0; j < m; ++j) arcs.emplace_back(a, hid(j));
        }
    }
    for (const auto& [a, b] : h.arcs()) arcs.emplace_back(hid(a), hid(b));
    return Digraph(n + m - 1, std::move(arcs));
}

Digraph lexicographic_product(const Digraph& d, const Digraph& h) {
    int m = h.order();
    auto id = [&](int u, int i) { return u * m + i; };
    std::vector<Arc> arcs;
    for (const auto& [u, v] : d.arcs())
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) arcs.emplace_back(id(u, i), id(v, j));
    for (int u = 0; u < d.order(); ++u)
        for (const auto& [i, j] : h.arcs()) arcs.emplace_back(id(u, i), id(u, j));
    return Digraph(d.order() * m, std::move(arcs));
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a) return std::numeric_limits<std::uint64_t>::max();
    return s;
}

}  // namespace

std::uint64_t count_geodesics(const Digraph& d, int u, int v) {
    if (u < 0 || u >= d.order() || v < 0 || v >= d.order())
        throw std::invalid_argument("vertex out of range");
    if (u == v) return 1;
    auto dist = distances_from(d, u);
    if (dist[v] == kUnreachable) throw unreachable_vertex(u, v);
    // Count paths through the geodesic DAG in increasing distance from u.
    std::vector<int> order(d.order());
    for (int w = 0; w < d.order(); ++w) order[w] = w;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        return a < b;
    });
    std::vector<std::uint64_t> ways(d.order(), 0);
    ways[u] = 1;
    for (int w : order) {
        if (dist[w] == kUnreachable || ways[w] == 0) continue;
        for (int z : d.out_neighbours(w)) {
            if (dist[z] == dist[w] + 1 && dist[z] <= dist[v])
                ways[z] = sat_add(ways[z], ways[w]);
        }
    }
    return ways[v];
}

}  // namespace rvc

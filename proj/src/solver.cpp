#include "rvc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace rvc {

bool is_vertex_parameter(Parameter p) {
    return p == Parameter::rvc || p == Parameter::srvc;
}

bool is_geodesic_parameter(Parameter p) {
    return p == Parameter::srvc || p == Parameter::src;
}

const char* parameter_name(Parameter p) {
    switch (p) {
        case Parameter::rvc: return "rvc";
        case Parameter::srvc: return "srvc";
        case Parameter::rc: return "rc";
        case Parameter::src: return "src";
    }
    return "?";
}

std::optional<Parameter> parse_parameter(const std::string& name) {
    if (name == "rvc") return Parameter::rvc;
    if (name == "srvc") return Parameter::srvc;
    if (name == "rc") return Parameter::rc;
    if (name == "src") return Parameter::src;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kPathCap = 32;
constexpr std::uint64_t kEnumStepCap = 20000;

// Candidate plan for one digraph and one parameter. For every ordered pair
// that imposes a real constraint we either enumerate its full candidate set
// (all simple paths for the path parameters, all geodesics for the geodesic
// ones) or, when that set is too large, fall back to an exact per-leaf check.
// A pair with a candidate of at most one constrained item can never fail and
// is dropped entirely.
struct Plan {
    bool vertex_mode = true;
    bool geodesic_mode = false;
    int n_items = 0;
    int n_paths = 0;
    int n_slots = 0;
    std::vector<int> path_items;        // constrained items, flat
    std::vector<int> path_offset;       // n_paths + 1 offsets into path_items
    std::vector<int> path_pair;         // pair slot owning each path
    std::vector<int> pair_path_count;   // candidates per pair slot
    std::vector<int> item_paths;        // paths containing each item, flat
    std::vector<int> item_offset;       // n_items + 1 offsets into item_paths
    std::vector<std::pair<int, int>> rich_pairs;  // checked exactly at leaves
};

// Enumerates the simple u-v paths (or only the geodesics) as vertex
// sequences. Returns false when the path cap or the step budget is hit, in
// which case the pair must be handled as rich.
bool enumerate_candidates(const Digraph& d, const DistanceMatrix& dist,
                          int u, int v, bool geodesic_only,
                          std::vector<std::vector<int>>& out) {
    out.clear();
    const int pair_dist = dist.at(u, v);
    std::vector<char> visited(static_cast<size_t>(d.order()), 0);
    std::vector<int> path{u};
    std::vector<size_t> cursor{0};
    visited[static_cast<size_t>(u)] = 1;
    std::uint64_t steps = 0;
    while (!path.empty()) {
        const int w = path.back();
        const auto& nb = d.out_neighbours(w);
        if (cursor.back() >= nb.size()) {
            visited[static_cast<size_t>(w)] = 0;
            path.pop_back();
            cursor.pop_back();
            continue;
        }
        const int z = nb[cursor.back()++];
        if (++steps > kEnumStepCap) return false;
        if (geodesic_only && dist.at(u, w) + 1 + dist.at(z, v) != pair_dist) continue;
        if (z == v) {
            path.push_back(z);
            out.push_back(path);
            path.pop_back();
            if (static_cast<int>(out.size()) > kPathCap) return false;
            continue;
        }
        if (visited[static_cast<size_t>(z)]) continue;
        visited[static_cast<size_t>(z)] = 1;
        path.push_back(z);
        cursor.push_back(0);
    }
    return true;
}

void path_to_items(const Digraph& d, const std::vector<int>& path,
                   bool vertex_mode, std::vector<int>& items) {
    items.clear();
    if (vertex_mode) {
        for (size_t i = 1; i + 1 < path.size(); ++i) items.push_back(path[i]);
    } else {
        for (size_t i = 0; i + 1 < path.size(); ++i)
            items.push_back(d.arc_index(path[i], path[i + 1]));
    }
}

Plan build_plan(const Digraph& d, Parameter p, const DistanceMatrix& dist) {
    Plan plan;
    plan.vertex_mode = is_vertex_parameter(p);
    plan.geodesic_mode = is_geodesic_parameter(p);
    plan.n_items = plan.vertex_mode ? d.order() : d.arc_count();

    const int n = d.order();
    std::vector<std::vector<int>> item2paths(static_cast<size_t>(plan.n_items));
    std::vector<std::vector<int>> cand;
    std::vector<int> items;
    plan.path_offset.push_back(0);

    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const int pd = dist.at(u, v);
            // pairs whose shortest candidate has at most one constrained
            // item are satisfied by every colouring
            if (plan.vertex_mode ? (pd <= 2) : (pd == 1)) continue;
            if (!enumerate_candidates(d, dist, u, v, plan.geodesic_mode, cand)) {
                plan.rich_pairs.emplace_back(u, v);
                continue;
            }
            if (cand.empty())
                throw std::logic_error("build_plan: no candidate path for a reachable pair");
            const int slot = plan.n_slots++;
            plan.pair_path_count.push_back(static_cast<int>(cand.size()));
            for (const auto& pv : cand) {
                const int pid = plan.n_paths++;
                plan.path_pair.push_back(slot);
                path_to_items(d, pv, plan.vertex_mode, items);
                for (int it : items) {
                    plan.path_items.push_back(it);
                    item2paths[static_cast<size_t>(it)].push_back(pid);
                }
                plan.path_offset.push_back(static_cast<int>(plan.path_items.size()));
            }
        }
    }

    plan.item_offset.push_back(0);
    for (int it = 0; it < plan.n_items; ++it) {
        for (int pid : item2paths[static_cast<size_t>(it)]) plan.item_paths.push_back(pid);
        plan.item_offset.push_back(static_cast<int>(plan.item_paths.size()));
    }
    return plan;
}

// Incrementally maintained failure counters. A path is broken as soon as two
// of its already-coloured items share a colour; a pair is dead when all of
// its candidates are broken. A dead pair can never be revived by colouring
// more items, so dead_pairs > 0 prunes the whole subtree.
struct SearchState {
    const Plan* plan = nullptr;
    int K = 0;
    std::vector<int> colour;
    std::vector<int> path_colour_count;  // n_paths * K
    std::vector<int> path_dup;           // duplicated colours per path
    std::vector<int> pair_dead;          // broken candidates per pair slot
    int dead_pairs = 0;

    void init(const Plan& pl, int k) {
        plan = &pl;
        K = k;
        colour.assign(static_cast<size_t>(pl.n_items), -1);
        path_colour_count.assign(static_cast<size_t>(pl.n_paths) * static_cast<size_t>(k), 0);
        path_dup.assign(static_cast<size_t>(pl.n_paths), 0);
        pair_dead.assign(static_cast<size_t>(pl.n_slots), 0);
        dead_pairs = 0;
    }

    void assign(int item, int c) {
        colour[static_cast<size_t>(item)] = c;
        const int b = plan->item_offset[static_cast<size_t>(item)];
        const int e = plan->item_offset[static_cast<size_t>(item) + 1];
        for (int idx = b; idx < e; ++idx) {
            const int pth = plan->item_paths[static_cast<size_t>(idx)];
            if (++path_colour_count[static_cast<size_t>(pth) * static_cast<size_t>(K) + static_cast<size_t>(c)] == 2) {
                if (path_dup[static_cast<size_t>(pth)]++ == 0) {
                    const int s = plan->path_pair[static_cast<size_t>(pth)];
                    if (++pair_dead[static_cast<size_t>(s)] == plan->pair_path_count[static_cast<size_t>(s)])
                        ++dead_pairs;
                }
            }
        }
    }

    void unassign(int item, int c) {
        const int b = plan->item_offset[static_cast<size_t>(item)];
        const int e = plan->item_offset[static_cast<size_t>(item) + 1];
        for (int idx = b; idx < e; ++idx) {
            const int pth = plan->item_paths[static_cast<size_t>(idx)];
            if (--path_colour_count[static_cast<size_t>(pth) * static_cast<size_t>(K) + static_cast<size_t>(c)] == 1) {
                if (--path_dup[static_cast<size_t>(pth)] == 0) {
                    const int s = plan->path_pair[static_cast<size_t>(pth)];
                    if (pair_dead[static_cast<size_t>(s)]-- == plan->pair_path_count[static_cast<size_t>(s)])
                        --dead_pairs;
                }
            }
        }
        colour[static_cast<size_t>(item)] = -1;
    }
};

bool leaf_valid(const Digraph& d, const Plan& plan, const SearchState& st) {
    if (plan.rich_pairs.empty()) return true;
    if (plan.vertex_mode) {
        VertexColouring c(d.order(), st.K, st.colour);
        for (auto [u, v] : plan.rich_pairs) {
            const bool ok = plan.geodesic_mode ? has_rainbow_geodesic(d, c, u, v)
                                               : has_rainbow_path(d, c, u, v);
            if (!ok) return false;
        }
    } else {
        ArcColouring c(d.arc_count(), st.K, st.colour);
        for (auto [u, v] : plan.rich_pairs) {
            const bool ok = plan.geodesic_mode ? has_rainbow_geodesic_arcs(d, c, u, v)
                                               : has_rainbow_path_arcs(d, c, u, v);
            if (!ok) return false;
        }
    }
    return true;
}

struct BlockOutcome {
    bool found = false;
    std::vector<int> witness;
};

struct SharedSearch {
    const Digraph* d = nullptr;
    const Plan* plan = nullptr;
    int K = 0;
    int N = 0;
    std::vector<std::vector<int>> prefixes;
    std::vector<BlockOutcome> outcomes;
    std::atomic<int> next_block{0};
    std::atomic<int> best_block{INT_MAX};
    std::atomic<bool> timed_out{false};
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> leaves{0};
};

// One worker draining the block queue. Blocks are restricted-growth-string
// prefixes in lexicographic order; the winning witness is the one in the
// lowest-numbered block, so a block may be cancelled only when a witness in
// an earlier block is already known. That keeps the reported witness
// identical for every worker count.
struct Worker {
    SharedSearch* sh = nullptr;
    SearchState st;
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t tick_count = 0;
    int cur_block = -1;
    bool stop_block = false;
    bool found = false;
    std::vector<int> witness;

    bool tick() {
        if ((++tick_count & 1023u) == 0) {
            if (sh->timed_out.load(std::memory_order_relaxed)) {
                stop_block = true;
            } else if (sh->has_deadline && Clock::now() > sh->deadline) {
                sh->timed_out.store(true, std::memory_order_relaxed);
                stop_block = true;
            } else if (cur_block > sh->best_block.load(std::memory_order_relaxed)) {
                stop_block = true;
            }
        }
        return stop_block;
    }

    bool dfs(int pos, int used) {
        if (tick()) return false;
        if (pos == sh->N) {
            ++leaves;
            if (leaf_valid(*sh->d, *sh->plan, st)) {
                witness = st.colour;
                found = true;
                return true;
            }
            return false;
        }
        const int cmax = std::min(used, sh->K - 1);
        for (int c = 0; c <= cmax; ++c) {
            const int nused = used + (c == used ? 1 : 0);
            if (nused + (sh->N - pos - 1) < sh->K) continue;
            ++nodes;
            st.assign(pos, c);
            if (st.dead_pairs == 0 && dfs(pos + 1, nused)) {
                st.unassign(pos, c);
                return true;
            }
            st.unassign(pos, c);
            if (stop_block) return false;
        }
        return false;
    }

    void run() {
        st.init(*sh->plan, sh->K);
        while (true) {
            const int b = sh->next_block.fetch_add(1, std::memory_order_relaxed);
            if (b >= static_cast<int>(sh->prefixes.size())) break;
            if (sh->timed_out.load(std::memory_order_relaxed)) break;
            if (b > sh->best_block.load(std::memory_order_relaxed)) continue;
            cur_block = b;
            stop_block = false;
            found = false;
            const auto& pre = sh->prefixes[static_cast<size_t>(b)];
            int used = 0;
            int applied = 0;
            bool dead = false;
            for (size_t i = 0; i < pre.size(); ++i) {
                ++nodes;
                st.assign(static_cast<int>(i), pre[i]);
                ++applied;
                used = std::max(used, pre[i] + 1);
                if (st.dead_pairs != 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead && dfs(static_cast<int>(pre.size()), used) && found) {
                sh->outcomes[static_cast<size_t>(b)].found = true;
                sh->outcomes[static_cast<size_t>(b)].witness = witness;
                int cur = sh->best_block.load(std::memory_order_relaxed);
                while (b < cur &&
                       !sh->best_block.compare_exchange_weak(cur, b, std::memory_order_relaxed)) {
                }
            }
            for (int i = applied - 1; i >= 0; --i)
                st.unassign(i, pre[static_cast<size_t>(i)]);
        }
        sh->nodes.fetch_add(nodes, std::memory_order_relaxed);
        sh->leaves.fetch_add(leaves, std::memory_order_relaxed);
        nodes = 0;
        leaves = 0;
    }
};

enum class KStatus { refuted, found, timeout };

struct KOutcome {
    KStatus status = KStatus::refuted;
    std::vector<int> witness;
};

// Lexicographic restricted-growth prefixes of the given depth, pruned to
// those still able to reach exactly K classes.
std::vector<std::vector<int>> grow_prefixes(int N, int K, int min_count) {
    std::vector<std::vector<int>> cur{{}};
    int depth = 0;
    while (static_cast<int>(cur.size()) < min_count && depth < N &&
           static_cast<int>(cur.size()) < 65536) {
        std::vector<std::vector<int>> next;
        for (const auto& pre : cur) {
            int used = 0;
            for (int c : pre) used = std::max(used, c + 1);
            const int cmax = std::min(used, K - 1);
            for (int c = 0; c <= cmax; ++c) {
                const int nused = used + (c == used ? 1 : 0);
                if (nused + (N - depth - 1) < K) continue;
                auto ext = pre;
                ext.push_back(c);
                next.push_back(std::move(ext));
            }
        }
        if (next.empty()) break;
        cur = std::move(next);
        ++depth;
    }
    return cur;
}

KOutcome search_K(const Digraph& d, const Plan& plan, int K, const SolveOptions& opts,
                  Clock::time_point deadline, bool has_deadline, SolveStats& stats) {
    SharedSearch sh;
    sh.d = &d;
    sh.plan = &plan;
    sh.K = K;
    sh.N = plan.n_items;
    sh.deadline = deadline;
    sh.has_deadline = has_deadline;

    const int workers = std::max(1, opts.workers);
    sh.prefixes = (workers == 1) ? std::vector<std::vector<int>>{{}}
                                 : grow_prefixes(sh.N, K, 4 * workers);
    sh.outcomes.resize(sh.prefixes.size());

    if (workers == 1 || sh.prefixes.size() == 1) {
        Worker w;
        w.sh = &sh;
        w.run();
    } else {
        const int nthreads = std::min<int>(workers, static_cast<int>(sh.prefixes.size()));
        std::vector<std::thread> pool;
        std::vector<Worker> ws(static_cast<size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) {
            ws[static_cast<size_t>(i)].sh = &sh;
            pool.emplace_back([&ws, i] { ws[static_cast<size_t>(i)].run(); });
        }
        for (auto& t : pool) t.join();
    }

    stats.states_expanded += sh.nodes.load();
    stats.colourings_tested += sh.leaves.load();

    const int best = sh.best_block.load();
    if (best != INT_MAX)
        return {KStatus::found, sh.outcomes[static_cast<size_t>(best)].witness};
    if (sh.timed_out.load()) return {KStatus::timeout, {}};
    return {KStatus::refuted, {}};
}

// oracle_mode enumeration: every K^N assignment in odometer order, each
// checked with the production verifier; no pruning, no canonical restriction.
KOutcome odometer_K(const Digraph& d, Parameter p, int K,
                    Clock::time_point deadline, bool has_deadline, SolveStats& stats) {
    const bool vertex = is_vertex_parameter(p);
    const int N = vertex ? d.order() : d.arc_count();
    std::vector<int> col(static_cast<size_t>(N), 0);
    std::uint64_t tick = 0;
    while (true) {
        if ((++tick & 1023u) == 0 && has_deadline && Clock::now() > deadline)
            return {KStatus::timeout, {}};
        ++stats.colourings_tested;
        bool ok = false;
        if (vertex) {
            VertexColouring c(d.order(), K, col);
            ok = static_cast<bool>(p == Parameter::rvc ? is_rvc_colouring(d, c)
                                                       : is_srvc_colouring(d, c));
        } else {
            ArcColouring c(d.arc_count(), K, col);
            ok = static_cast<bool>(p == Parameter::rc ? is_rc_colouring(d, c)
                                                      : is_src_colouring(d, c));
        }
        if (ok) return {KStatus::found, col};
        int i = N - 1;
        while (i >= 0 && col[static_cast<size_t>(i)] == K - 1) {
            col[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return {KStatus::refuted, {}};
        ++col[static_cast<size_t>(i)];
    }
}

}  // namespace

SolveResult compute(const Digraph& d, Parameter p, const SolveOptions& opts) {
    const auto t0 = Clock::now();
    if (d.order() < 2)
        throw std::invalid_argument("compute: digraph must have at least two vertices");
    if (!is_strongly_connected(d))
        throw not_strongly_connected("compute: digraph is not strongly connected");

    SolveResult res;
    res.parameter = p;
    const bool vertex = is_vertex_parameter(p);
    const int N = vertex ? d.order() : d.arc_count();

    const DistanceMatrix dist = all_pairs_distances(d);
    int diam = 0;
    for (int u = 0; u < d.order(); ++u)
        for (int v = 0; v < d.order(); ++v) diam = std::max(diam, dist.at(u, v));

    const auto finish = [&]() {
        res.stats.wall_seconds =
            std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    };

    const auto set_witness_checked = [&](const std::vector<int>& cols, int K) {
        if (vertex) {
            VertexColouring c(d.order(), K, cols);
            const VerifyResult vr =
                p == Parameter::rvc ? is_rvc_colouring(d, c) : is_srvc_colouring(d, c);
            if (!vr) throw std::logic_error("compute: witness failed re-verification");
            res.vertex_witness = std::move(c);
        } else {
            ArcColouring c(d.arc_count(), K, cols);
            const VerifyResult vr =
                p == Parameter::rc ? is_rc_colouring(d, c) : is_src_colouring(d, c);
            if (!vr) throw std::logic_error("compute: witness failed re-verification");
            res.arc_witness = std::move(c);
        }
    };

    // diameter shortcuts; these are exact, not heuristics
    if (diam == 1) {
        const int value = vertex ? 0 : 1;
        res.exact = true;
        res.value = value;
        res.lower_bound = res.upper_bound = value;
        res.refuted_budget = value - 1;
        set_witness_checked(std::vector<int>(static_cast<size_t>(N), 0), value);
        return finish();
    }
    if (vertex && diam == 2) {
        res.exact = true;
        res.value = 1;
        res.lower_bound = res.upper_bound = 1;
        res.refuted_budget = 0;
        set_witness_checked(std::vector<int>(static_cast<size_t>(N), 0), 1);
        return finish();
    }

    const int lb = vertex ? diam - 1 : diam;
    const int cap = (opts.max_budget >= 0) ? std::min(opts.max_budget, N) : N;
    res.lower_bound = lb;
    res.upper_bound = N;
    res.refuted_budget = lb - 1;

    const bool has_deadline = opts.time_limit > 0.0;
    const Clock::time_point deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(opts.time_limit));

    Plan plan;
    if (!opts.oracle_mode) plan = build_plan(d, p, dist);

    for (int K = lb; K <= cap; ++K) {
        const KOutcome out =
            opts.oracle_mode ? odometer_K(d, p, K, deadline, has_deadline, res.stats)
                             : search_K(d, plan, K, opts, deadline, has_deadline, res.stats);
        if (out.status == KStatus::found) {
            res.exact = true;
            res.value = K;
            res.lower_bound = K;
            res.upper_bound = K;
            res.refuted_budget = K - 1;
            set_witness_checked(out.witness, K);
            return finish();
        }
        if (out.status == KStatus::timeout) {
            res.exact = false;
            res.refuted_budget = K - 1;
            res.lower_bound = K;
            res.upper_bound = N;
            return finish();
        }
        res.refuted_budget = K;
        res.lower_bound = K + 1;
    }
    res.exact = false;
    return finish();
}

SolveResult compute_rvc(const Digraph& d, const SolveOptions& opts) {
    return compute(d, Parameter::rvc, opts);
}
SolveResult compute_srvc(const Digraph& d, const SolveOptions& opts) {
    return compute(d, Parameter::srvc, opts);
}
SolveResult compute_rc(const Digraph& d, const SolveOptions& opts) {
    return compute(d, Parameter::rc, opts);
}
SolveResult compute_src(const Digraph& d, const SolveOptions& opts) {
    return compute(d, Parameter::src, opts);
}

namespace {

// The oracle below shares nothing with the search machinery above: distances
// come from Floyd-Warshall instead of BFS, candidate paths are re-enumerated
// recursively for every colouring, and colour clashes are found by sorting.
struct OracleContext {
    const Digraph* d = nullptr;
    bool vertex_mode = true;
    bool geodesic_mode = false;
    const std::vector<int>* colour = nullptr;
    std::vector<std::vector<int>> dist;
};

bool oracle_path_accepts(const OracleContext& ctx, const std::vector<int>& path) {
    std::vector<int> cols;
    if (ctx.vertex_mode) {
        for (size_t i = 1; i + 1 < path.size(); ++i)
            cols.push_back((*ctx.colour)[static_cast<size_t>(path[i])]);
    } else {
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const int idx = ctx.d->arc_index(path[i], path[i + 1]);
            cols.push_back((*ctx.colour)[static_cast<size_t>(idx)]);
        }
    }
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

bool oracle_extend(const OracleContext& ctx, std::vector<int>& path,
                   std::vector<char>& on_path, int v) {
    const int w = path.back();
    if (w == v) return oracle_path_accepts(ctx, path);
    const int len = static_cast<int>(path.size()) - 1;
    if (ctx.geodesic_mode && len >= ctx.dist[static_cast<size_t>(path.front())][static_cast<size_t>(v)])
        return false;
    for (int z : ctx.d->out_neighbours(w)) {
        if (on_path[static_cast<size_t>(z)]) continue;
        if (ctx.geodesic_mode) {
            const int u = path.front();
            if (ctx.dist[static_cast<size_t>(u)][static_cast<size_t>(w)] + 1 +
                    ctx.dist[static_cast<size_t>(z)][static_cast<size_t>(v)] !=
                ctx.dist[static_cast<size_t>(u)][static_cast<size_t>(v)])
                continue;
        }
        path.push_back(z);
        on_path[static_cast<size_t>(z)] = 1;
        const bool ok = oracle_extend(ctx, path, on_path, v);
        on_path[static_cast<size_t>(z)] = 0;
        path.pop_back();
        if (ok) return true;
    }
    return false;
}

bool oracle_pair_ok(const OracleContext& ctx, int u, int v) {
    std::vector<int> path{u};
    std::vector<char> on_path(static_cast<size_t>(ctx.d->order()), 0);
    on_path[static_cast<size_t>(u)] = 1;
    return oracle_extend(ctx, path, on_path, v);
}

}  // namespace

bool oracle_value(const Digraph& d, Parameter p, int K) {
    const bool vertex = is_vertex_parameter(p);
    const int n = d.order();
    const int m = d.arc_count();
    if (vertex && n > 8)
        throw std::invalid_argument("oracle_value: vertex oracle limited to n <= 8");
    if (!vertex && m > 14)
        throw std::invalid_argument("oracle_value: arc oracle limited to |A| <= 14");
    const int N = vertex ? n : m;
    if (vertex ? (K < 0 || K > n) : (K < 1 || K > m))
        throw std::invalid_argument("oracle_value: colour budget out of range");

    OracleContext ctx;
    ctx.d = &d;
    ctx.vertex_mode = vertex;
    ctx.geodesic_mode = is_geodesic_parameter(p);

    const int inf = INT_MAX / 4;
    ctx.dist.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), inf));
    for (int i = 0; i < n; ++i) ctx.dist[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0;
    for (const auto& [a, b] : d.arcs())
        ctx.dist[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                ctx.dist[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    std::min(ctx.dist[static_cast<size_t>(i)][static_cast<size_t>(j)],
                             ctx.dist[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                                 ctx.dist[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ctx.dist[static_cast<size_t>(i)][static_cast<size_t>(j)] >= inf)
                throw not_strongly_connected("oracle_value: digraph is not strongly connected");

    if (vertex && K == 0) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && !d.has_arc(u, v)) return false;
        return true;
    }

    std::vector<int> col(static_cast<size_t>(N), 0);
    ctx.colour = &col;
    while (true) {
        bool all_ok = true;
        for (int u = 0; u < n && all_ok; ++u)
            for (int v = 0; v < n && all_ok; ++v)
                if (u != v && !oracle_pair_ok(ctx, u, v)) all_ok = false;
        if (all_ok) return true;
        int i = N - 1;
        while (i >= 0 && col[static_cast<size_t>(i)] == K - 1) {
            col[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return false;
        ++col[static_cast<size_t>(i)];
    }
}

}  // namespace rvc

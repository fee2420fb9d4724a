#include "rvc/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace rvc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Digraph gen_bioriented_path(int n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<Arc> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return biorient(n, edges);
}

Digraph gen_bioriented_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Arc> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return biorient(n, edges);
}

Digraph gen_bioriented_wheel(int n) {
    require(n >= 3, "wheel needs n >= 3 rim vertices");
    std::vector<Arc> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
    }
    return biorient(n + 1, edges);
}

Digraph gen_bioriented_complete(int n) {
    require(n >= 2, "complete digraph needs n >= 2");
    std::vector<Arc> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return biorient(n, edges);
}

Digraph gen_bioriented_star(int n) {
    require(n >= 2, "star needs at least two leaves");
    std::vector<Arc> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n);
    return biorient(n + 1, edges);
}

Digraph gen_bioriented_complete_multipartite(const std::vector<int>& class_sizes) {
    require(class_sizes.size() >= 2, "need at least two classes");
    int n = 0;
    std::vector<int> cls;
    for (size_t c = 0; c < class_sizes.size(); ++c) {
        require(class_sizes[c] >= 1, "class sizes must be positive");
        for (int i = 0; i < class_sizes[c]; ++i) cls.push_back(static_cast<int>(c));
        n += class_sizes[c];
    }
    std::vector<Arc> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cls[u] != cls[v]) edges.emplace_back(u, v);
    return biorient(n, edges);
}

Digraph gen_directed_cycle(int n) {
    require(n >= 3, "directed cycle needs n >= 3");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return build_digraph(n, arcs);
}

Digraph gen_cycle_subdigraph(int n, const std::vector<int>& asym) {
    require(n >= 3, "cycle subdigraph needs n >= 3");
    require(!asym.empty(), "need at least one asymmetric position");
    std::vector<char> is_asym(n, 0);
    for (int p : asym) {
        require(p >= 0 && p < n, "asymmetric position out of range");
        is_asym[p] = 1;
    }
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        arcs.emplace_back(i, j);
        if (!is_asym[i]) arcs.emplace_back(j, i);
    }
    return build_digraph(n, arcs);
}

namespace {

// Validates that d consists of the full forward cycle plus some of the
// reverse arcs, and returns the sorted positions whose reverse arc is
// missing. Position i is the arc pair between v_i and v_{i+1}.
std::vector<int> cycle_asym_positions(const Digraph& d) {
    int n = d.order();
    require(n >= 3, "cycle subdigraph needs n >= 3");
    for (const auto& [u, v] : d.arcs()) {
        bool forward = v == (u + 1) % n;
        bool backward = u == (v + 1) % n;
        require(forward || backward, "arc does not lie on the cycle");
    }
    std::vector<int> asym;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        require(d.has_arc(i, j), "forward cycle arc missing");
        if (!d.has_arc(j, i)) asym.push_back(i);
    }
    require(!asym.empty(), "no asymmetric arc: not a proper subdigraph of the bioriented cycle");
    return asym;
}

// Maximal cyclic runs of consecutive asymmetric positions, as (start, length)
// in the order encountered walking the cycle.
struct RunLayout {
    std::vector<int> starts;
    std::vector<int> lengths;
};

RunLayout asym_runs(int n, const std::vector<int>& asym) {
    RunLayout runs;
    int k = static_cast<int>(asym.size());
    if (k == n) {
        runs.starts = {0};
        runs.lengths = {n};
        return runs;
    }
    std::vector<char> is_asym(n, 0);
    for (int p : asym) is_asym[p] = 1;
    int anchor = 0;
    while (is_asym[anchor]) ++anchor;
    int run_len = 0, run_start = -1;
    for (int step = 1; step <= n; ++step) {
        int pos = (anchor + step) % n;
        if (is_asym[pos]) {
            if (run_len == 0) run_start = pos;
            ++run_len;
        } else if (run_len > 0) {
            runs.starts.push_back(run_start);
            runs.lengths.push_back(run_len);
            run_len = 0;
        }
    }
    return runs;
}

// Bioriented segment lengths for layouts with at most two runs: a single run
// leaves one segment of n-k edges plus a trivial one, two runs leave the two
// gaps between them.
std::pair<int, int> run_segments(int n, int k, const RunLayout& runs) {
    if (runs.starts.size() == 1) {
        int a = 0, b = n - k;
        return {std::min(a, b), std::max(a, b)};
    }
    int end0 = runs.starts[0] + runs.lengths[0];
    int end1 = runs.starts[1] + runs.lengths[1];
    int gap0 = ((runs.starts[1] - end0) % n + n) % n;
    int gap1 = ((runs.starts[0] - end1) % n + n) % n;
    return {std::min(gap0, gap1), std::max(gap0, gap1)};
}

}  // namespace

const char* cycle_class_name(CycleSubdigraphClass::Kind kind) {
    switch (kind) {
        case CycleSubdigraphClass::Kind::K_EQ_1: return "k1";
        case CycleSubdigraphClass::Kind::D1: return "D1";
        case CycleSubdigraphClass::Kind::D2: return "D2";
        case CycleSubdigraphClass::Kind::D3: return "D3";
        case CycleSubdigraphClass::Kind::D4: return "D4";
        case CycleSubdigraphClass::Kind::OTHER: return "other";
    }
    return "other";
}

CycleSubdigraphClass classify_cycle_subdigraph(const Digraph& d) {
    int n = d.order();
    auto asym = cycle_asym_positions(d);
    int k = static_cast<int>(asym.size());
    auto runs = asym_runs(n, asym);
    int blocks = static_cast<int>(runs.starts.size());

    CycleSubdigraphClass cls;
    cls.k = k;
    using Kind = CycleSubdigraphClass::Kind;
    cls.kind = Kind::OTHER;

    if (k == 1) {
        cls.kind = Kind::K_EQ_1;
    } else if (k == 2) {
        cls.kind = Kind::D1;
    } else if (k == 3 && blocks == 1) {
        cls.kind = Kind::D2;
    } else if (k == 3 && blocks == 2) {
        cls.kind = Kind::D3;
    } else if (k == 4 && blocks == 1) {
        cls.kind = Kind::D4;
    } else if (k == 4 && blocks == 2 && runs.lengths[0] == 2 && runs.lengths[1] == 2) {
        cls.kind = Kind::D4;
    }

    if (cls.kind != Kind::OTHER) {
        auto [p, pp] = run_segments(n, k, runs);
        cls.seg_p = p;
        cls.seg_p_prime = pp;
    }
    return cls;
}

namespace {

// Rotation r maps normalized position i to cycle position (i + r) mod n; ell
// is the normalized position of the second asymmetric block when one exists.
struct Rotation {
    int r = 0;
    int ell = 0;
};

// Normalized colour patterns, 1-based values indexed by normalized position.
std::vector<int> norm_single_asym(int n) {
    std::vector<int> norm(n, 0);
    for (int i = 1; i <= n - 2; ++i) norm[i] = i;
    norm[0] = (n + 1) / 2;
    norm[n - 1] = (n + 1) / 2 - 1;
    return norm;
}

std::vector<int> norm_two_wrap(int n, bool use_ell, int ell) {
    std::vector<int> norm(n, 0);
    for (int i = 1; i <= n - 2; ++i) norm[i] = i;
    if (use_ell && ell >= 1 && ell <= n - 3) {
        norm[n - 1] = ell;
        norm[0] = ell + 1;
    } else {
        norm[n - 1] = 1;
        norm[0] = 2;
    }
    return norm;
}

std::vector<int> norm_shift(int n, int zero_value) {
    std::vector<int> norm(n, 0);
    for (int i = 1; i <= n - 1; ++i) norm[i] = i;
    norm[0] = zero_value;
    return norm;
}

VertexColouring emit_rotated(int n, const std::vector<int>& norm, int r) {
    std::vector<int> ids(n, 0);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        ids[(i + r) % n] = norm[i] - 1;
        k = std::max(k, norm[i]);
    }
    return VertexColouring(n, k, std::move(ids));
}

// Candidate rotations for the two-asymmetric-arc layouts: anchor one arc (or
// pair) at the wrap position and record where the other lands.
std::vector<Rotation> d1_candidates(int n, const std::vector<int>& asym) {
    std::vector<Rotation> out;
    for (size_t t = 0; t < 2; ++t) {
        int p = asym[t];
        int other = asym[1 - t];
        int ell = ((other - p - 1) % n + n) % n;
        if (ell <= n - 3) out.push_back({(p + 1) % n, ell});
    }
    return out;
}

std::vector<Rotation> d4_candidates(int n, const std::vector<int>& asym) {
    std::vector<char> is_asym(n, 0);
    for (int p : asym) is_asym[p] = 1;
    std::vector<Rotation> out;
    for (int p : asym) {
        int pn = (p + 1) % n;
        if (!is_asym[pn]) continue;
        std::vector<int> rest;
        for (int q : asym)
            if (q != p && q != pn) rest.push_back(q);
        if (rest.size() != 2) continue;
        bool pair01 = (rest[0] + 1) % n == rest[1];
        bool pair10 = (rest[1] + 1) % n == rest[0];
        if (!pair01 && !pair10) continue;
        int q = pair01 ? rest[0] : rest[1];
        int ell = ((q - p - 1) % n + n) % n;
        if (ell >= 1 && ell <= n - 3) out.push_back({pn, ell});
    }
    return out;
}

Rotation pick_canonical(const std::vector<Rotation>& cands) {
    require(!cands.empty(), "no admissible rotation for this layout");
    Rotation best = cands[0];
    for (const auto& c : cands)
        if (c.ell < best.ell || (c.ell == best.ell && c.r < best.r)) best = c;
    return best;
}

// D3 layout: the consecutive pair wraps, the lone arc lands at ell.
Rotation d3_rotation(int n, const RunLayout& runs) {
    int pair_start = runs.lengths[0] == 2 ? runs.starts[0] : runs.starts[1];
    int lone = runs.lengths[0] == 1 ? runs.starts[0] : runs.starts[1];
    int r = (pair_start + 1) % n;
    int ell = ((lone - pair_start - 1) % n + n) % n;
    return {r, ell};
}

VertexColouring constant_colouring(int n) { return VertexColouring(n, 1, std::vector<int>(n, 0)); }

VertexColouring identity_colouring(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return VertexColouring(n, n, std::move(ids));
}

}  // namespace

VertexColouring predicted_cycle_colouring(const Digraph& d, CycleTarget target) {
    int n = d.order();
    auto cls = classify_cycle_subdigraph(d);
    auto asym = cycle_asym_positions(d);
    auto runs = asym_runs(n, asym);
    using Kind = CycleSubdigraphClass::Kind;
    int half = n / 2;

    auto small_both = [&](int bound) {
        return cls.seg_p <= bound && cls.seg_p_prime <= bound;
    };

    if (target == CycleTarget::rvc) {
        switch (cls.kind) {
            case Kind::K_EQ_1:
                if (n == 3) return constant_colouring(n);
                return emit_rotated(n, norm_single_asym(n), (asym[0] + 1) % n);
            case Kind::D1: {
                if (n == 3) return constant_colouring(n);
                auto rot = pick_canonical(d1_candidates(n, asym));
                return emit_rotated(n, norm_two_wrap(n, true, rot.ell), rot.r);
            }
            case Kind::D2: {
                if (n == 3) return constant_colouring(n);
                return emit_rotated(n, norm_two_wrap(n, false, 0), (runs.starts[0] + 1) % n);
            }
            case Kind::D4: {
                auto rot = pick_canonical(d4_candidates(n, asym));
                if (n == 4) return emit_rotated(n, norm_two_wrap(n, false, 0), rot.r);
                return emit_rotated(n, norm_shift(n, rot.ell + 1), rot.r);
            }
            case Kind::D3: {
                auto rot = d3_rotation(n, runs);
                return emit_rotated(n, norm_shift(n, rot.ell + 1), rot.r);
            }
            case Kind::OTHER:
                return identity_colouring(n);
        }
        return identity_colouring(n);
    }

    // srvc target
    switch (cls.kind) {
        case Kind::K_EQ_1:
            if (n == 3) return constant_colouring(n);
            return emit_rotated(n, norm_single_asym(n), (asym[0] + 1) % n);
        case Kind::D1: {
            if (n == 3) return constant_colouring(n);
            if (n <= 8 || small_both(half + 1)) {
                auto rot = pick_canonical(d1_candidates(n, asym));
                return emit_rotated(n, norm_two_wrap(n, true, rot.ell), rot.r);
            }
            if (cls.seg_p == 0 || cls.seg_p == half + 2 || cls.seg_p_prime == half + 2) {
                // the n-1 colour pattern needs the admissible segment at the wrap
                auto cands = d1_candidates(n, asym);
                for (const auto& rot : cands)
                    if (rot.ell == 0)
                        return emit_rotated(n, norm_shift(n, half), rot.r);
                for (const auto& rot : cands)
                    if (rot.ell == half + 2)
                        return emit_rotated(n, norm_shift(n, rot.ell), rot.r);
                throw std::logic_error("admissible rotation not found for D1 pattern");
            }
            return identity_colouring(n);
        }
        case Kind::D2:
            if (n == 3) return constant_colouring(n);
            if (n <= 8)
                return emit_rotated(n, norm_two_wrap(n, false, 0), (runs.starts[0] + 1) % n);
            return identity_colouring(n);
        case Kind::D3: {
            if (n <= 10 || small_both(half + 1)) {
                auto rot = d3_rotation(n, runs);
                int zero = rot.ell;
                if ((n <= 10 && rot.ell == 2) || (n >= 11 && rot.ell == (n + 1) / 2 - 3)) zero = rot.ell + 1;
                return emit_rotated(n, norm_shift(n, zero), rot.r);
            }
            return identity_colouring(n);
        }
        case Kind::D4: {
            auto rot = pick_canonical(d4_candidates(n, asym));
            if (n == 4) return emit_rotated(n, norm_two_wrap(n, false, 0), rot.r);
            if (n <= 8 || small_both(half))
                return emit_rotated(n, norm_shift(n, rot.ell + 1), rot.r);
            return identity_colouring(n);
        }
        case Kind::OTHER:
            return identity_colouring(n);
    }
    return identity_colouring(n);
}

bool check_claim2_condition(const Digraph& d, const VertexColouring& c,
                            bool geodesic_length_bound) {
    int n = d.order();
    auto asym = cycle_asym_positions(d);
    require(c.n == n, "colouring does not match the digraph order");
    std::vector<char> is_asym(n, 0);
    for (int p : asym) is_asym[p] = 1;

    // One side of the cycle strictly between a and b: a bioriented path with
    // pairwise distinct colours, and under the length bound at most
    // floor(n/2) edges.
    auto interval_ok = [&](int a, int b) {
        std::vector<int> cols;
        int prev = -1;
        for (int w = (a + 1) % n; w != b; w = (w + 1) % n) {
            if (prev >= 0 && is_asym[prev]) return false;
            cols.push_back(c.colour[w]);
            prev = w;
        }
        if (geodesic_length_bound && static_cast<int>(cols.size()) - 1 > n / 2) return false;
        std::sort(cols.begin(), cols.end());
        return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
    };

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (c.colour[u] != c.colour[v]) continue;
            if ((u + 1) % n == v || (v + 1) % n == u) return false;
            if (!interval_ok(u, v) || !interval_ok(v, u)) return false;
        }
    }
    return true;
}

VertexColouring bioriented_cycle_srvc_colouring(int n) {
    require(n == 11 || n >= 13, "two-block pattern applies to n = 11 and n >= 13");
    int hi = (n + 1) / 2;
    std::vector<int> ids(n, 0);
    for (int i = 0; i < hi; ++i) ids[i] = i;
    for (int j = 0; hi + j < n; ++j) ids[hi + j] = j;
    return VertexColouring(n, hi, std::move(ids));
}

VertexColouring bioriented_cycle_rvc_colouring(int n) {
    require(n >= 14 && n <= 16, "rvc construction recorded for n in {14, 15, 16}");
    if (n != 15) return bioriented_cycle_srvc_colouring(n);
    // Seven colours around the 15-cycle: every five consecutive vertices are
    // rainbow, and each pair of vertices six or seven apart has a rainbow
    // side, so one colour fewer than the two-block pattern suffices.
    std::vector<int> ids = {6, 0, 1, 2, 3, 6, 4, 5, 0, 1, 6, 2, 3, 4, 5};
    return VertexColouring(15, 7, std::move(ids));
}

Digraph gen_circulant(int n, const std::vector<int>& jumps) {
    require(n >= 2, "circulant needs n >= 2");
    require(!jumps.empty(), "need at least one jump");
    std::vector<Arc> arcs;
    for (int j : jumps) {
        require(j >= 1 && j <= n - 1, "jump out of range");
        for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + j) % n);
    }
    return build_digraph(n, arcs);
}

Digraph gen_circulant_consecutive(int n, int k) {
    require(k >= 1 && k <= n - 1, "jump bound out of range");
    std::vector<int> jumps(k);
    std::iota(jumps.begin(), jumps.end(), 1);
    return gen_circulant(n, jumps);
}

VertexColouring circulant_colouring(int n, int k, CirculantVariant variant) {
    require(n >= 3 && k >= 1 && k <= n - 1, "circulant parameters out of range");
    switch (variant) {
        case CirculantVariant::block: {
            std::vector<int> ids(n, 0);
            for (int i = 0; i < n; ++i) ids[i] = i / k;
            return VertexColouring(n, (n + k - 1) / k, std::move(ids));
        }
        case CirculantVariant::claim2_residue: {
            require(k >= 2 && n % k != 0 && n / k >= 2,
                    "residue pattern needs k >= 2, k not dividing n, and n >= 2k");
            int g = std::gcd(n, k);
            int a = (n + k - 1) / k - 1;
            std::vector<int> ids(n, 0);
            for (int r = 0; r < g; ++r)
                for (int l = 0; l < n / g; ++l) ids[(r + l * k) % n] = l % a;
            return VertexColouring(n, a, std::move(ids));
        }
        case CirculantVariant::case_b_i: {
            require(n % k == 1, "pattern needs n = ak + 1");
            int a = (n - 1) / k;
            require(a >= 3, "pattern needs a >= 3");
            require(n % (a - 1) == 0, "pattern needs a-1 dividing n");
            std::vector<int> ids(n, 0);
            for (int l = 0; l < n; ++l) ids[(l * k) % n] = l % (a - 1);
            return VertexColouring(n, a - 1, std::move(ids));
        }
        case CirculantVariant::case_b_ii_small_a: {
            require(n % k == 1, "pattern needs n = ak + 1");
            int a = (n - 1) / k;
            require(a >= 3, "pattern needs a >= 3");
            require(n % (a - 1) != 0, "pattern needs a-1 not dividing n");
            require(a < k + 2, "pattern needs a < k + 2");
            std::vector<int> step(n, -1);
            for (int j = 0; j <= k; ++j) step[j * (a - 1)] = 0;
            int next = 1;
            for (int l = 0; l < n; ++l) {
                if (step[l] < 0) {
                    step[l] = next;
                    next = next == a - 1 ? 1 : next + 1;
                }
            }
            std::vector<int> ids(n, 0);
            for (int l = 0; l < n; ++l) ids[(l * k) % n] = step[l];
            return VertexColouring(n, a, std::move(ids));
        }
        case CirculantVariant::case_c_small_a: {
            require(n % k == 0, "pattern needs n = ak");
            int a = n / k;
            require(a == 3 || a == 4, "pattern needs a in {3, 4}");
            std::vector<int> ids(n, 0);
            if (a == 3) {
                ids[0] = 0;
                ids[k] = 0;
                ids[2 * k] = 1;
            } else {
                ids[0] = 0;
                ids[2 * k] = 0;
                ids[k] = 1;
                ids[3 * k] = 2;
            }
            for (int l = 0; l < a; ++l)
                for (int r = 1; r < k; ++r) ids[l * k + r] = (ids[l * k] + r) % (a - 1);
            return VertexColouring(n, a - 1, std::move(ids));
        }
    }
    throw std::invalid_argument("unknown circulant colouring variant");
}

bool is_tournament(const Digraph& d) {
    int n = d.order();
    if (d.arc_count() != n * (n - 1) / 2) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    return true;
}

namespace {

Digraph random_tournament_draw(int n, std::mt19937_64& rng) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1)
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    return Digraph(n, std::move(arcs));
}

}  // namespace

Digraph gen_tournament(TournamentKind kind, int n, int k, std::uint64_t seed) {
    switch (kind) {
        case TournamentKind::T4:
            return build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
        case TournamentKind::T5_1:
            return build_digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                     {0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}});
        case TournamentKind::T_nk: {
            require(n >= 5 && k >= 2 && k <= n - 2, "need n >= 5 and 2 <= k <= n - 2");
            int base_n = k + 2;
            std::vector<Arc> arcs;
            for (int i = 0; i + 1 < base_n; ++i) arcs.emplace_back(i, i + 1);
            for (int j = 2; j < base_n; ++j)
                for (int i = 0; i + 2 <= j; ++i) arcs.emplace_back(j, i);
            Digraph base = build_digraph(base_n, arcs);
            int copies = n - base_n + 1;
            if (copies == 1) return base;
            std::vector<Arc> trans;
            for (int a = 0; a < copies; ++a)
                for (int b = a + 1; b < copies; ++b) trans.emplace_back(a, b);
            return expand_vertex(base, 0, Digraph(copies, std::move(trans)));
        }
        case TournamentKind::random_t: {
            require(n >= 3, "random tournament needs n >= 3");
            std::mt19937_64 rng(seed);
            for (;;) {
                Digraph t = random_tournament_draw(n, rng);
                if (is_strongly_connected(t)) return t;
            }
        }
        case TournamentKind::diam2_search: {
            require(n >= 5, "diameter-2 search needs n >= 5");
            std::mt19937_64 rng(seed);
            for (int attempt = 0; attempt < 100000; ++attempt) {
                Digraph t = random_tournament_draw(n, rng);
                if (!is_strongly_connected(t)) continue;
                if (diameter(t) == 2) return t;
            }
            throw std::runtime_error("no diameter-2 tournament found within the sample budget");
        }
    }
    throw std::invalid_argument("unknown tournament kind");
}

namespace {

// Deterministic geodesic: walk back from v always taking the smallest
// in-neighbour one step closer to u.
std::vector<int> canonical_geodesic(const Digraph& d, const DistanceMatrix& dist, int u, int v) {
    std::vector<int> rev{v};
    int cur = v;
    while (cur != u) {
        int want = dist.at(u, cur) - 1;
        int pick = -1;
        for (int z : d.in_neighbours(cur)) {
            if (dist.at(u, z) == want) {
                pick = z;
                break;
            }
        }
        require(pick >= 0, "geodesic predecessor missing");
        rev.push_back(pick);
        cur = pick;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

int matrix_diameter(const DistanceMatrix& dist, int n) {
    int d = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (dist.at(u, v) == kUnreachable) throw not_strongly_connected();
            d = std::max(d, dist.at(u, v));
        }
    return d;
}

// Highest in- or out-degree within the induced subtournament, smallest id on
// ties.
int extreme_degree_vertex(const Digraph& t, const std::vector<int>& verts, bool use_in) {
    int best = -1, best_deg = -1;
    for (int v : verts) {
        int deg = 0;
        for (int w : verts) {
            if (w == v) continue;
            if (use_in ? t.has_arc(w, v) : t.has_arc(v, w)) ++deg;
        }
        if (deg > best_deg) {
            best_deg = deg;
            best = v;
        }
    }
    return best;
}

}  // namespace

VertexColouring tournament_two_pair_colouring(const Digraph& t) {
    require(is_tournament(t), "needs a tournament");
    int n = t.order();
    auto dist = all_pairs_distances(t);
    int d = matrix_diameter(dist, n);
    if (d <= 2) return constant_colouring(n);

    int su = -1, sv = -1;
    for (int u = 0; u < n && su < 0; ++u)
        for (int v = 0; v < n; ++v)
            if (dist.at(u, v) == d) {
                su = u;
                sv = v;
                break;
            }
    auto path = canonical_geodesic(t, dist, su, sv);
    int v_succ = path[1];
    int u_pred = path[path.size() - 2];

    std::vector<int> ids(n, -1);
    ids[su] = 0;
    ids[u_pred] = 0;
    ids[sv] = 1;
    ids[v_succ] = 1;
    int next = 2;
    for (int w = 0; w < n; ++w)
        if (ids[w] < 0) ids[w] = next++;
    return VertexColouring(n, n - 2, std::move(ids));
}

VertexColouring tournament_layered_colouring(const Digraph& t) {
    require(is_tournament(t), "needs a tournament");
    int n = t.order();
    auto dist = all_pairs_distances(t);
    int d = matrix_diameter(dist, n);
    if (d <= 2) return constant_colouring(n);

    int a = -1;
    for (int u = 0; u < n && a < 0; ++u) {
        int ecc = 0;
        for (int v = 0; v < n; ++v) ecc = std::max(ecc, dist.at(u, v));
        if (ecc == d) a = u;
    }
    std::vector<std::vector<int>> layer(d + 1);
    for (int v = 0; v < n; ++v) layer[dist.at(a, v)].push_back(v);

    const int alpha = d, beta = d + 1, gamma = d + 2, delta = d + 3;
    std::vector<int> prov(n, 0);
    for (int i = 1; i <= d; ++i) {
        int value = i == 1 ? 1 : (i == d ? d - 2 : i);
        for (int v : layer[i]) prov[v] = value;
    }
    int p = extreme_degree_vertex(t, layer[1], true);
    int q = extreme_degree_vertex(t, layer[d], false);
    prov[p] = alpha;
    prov[q] = beta;
    prov[a] = beta;

    auto path = canonical_geodesic(t, dist, p, q);
    int len = static_cast<int>(path.size()) - 1;
    auto layer_of = [&](int v) { return dist.at(a, v); };
    auto path_vertex_in_layer = [&](int want) {
        for (int w : path)
            if (layer_of(w) == want) return w;
        throw std::logic_error("geodesic misses the expected layer");
    };
    if (len == d - 1) {
        prov[path_vertex_in_layer(d - 2)] = gamma;
    } else {
        require(len == d, "p-q geodesic longer than the diameter");
        int fs = -1, fh = -1;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (layer_of(path[i]) == layer_of(path[i + 1])) {
                fs = path[i];
                fh = path[i + 1];
            }
        require(fs >= 0, "flat arc missing on a length-d geodesic");
        if (layer_of(fs) != d - 2) {
            prov[path_vertex_in_layer(d - 2)] = gamma;
            prov[fs] = delta;
        } else {
            prov[fh] = gamma;
            prov[fs] = delta;
        }
    }

    std::vector<int> used = prov;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<int> ids(n, 0);
    for (int v = 0; v < n; ++v)
        ids[v] = static_cast<int>(std::lower_bound(used.begin(), used.end(), prov[v]) - used.begin());
    return VertexColouring(n, static_cast<int>(used.size()), std::move(ids));
}

namespace {

Digraph lemma5_h1() {
    std::vector<Arc> arcs = {{8, 0}, {0, 1}, {1, 8}, {8, 2}, {2, 3}, {3, 8},
                             {9, 4}, {4, 5}, {5, 9}, {9, 6}, {6, 7}, {7, 9}};
    for (int hub : {8, 9})
        for (int mid : {10, 11, 12, 13}) {
            arcs.emplace_back(hub, mid);
            arcs.emplace_back(mid, hub);
        }
    return build_digraph(14, arcs);
}

ArcColouring lemma5_h1_colouring(const Digraph& h1) {
    std::vector<int> col(h1.arc_count(), -1);
    auto put = [&](int u, int v, int colour) { col[h1.arc_index(u, v)] = colour - 1; };
    put(0, 1, 1);
    put(2, 3, 2);
    put(4, 5, 3);
    put(6, 7, 4);
    for (auto [u, v] : {Arc{1, 8}, Arc{3, 8}, Arc{5, 9}, Arc{7, 9}}) put(u, v, 5);
    for (auto [u, v] : {Arc{8, 0}, Arc{8, 2}, Arc{9, 4}, Arc{9, 6}}) put(u, v, 6);
    for (int mid : {10, 12}) {
        put(8, mid, 3);
        put(mid, 8, 3);
    }
    for (int mid : {11, 13}) {
        put(8, mid, 4);
        put(mid, 8, 4);
    }
    for (int mid : {10, 11}) {
        put(9, mid, 1);
        put(mid, 9, 1);
    }
    for (int mid : {12, 13}) {
        put(9, mid, 2);
        put(mid, 9, 2);
    }
    return ArcColouring(h1.arc_count(), 6, std::move(col));
}

Digraph lemma5_h2() {
    std::vector<Arc> arcs = {{0, 1}, {1, 8}, {8, 0},  {2, 3}, {3, 9}, {9, 2},
                             {10, 4}, {4, 5}, {5, 10}, {11, 6}, {6, 7}, {7, 11}};
    auto both = [&](int u, int v) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    };
    both(12, 8);
    both(12, 9);
    both(13, 10);
    both(13, 11);
    both(8, 9);
    both(10, 11);
    for (int leaf : {14, 15, 16, 17}) both(12, leaf);
    for (int leaf : {18, 19, 20, 21}) both(13, leaf);
    both(14, 18);
    both(15, 19);
    both(16, 20);
    both(17, 21);
    return build_digraph(22, arcs);
}

VertexColouring lemma5_h2_colouring() {
    std::vector<int> ids = {7, 8, 7, 8, 7, 8, 7, 8, 1, 2, 3, 4, 5, 6, 3, 4, 3, 4, 1, 1, 2, 2};
    for (int& x : ids) --x;
    return VertexColouring(22, 8, std::move(ids));
}

}  // namespace

SeparationData gen_lemma5(SeparationInstance which) {
    switch (which) {
        case SeparationInstance::H1: {
            Digraph h1 = lemma5_h1();
            ArcColouring col = lemma5_h1_colouring(h1);
            return SeparationData{std::move(h1), std::move(col), std::nullopt};
        }
        case SeparationInstance::D1: {
            Digraph h1 = lemma5_h1();
            std::vector<Arc> arcs = h1.arcs();
            arcs.emplace_back(8, 9);
            return SeparationData{build_digraph(14, arcs), std::nullopt, std::nullopt};
        }
        case SeparationInstance::H2:
            return SeparationData{lemma5_h2(), std::nullopt, lemma5_h2_colouring()};
        case SeparationInstance::D2: {
            Digraph h2 = lemma5_h2();
            std::vector<Arc> arcs = h2.arcs();
            arcs.emplace_back(12, 21);
            return SeparationData{build_digraph(22, arcs), std::nullopt, std::nullopt};
        }
    }
    throw std::invalid_argument("unknown separation instance");
}

Digraph gen_lemma6(GapFamily which, int s) {
    if (which == GapFamily::fan) {
        require(s >= 4, "fan needs s >= 4");
        long long t = static_cast<long long>(s - 1) * (s - 2) * (s - 3) / 6 + 1;
        require(t <= 5000, "fan size out of range");
        int tn = static_cast<int>(t);
        std::vector<Arc> arcs;
        for (int i = 0; i < tn; ++i) {
            int x = 1 + 2 * i, y = 2 + 2 * i;
            arcs.emplace_back(0, x);
            arcs.emplace_back(x, y);
            arcs.emplace_back(y, 0);
        }
        return build_digraph(1 + 2 * tn, arcs);
    }
    require(s >= 2, "pendant family needs s >= 2");
    std::vector<Arc> edges;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < s; ++i) edges.emplace_back(i, s + i);
    return biorient(2 * s, edges);
}

Digraph build_family(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "path") return gen_bioriented_path(spec.n);
    if (f == "cycle") return gen_bioriented_cycle(spec.n);
    if (f == "wheel") return gen_bioriented_wheel(spec.n);
    if (f == "complete") return gen_bioriented_complete(spec.n);
    if (f == "star") return gen_bioriented_star(spec.n);
    if (f == "multipartite") return gen_bioriented_complete_multipartite(spec.class_sizes);
    if (f == "dicycle") return gen_directed_cycle(spec.n);
    if (f == "cycle-sub") return gen_cycle_subdigraph(spec.n, spec.asym_positions);
    if (f == "circulant") return gen_circulant_consecutive(spec.n, spec.k);
    if (f == "t4") return gen_tournament(TournamentKind::T4);
    if (f == "t5_1") return gen_tournament(TournamentKind::T5_1);
    if (f == "t_nk") return gen_tournament(TournamentKind::T_nk, spec.n, spec.k);
    if (f == "tournament-random")
        return gen_tournament(TournamentKind::random_t, spec.n, 0, spec.seed);
    if (f == "tournament-diam2")
        return gen_tournament(TournamentKind::diam2_search, spec.n, 0, spec.seed);
    if (f == "lemma5") {
        if (spec.which == "H1") return gen_lemma5(SeparationInstance::H1).d;
        if (spec.which == "D1") return gen_lemma5(SeparationInstance::D1).d;
        if (spec.which == "H2") return gen_lemma5(SeparationInstance::H2).d;
        if (spec.which == "D2") return gen_lemma5(SeparationInstance::D2).d;
        throw std::invalid_argument("lemma5 instance must be one of H1, D1, H2, D2");
    }
    if (f == "fan") return gen_lemma6(GapFamily::fan, spec.s);
    if (f == "pendant") return gen_lemma6(GapFamily::pendant, spec.s);
    throw std::invalid_argument("unknown family tag: " + f);
}

}  // namespace rvc

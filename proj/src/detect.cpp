#include "nearopt/detect.hpp"

#include <algorithm>

namespace nearopt {

Pattern Pattern::p2_plus_p4() {
    return {build_graph(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}}), "P2+P4"};
}

Pattern Pattern::k4_minus_e() {
    return {build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), "K4-e"};
}

Pattern Pattern::path(int t) {
    if (t < 1 || t > 7) throw std::invalid_argument("path pattern supports 1..7 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
    return {build_graph(t, es), "P" + std::to_string(t)};
}

Pattern Pattern::cycle(int t) {
    if (t < 3 || t > 7) throw std::invalid_argument("cycle pattern supports 3..7 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < t; ++i) es.emplace_back(i, (i + 1) % t);
    return {build_graph(t, es), "C" + std::to_string(t)};
}

bool embedding_is_induced(const Graph& g, const Pattern& p, const Embedding& e) {
    const int k = p.graph.n();
    if (static_cast<int>(e.map.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (e.map[static_cast<std::size_t>(i)] < 0 || e.map[static_cast<std::size_t>(i)] >= g.n())
            return false;
        for (int j = i + 1; j < k; ++j) {
            int hu = e.map[static_cast<std::size_t>(i)], hv = e.map[static_cast<std::size_t>(j)];
            if (hu == hv) return false;
            if (g.adjacent(hu, hv) != p.graph.adjacent(i, j)) return false;
        }
    }
    return true;
}

namespace {

struct InducedSearch {
    const Graph& g;
    const Graph& p;
    std::vector<Bitset> non;  // non-neighbor rows of g, self excluded
    std::vector<int> image;
    Bitset used;

    InducedSearch(const Graph& g_, const Graph& p_)
        : g(g_), p(p_), image(static_cast<std::size_t>(p_.n()), -1), used(g_.n()) {
        non.reserve(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) non.push_back(g.neighbors(v).complemented().minus(v));
    }

    bool run(int level) {
        if (level == p.n()) return true;
        Bitset cand = Bitset::full(g.n());
        for (int j = 0; j < level; ++j) {
            int hj = image[static_cast<std::size_t>(j)];
            cand &= p.adjacent(level, j) ? g.neighbors(hj) : non[static_cast<std::size_t>(hj)];
        }
        cand.subtract(used);
        for (int v : cand) {
            image[static_cast<std::size_t>(level)] = v;
            used.set(v);
            if (run(level + 1)) return true;
            used.reset(v);
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const Pattern& p) {
    const int k = p.graph.n();
    if (k > 7) throw std::invalid_argument("pattern too large (at most 7 vertices supported)");
    if (k > g.n()) return std::nullopt;
    InducedSearch search(g, p.graph);
    if (!search.run(0)) return std::nullopt;
    return Embedding{p.name, search.image};
}

ClassReport check_class_membership(const Graph& g) {
    ClassReport r;
    auto p2p4 = find_induced(g, Pattern::p2_plus_p4());
    auto k4e = find_induced(g, Pattern::k4_minus_e());
    r.p2p4_free = !p2p4.has_value();
    r.k4e_free = !k4e.has_value();
    if (p2p4)
        r.violation = std::move(p2p4);
    else if (k4e)
        r.violation = std::move(k4e);
    return r;
}

namespace {

// Enumerates induced L-cycles in canonical labeling: c0 is the cycle's
// minimum vertex, then the direction with c1 < c[L-1]. DFS in ascending
// candidate order emits representatives in lexicographic order.
template <typename Emit>
void chordless_cycles(const Graph& g, int L, Emit emit) {
    const int n = g.n();
    if (n < L) return;
    std::vector<Bitset> non;
    non.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) non.push_back(g.neighbors(v).complemented().minus(v));

    std::vector<int> path(static_cast<std::size_t>(L));
    Bitset used(n);

    auto dfs = [&](auto&& self, int depth) -> bool {  // returns true to stop
        const int prev = path[static_cast<std::size_t>(depth - 1)];
        Bitset cand = g.neighbors(prev);
        if (depth == L - 1) {
            cand &= g.neighbors(path[0]);
            for (int j = 1; j <= depth - 2; ++j) cand &= non[static_cast<std::size_t>(path[static_cast<std::size_t>(j)])];
        } else {
            for (int j = 0; j <= depth - 2; ++j) cand &= non[static_cast<std::size_t>(path[static_cast<std::size_t>(j)])];
        }
        cand.subtract(used);
        for (int v : cand) {
            if (v <= path[0]) continue;
            if (depth == L - 1) {
                if (path[1] > v) continue;  // canonical direction
                path[static_cast<std::size_t>(depth)] = v;
                if (emit(path)) return true;
            } else {
                path[static_cast<std::size_t>(depth)] = v;
                used.set(v);
                if (self(self, depth + 1)) return true;
                used.reset(v);
            }
        }
        return false;
    };

    for (int c0 = 0; c0 + L <= n + 0; ++c0) {
        // c0 must be the minimum of the cycle; higher starts cannot complete.
        path[0] = c0;
        used.set(c0);
        if (dfs(dfs, 1)) {
            used.reset(c0);
            return;
        }
        used.reset(c0);
    }
}

}  // namespace

std::vector<std::array<int, 5>> enumerate_induced_c5(const Graph& g) {
    std::vector<std::array<int, 5>> out;
    chordless_cycles(g, 5, [&](const std::vector<int>& p) {
        out.push_back({p[0], p[1], p[2], p[3], p[4]});
        return false;
    });
    return out;
}

std::optional<std::array<int, 5>> find_induced_c5(const Graph& g) {
    std::optional<std::array<int, 5>> out;
    chordless_cycles(g, 5, [&](const std::vector<int>& p) {
        out = {{p[0], p[1], p[2], p[3], p[4]}};
        return true;
    });
    return out;
}

std::optional<std::array<int, 7>> find_induced_c7(const Graph& g) {
    std::optional<std::array<int, 7>> out;
    chordless_cycles(g, 7, [&](const std::vector<int>& p) {
        out = {{p[0], p[1], p[2], p[3], p[4], p[5], p[6]}};
        return true;
    });
    return out;
}

}  // namespace nearopt

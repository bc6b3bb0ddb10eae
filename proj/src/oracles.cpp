#include "nearopt/oracles.hpp"

#include <algorithm>
#include <cstdlib>

namespace nearopt {

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;
    Bitset best_set;

    explicit CliqueSearch(const Graph& g_) : g(g_), best_set(g_.n()) {}

    void expand(Bitset r, int rcount, Bitset p) {
        if (rcount + p.count() <= best) return;
        if (p.empty()) {
            best = rcount;
            best_set = r;
            return;
        }
        // pivot: vertex of P with most neighbors inside P (lowest id tie-break)
        int pivot = -1, pivot_deg = -1;
        for (int u : p) {
            int d = (p & g.neighbors(u)).count();
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = u;
            }
        }
        Bitset branch = p.minus(g.neighbors(pivot));
        for (int v : branch) {
            expand(r.with(v), rcount + 1, p & g.neighbors(v));
            p.reset(v);
        }
    }
};

}  // namespace

CliqueResult clique_number(const Graph& g) {
    if (g.n() == 0) return {0, {}};
    CliqueSearch s(g);
    s.expand(Bitset(g.n()), 0, Bitset::full(g.n()));
    return {s.best, s.best_set.to_vector()};
}

std::uint64_t default_oracle_budget() {
    if (const char* env = std::getenv("NEAROPT_ORACLE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000ULL;
}

namespace {

// DSATUR-ordered exact search. Colors are introduced in canonical order
// (a vertex may use one color index beyond the current maximum), so the
// search space covers every coloring up to color renaming. Vertices of a
// maximum clique are pre-colored for symmetry breaking.
struct ChiSearch {
    const Graph& g;
    int n;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool aborted = false;

    std::vector<int> color;
    std::vector<std::uint64_t> forbid;  // bitmask of neighbor colors (< 64 colors)
    int best;                           // best complete coloring found
    std::vector<int> best_color;
    int colored = 0;

    ChiSearch(const Graph& g_, std::uint64_t b, int ub)
        : g(g_),
          n(g_.n()),
          budget(b),
          color(static_cast<std::size_t>(g_.n()), -1),
          forbid(static_cast<std::size_t>(g_.n()), 0),
          best(ub) {}

    void assign(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        ++colored;
        for (int u : g.neighbors(v)) forbid[static_cast<std::size_t>(u)] |= 1ULL << c;
    }
    void unassign(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        --colored;
        for (int u : g.neighbors(v)) {
            bool still = false;
            for (int w : g.neighbors(u))
                if (color[static_cast<std::size_t>(w)] == c) {
                    still = true;
                    break;
                }
            if (!still) forbid[static_cast<std::size_t>(u)] &= ~(1ULL << c);
        }
    }

    int pick() const {
        int bestv = -1, bestsat = -1, bestdeg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            int sat = std::popcount(forbid[static_cast<std::size_t>(v)]);
            int deg = g.degree(v);
            if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
                bestv = v;
                bestsat = sat;
                bestdeg = deg;
            }
        }
        return bestv;
    }

    void search(int used, int lower) {
        if (aborted || best == lower) return;
        if (++nodes > budget) {
            aborted = true;
            return;
        }
        if (colored == n) {
            best = used;
            best_color = color;
            return;
        }
        int v = pick();
        int maxc = std::min(used, best - 2);  // new color only while improving
        for (int c = 0; c <= maxc; ++c) {
            if (forbid[static_cast<std::size_t>(v)] & (1ULL << c)) continue;
            assign(v, c);
            search(std::max(used, c + 1), lower);
            unassign(v, c);
            if (aborted || best == lower) return;
        }
    }
};

Coloring greedy_dsatur(const Graph& g, int& colors_out) {
    const int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<std::uint64_t> forbid(static_cast<std::size_t>(n), 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int bestv = -1, bestsat = -1, bestdeg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            int sat = std::popcount(forbid[static_cast<std::size_t>(v)]);
            int deg = g.degree(v);
            if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
                bestv = v;
                bestsat = sat;
                bestdeg = deg;
            }
        }
        int c = 0;
        while (forbid[static_cast<std::size_t>(bestv)] & (1ULL << c)) ++c;
        color[static_cast<std::size_t>(bestv)] = c;
        used = std::max(used, c + 1);
        for (int u : g.neighbors(bestv)) forbid[static_cast<std::size_t>(u)] |= 1ULL << c;
    }
    colors_out = used;
    return Coloring::from_assignment(color, used);
}

}  // namespace

ChiResult chromatic_number(const Graph& g, std::uint64_t node_budget) {
    ChiResult r;
    if (g.n() == 0) {
        r.lower = r.upper = 0;
        r.exact = true;
        return r;
    }
    auto clique = clique_number(g);
    int ub = 0;
    Coloring greedy = greedy_dsatur(g, ub);
    if (clique.omega == ub) {
        r.lower = r.upper = ub;
        r.exact = true;
        r.coloring = std::move(greedy);
        return r;
    }

    if (ub > 63) throw std::invalid_argument("exact chromatic search supports at most 63 colors");

    ChiSearch s(g, node_budget, ub);
    for (std::size_t i = 0; i < clique.witness.size(); ++i)
        s.assign(clique.witness[i], static_cast<int>(i));
    s.search(clique.omega, clique.omega);

    r.nodes = s.nodes;
    if (s.aborted) {
        r.exact = false;
        r.lower = clique.omega;
        if (s.best_color.empty()) {
            r.upper = ub;
            r.coloring = std::move(greedy);
        } else {
            r.upper = s.best;
            r.coloring = Coloring::from_assignment(s.best_color, s.best);
        }
        return r;
    }
    r.exact = true;
    if (s.best_color.empty()) {  // greedy was already optimal
        r.lower = r.upper = s.best;
        r.coloring = std::move(greedy);
    } else {
        r.lower = r.upper = s.best;
        r.coloring = Coloring::from_assignment(s.best_color, s.best);
    }
    return r;
}

namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int u : s) {
        Bitset rest = s;
        rest.reset(u);
        if (!g.neighbors(u).contains_all(rest)) return false;
    }
    return true;
}

// Kuhn's augmenting-path matching; left/right are vertex lists, adj is a
// left-indexed adjacency matrix over right indices.
struct Matcher {
    const std::vector<std::vector<char>>& adj;
    std::vector<int> match_right;  // right index -> left index or -1
    std::vector<char> visited;

    bool augment(int l) {
        for (std::size_t rj = 0; rj < adj[static_cast<std::size_t>(l)].size(); ++rj) {
            if (!adj[static_cast<std::size_t>(l)][rj] || visited[rj]) continue;
            visited[rj] = 1;
            if (match_right[rj] < 0 || augment(match_right[rj])) {
                match_right[rj] = l;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

Coloring color_two_clique_union(const Graph& g, const VertexSet& k1, const VertexSet& k2) {
    if (k1.universe() != g.n() || k2.universe() != g.n())
        throw std::invalid_argument("clique set universe mismatch");
    if (k1.intersects(k2)) throw std::invalid_argument("cliques must be disjoint");
    if (!is_clique(g, k1) || !is_clique(g, k2))
        throw std::invalid_argument("inputs must both be cliques");

    std::vector<int> left = k1.to_vector(), right = k2.to_vector();
    std::vector<std::vector<char>> adj(left.size(), std::vector<char>(right.size(), 0));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            adj[i][j] = !g.adjacent(left[i], right[j]);  // complement edge: may share a color

    Matcher m{adj, std::vector<int>(right.size(), -1), {}};
    for (std::size_t i = 0; i < left.size(); ++i) {
        m.visited.assign(right.size(), 0);
        m.augment(static_cast<int>(i));
    }

    std::vector<int> match_left(left.size(), -1);
    for (std::size_t j = 0; j < right.size(); ++j)
        if (m.match_right[j] >= 0) match_left[static_cast<std::size_t>(m.match_right[j])] = static_cast<int>(j);

    Coloring out;
    for (std::size_t i = 0; i < left.size(); ++i) {
        Bitset cls(g.n());
        cls.set(left[i]);
        if (match_left[i] >= 0) cls.set(right[static_cast<std::size_t>(match_left[i])]);
        out.classes.push_back(std::move(cls));
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
        if (m.match_right[j] >= 0) continue;
        Bitset cls(g.n());
        cls.set(right[j]);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

bool is_perfect_in_class(const Graph& g) {
    return !find_induced_c5(g).has_value() && !find_induced_c7(g).has_value();
}

}  // namespace nearopt

#pragma once

// Exact oracles: clique number (branch and bound with pivoting), chromatic
// number (DSATUR-ordered branch and bound with clique seeding and a node
// budget), an optimal colorer for unions of two cliques, and the in-class
// perfection test.

#include <cstdint>

#include "nearopt/detect.hpp"
#include "nearopt/graph.hpp"

namespace nearopt {

struct CliqueResult {
    int omega = 0;
    std::vector<int> witness;  // vertices of a maximum clique, ascending
};

CliqueResult clique_number(const Graph& g);

struct OracleBudgetExceeded : std::runtime_error {
    int lower, upper;
    OracleBudgetExceeded(int lo, int hi)
        : std::runtime_error("chromatic oracle budget exhausted (bounds " + std::to_string(lo) +
                             ".." + std::to_string(hi) + ")"),
          lower(lo),
          upper(hi) {}
};

struct ChiResult {
    int lower = 0;       // best proven lower bound
    int upper = 0;       // colors in the witness coloring
    bool exact = false;  // lower == upper within budget
    std::uint64_t nodes = 0;
    Coloring coloring;   // proper coloring with `upper` colors

    int chi() const {
        if (!exact) throw OracleBudgetExceeded(lower, upper);
        return upper;
    }
};

// Node budget: NEAROPT_ORACLE_BUDGET from the environment, else 50M.
std::uint64_t default_oracle_budget();

ChiResult chromatic_number(const Graph& g, std::uint64_t node_budget = default_oracle_budget());

// Optimal coloring of g[k1 ∪ k2] where k1, k2 are disjoint cliques of g:
// a maximum matching on the bipartite complement pairs up vertices that
// can share a color, giving |k1| + |k2| - matching colors. Classes hold
// original vertex ids. Throws std::invalid_argument unless both inputs
// are disjoint cliques.
Coloring color_two_clique_union(const Graph& g, const VertexSet& k1, const VertexSet& k2);

// For class members, perfection is equivalent to having neither an
// induced C5 nor an induced C7. Only meaningful for class members.
bool is_perfect_in_class(const Graph& g);

}  // namespace nearopt

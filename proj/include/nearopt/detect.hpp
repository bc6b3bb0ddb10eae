#pragma once

// Induced-subgraph detection: small fixed patterns, class membership for
// graphs with no induced P2+P4 and no induced K4-e, and chordless-cycle
// search for C5 / C7.

#include <array>
#include <optional>
#include <string>

#include "nearopt/graph.hpp"

namespace nearopt {

// A small pattern graph (at most 7 vertices) with a display name.
struct Pattern {
    Graph graph;
    std::string name;

    static Pattern p2_plus_p4();           // vertices {0,1} edge + path 2-3-4-5
    static Pattern k4_minus_e();           // K4 with edge {2,3} removed
    static Pattern path(int t);            // P_t, 1 <= t <= 7
    static Pattern cycle(int t);           // C_t, 3 <= t <= 7
};

// map[i] = host vertex for pattern vertex i.
struct Embedding {
    std::string pattern;
    std::vector<int> map;
};

// True when map is injective and preserves both edges and non-edges.
bool embedding_is_induced(const Graph& g, const Pattern& p, const Embedding& e);

// Backtracking search for an induced copy of p in g. Deterministic: the
// returned embedding has the lexicographically least image sequence
// (map[0], map[1], ...) under the pattern's vertex order.
std::optional<Embedding> find_induced(const Graph& g, const Pattern& p);

struct ClassReport {
    bool p2p4_free = false;
    bool k4e_free = false;
    std::optional<Embedding> violation;  // present iff not a member
    bool member() const { return p2p4_free && k4e_free; }
};

ClassReport check_class_membership(const Graph& g);

struct NotAMember : std::runtime_error {
    ClassReport report;
    explicit NotAMember(ClassReport r)
        : std::runtime_error("graph is not a class member (induced " +
                             (r.violation ? r.violation->pattern : std::string("pattern")) + " found)"),
          report(std::move(r)) {}
};

/// All induced 5-cycles, each reported once in its canonical labeling:
// the lexicographically least of the ten dihedral orderings (minimum
// vertex first, then the smaller cycle-neighbor). Sorted lexicographically.
std::vector<std::array<int, 5>> enumerate_induced_c5(const Graph& g);

// First induced 5-/7-cycle in canonical-labeling order, if any.
std::optional<std::array<int, 5>> find_induced_c5(const Graph& g);
std::optional<std::array<int, 7>> find_induced_c7(const Graph& g);

}  // namespace nearopt

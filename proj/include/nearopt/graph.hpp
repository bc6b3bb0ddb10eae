#pragma once

// Immutable simple undirected graphs over vertices 0..n-1 with bitset
// adjacency rows, colorings as explicit class partitions, and DIMACS /
// JSON interchange.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nearopt/bitset.hpp"

namespace nearopt {

using VertexSet = Bitset;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    const Bitset& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    friend Graph build_graph(int, std::span<const std::pair<int, int>>);
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<Bitset> rows_;
};

// Builds a graph from an edge list. Duplicate edges collapse silently;
// self-loops and out-of-range endpoints are errors.
Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_of;  // new index -> original vertex, ascending
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// A coloring is an ordered list of color classes. Helpers do not require
// the classes to cover the graph; validity checks do.
struct Coloring {
    std::vector<VertexSet> classes;

    static Coloring from_assignment(std::span<const int> color_of, int num_colors);
    // color_of(v) as a flat vector; -1 for uncovered vertices.
    std::vector<int> assignment(int n) const;
    bool is_partition_of(int n) const;
    int num_colors() const { return static_cast<int>(classes.size()); }
};

struct ProperCheck {
    bool proper = false;
    std::optional<std::pair<int, int>> violating_edge;  // same-class adjacent pair
};

// Throws std::invalid_argument if the classes do not partition V(g).
ProperCheck is_proper_coloring(const Graph& g, const Coloring& c);

// DIMACS: "c" comments, "p edge n m" header, 1-indexed "e u v" lines.
// A wrong edge count in the header is a warning (appended to *warnings
// when given); malformed headers and out-of-range endpoints are fatal.
Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_dimacs(const Graph& g);

// JSON: {"n": int, "edges": [[u,v],...]} with 0-indexed endpoints.
Graph parse_json_graph(std::string_view text);
std::string write_json_graph(const Graph& g);

}  // namespace nearopt

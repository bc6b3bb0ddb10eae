#include "nearopt/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace nearopt {

Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.rows_.assign(static_cast<std::size_t>(n), Bitset(n));
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (g.rows_[static_cast<std::size_t>(u)].test(v)) continue;  // duplicate collapses
        g.rows_[static_cast<std::size_t>(u)].set(v);
        g.rows_[static_cast<std::size_t>(v)].set(u);
        ++g.m_;
    }
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
    return build_graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[static_cast<std::size_t>(u)].next_after(u); v >= 0;
             v = rows_[static_cast<std::size_t>(u)].next_after(v))
            out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return build_graph(g.n(), es);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.n()) throw std::invalid_argument("vertex set universe mismatch");
    InducedSubgraph out;
    out.vertex_of = s.to_vector();
    std::vector<int> new_of(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < out.vertex_of.size(); ++i)
        new_of[static_cast<std::size_t>(out.vertex_of[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (new_of[static_cast<std::size_t>(u)] >= 0 && new_of[static_cast<std::size_t>(v)] >= 0)
            es.emplace_back(new_of[static_cast<std::size_t>(u)], new_of[static_cast<std::size_t>(v)]);
    out.graph = build_graph(static_cast<int>(out.vertex_of.size()), es);
    return out;
}

Coloring Coloring::from_assignment(std::span<const int> color_of, int num_colors) {
    Coloring c;
    const int n = static_cast<int>(color_of.size());
    c.classes.assign(static_cast<std::size_t>(num_colors), Bitset(n));
    for (int v = 0; v < n; ++v) {
        int k = color_of[static_cast<std::size_t>(v)];
        if (k < 0 || k >= num_colors) throw std::invalid_argument("color index out of range");
        c.classes[static_cast<std::size_t>(k)].set(v);
    }
    return c;
}

std::vector<int> Coloring::assignment(int n) const {
    std::vector<int> a(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (int v : classes[k]) a[static_cast<std::size_t>(v)] = static_cast<int>(k);
    return a;
}

bool Coloring::is_partition_of(int n) const {
    Bitset seen(n);
    int total = 0;
    for (const auto& cls : classes) {
        if (cls.universe() != n) return false;
        if (cls.intersects(seen)) return false;
        seen |= cls;
        total += cls.count();
    }
    return total == n;
}

ProperCheck is_proper_coloring(const Graph& g, const Coloring& c) {
    if (!c.is_partition_of(g.n()))
        throw std::invalid_argument("coloring classes do not partition the vertex set");
    for (const auto& cls : c.classes)
        for (int v : cls) {
            Bitset bad = cls & g.neighbors(v);
            int u = bad.first();
            if (u >= 0) return {false, std::make_pair(std::min(u, v), std::max(u, v))};
        }
    return {true, std::nullopt};
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long parse_long(std::string_view s, const char* what) {
    long value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return value;
}

}  // namespace

Graph parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
    long n = -1, m_declared = -1;
    std::vector<std::pair<int, int>> es;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError("duplicate problem line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "edges" && tok[1] != "col"))
                throw ParseError("malformed problem line at line " + std::to_string(lineno));
            n = parse_long(tok[2], "vertex count");
            m_declared = parse_long(tok[3], "edge count");
            if (n < 0 || m_declared < 0) throw ParseError("negative size in problem line");
            continue;
        }
        if (tok[0] == "e") {
            if (n < 0) throw ParseError("edge before problem line");
            if (tok.size() != 3) throw ParseError("malformed edge line at line " + std::to_string(lineno));
            long u = parse_long(tok[1], "endpoint");
            long v = parse_long(tok[2], "endpoint");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("endpoint out of range at line " + std::to_string(lineno));
            if (u == v) throw ParseError("self-loop at line " + std::to_string(lineno));
            es.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("unrecognized line at line " + std::to_string(lineno));
    }
    if (n < 0) throw ParseError("missing problem line");
    Graph g = build_graph(static_cast<int>(n), es);
    if (static_cast<long>(g.edge_count()) != m_declared && warnings)
        warnings->push_back("header declares " + std::to_string(m_declared) + " edges, found " +
                            std::to_string(g.edge_count()));
    return g;
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

Graph parse_json_graph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
        !j["edges"].is_array())
        throw ParseError("json graph must be {\"n\": int, \"edges\": [[u,v],...]}");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("json edge must be a pair of ints");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return build_graph(j["n"].get<int>(), es);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string write_json_graph(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

}  // namespace nearopt

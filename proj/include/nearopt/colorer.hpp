#pragma once

// Constructive near-optimal coloring for class members: at most
// max{6, omega(g)} colors, emitted as a self-contained certificate.
// Every structural fact the construction relies on is revalidated at
// runtime; a failure raises LemmaViolation instead of emitting a bad
// coloring.

#include <cstdint>
#include <optional>

#include "nearopt/decompose.hpp"
#include "nearopt/graph.hpp"
#include "nearopt/oracles.hpp"

namespace nearopt {

struct LemmaViolation : std::runtime_error {
    std::string case_path;  // e.g. "F2/B3-omega"
    std::string detail;
    std::optional<std::pair<int, int>> edge;
    std::optional<int> vertex;

    LemmaViolation(std::string path, std::string what,
                   std::optional<std::pair<int, int>> e = std::nullopt,
                   std::optional<int> v = std::nullopt)
        : std::runtime_error(path + ": " + what), case_path(std::move(path)), detail(std::move(what)),
          edge(e), vertex(v) {}
};

struct UnclassifiedVertexError : std::runtime_error {
    int vertex;
    std::vector<int> trace;
    UnclassifiedVertexError(int v, std::vector<int> t)
        : std::runtime_error("vertex " + std::to_string(v) + " matches no C7 trace rule"),
          vertex(v), trace(std::move(t)) {}
};

// Audit data for the branches that prove colors_used == omega.
struct OmegaBranchData {
    Bitset clique_a, clique_b;  // the two cliques colored by matching
    Bitset bipartite_part;      // W2, reusing the first two palette colors
    Bitset residual_clique;     // the clique placed on fresh singleton colors (may be empty)
};

struct ColoringCertificate {
    CaseTag tag = CaseTag::Perfect;
    std::vector<int> anchor;         // labeled cycle the construction used; empty for Perfect
    std::vector<Bitset> classes;     // nonempty color classes, construction order
    int colors_used = 0;
    std::string bound_claim;         // "<=6" or "=omega"
    std::optional<int> omega;        // present on "=omega" certificates
    bool validated = false;
    std::optional<OmegaBranchData> omega_branch;

    Coloring coloring() const { return Coloring{classes}; }
    std::string to_json() const;
};

struct ColorOptions {
    bool fallback_exact = false;  // downgrade to the exact oracle on LemmaViolation
    std::uint64_t oracle_budget = default_oracle_budget();
};

// Dispatches on classify_case. Throws NotAMember for non-members and
// LemmaViolation when a construction's preconditions fail (unless
// fallback_exact is set, in which case the exact oracle takes over).
ColoringCertificate color_near_optimal(const Graph& g, const ColorOptions& opts = {});

// Individual case constructions. Each takes a labeled anchor cycle in
// the orientation classify_case produces, revalidates everything it
// uses, and returns a validated certificate.
ColoringCertificate color_case_f1(const Graph& g, const std::array<int, 5>& cycle);
ColoringCertificate color_case_f2(const Graph& g, const std::array<int, 5>& cycle);
ColoringCertificate color_case_f3(const Graph& g, const std::array<int, 5>& cycle);
ColoringCertificate color_case_f4(const Graph& g, const std::array<int, 5>& cycle);
ColoringCertificate color_case_pure_c5(const Graph& g, const std::array<int, 5>& cycle);
ColoringCertificate color_case_c7(const Graph& g, const std::array<int, 7>& cycle);
ColoringCertificate color_perfect_fallback(const Graph& g,
                                           std::uint64_t budget = default_oracle_budget());

// Re-checks a serialized certificate against g: classes must partition
// V(g), be stable, and satisfy the bound claim. Returns false and fills
// *why on failure.
bool revalidate_certificate(const Graph& g, const std::string& json_text, std::string* why = nullptr);

}  // namespace nearopt

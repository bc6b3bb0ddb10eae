#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearopt/colorer.hpp"
#include "nearopt/decompose.hpp"
#include "nearopt/graph.hpp"

namespace nearopt {

// Randomized sweep: sample members of the class, run the constructive
// colorer on each, and cross-check the results against independent
// oracles and against the structural properties every member must obey.

struct SweepConfig {
    int n_min = 5;
    int n_max = 12;
    double p = 0.35;
    int count = 100;
    std::uint64_t seed = 1;
    std::uint64_t oracle_budget = default_oracle_budget();
    int max_tries = 400;          // sampling attempts per instance
    bool check_o_properties = true;
    bool check_c7_claims = true;
    bool compare_exact_chi = true;
};

struct SweepRecord {
    int index = 0;
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // enough to replay the instance
    std::string tag;
    int colors_used = 0;
    int omega = 0;
    std::optional<int> chi_exact;
    bool ok = true;
    std::vector<std::string> failures;
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepRecord> records;
    std::map<std::string, int> tag_histogram;
    std::vector<std::string> failures;  // flat "record #i: what" lines
    int failed = 0;                     // records with at least one failure

    bool all_ok() const { return failures.empty(); }
    std::string to_json() const;  // deterministic: no timestamps, no paths
};

// Draws one member of the class with n vertices. Alternates plain
// G(n,p) rejection sampling with a generator that seeds a C5 and wires
// extra vertices to it by trace, which reaches the rarer case leaves.
// Returns nullopt if max_tries samples were all non-members.
std::optional<Graph> sample_class_member(int n, double p, std::uint64_t seed, int max_tries = 400);

SweepReport run_sweep(const SweepConfig& config);

}  // namespace nearopt

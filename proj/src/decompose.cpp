#include "nearopt/decompose.hpp"

#include <algorithm>

namespace nearopt {

Bitset C5Decomposition::a_union() const {
    Bitset s = A[0];
    for (int i = 1; i < 5; ++i) s |= A[static_cast<std::size_t>(i)];
    return s;
}
Bitset C5Decomposition::b_union() const {
    Bitset s = B[0];
    for (int i = 1; i < 5; ++i) s |= B[static_cast<std::size_t>(i)];
    return s;
}
Bitset C5Decomposition::d_union() const {
    Bitset s = D[0];
    for (int i = 1; i < 5; ++i) s |= D[static_cast<std::size_t>(i)];
    return s;
}
Bitset C5Decomposition::z_union() const {
    Bitset s = Z[0];
    for (int i = 1; i < 5; ++i) s |= Z[static_cast<std::size_t>(i)];
    return s;
}

namespace {

template <std::size_t L>
void require_induced_cycle(const Graph& g, const std::array<int, L>& cycle) {
    for (std::size_t i = 0; i < L; ++i) {
        if (cycle[i] < 0 || cycle[i] >= g.n()) throw std::invalid_argument("cycle vertex out of range");
        for (std::size_t j = i + 1; j < L; ++j) {
            if (cycle[i] == cycle[j]) throw std::invalid_argument("cycle vertices not distinct");
            bool consecutive = (j - i == 1) || (i == 0 && j == L - 1);
            if (g.adjacent(cycle[i], cycle[j]) != consecutive)
                throw std::invalid_argument("labeling is not an induced cycle");
        }
    }
}

}  // namespace

C5DecomposeResult decompose_c5(const Graph& g, const std::array<int, 5>& cycle) {
    require_induced_cycle(g, cycle);
    C5Decomposition d;
    d.cycle = cycle;
    for (auto* fam : {&d.A, &d.B, &d.D, &d.Z})
        fam->fill(Bitset(g.n()));
    d.T = Bitset(g.n());

    Bitset on_cycle(g.n());
    for (int v : cycle) on_cycle.set(v);

    auto at = [&](int i) { return cycle[static_cast<std::size_t>(C5Decomposition::wrap(i))]; };

    for (int u = 0; u < g.n(); ++u) {
        if (on_cycle.test(u)) continue;
        bool adj[6];  // adj[i] for subscript i in 1..5
        int tsize = 0;
        for (int i = 1; i <= 5; ++i) {
            adj[i] = g.adjacent(u, at(i));
            tsize += adj[i];
        }
        // three consecutive cycle neighbors force an induced K4-e
        auto nx = [](int i) { return (i % 5) + 1; };
        for (int i = 1; i <= 5; ++i)
            if (adj[i] && adj[nx(i)] && adj[nx(nx(i))])
                return K4eWitness{{u, at(i), at(i + 1), at(i + 2)}};
        if (tsize == 0) {
            d.T.set(u);
        } else if (tsize == 1) {
            for (int i = 1; i <= 5; ++i)
                if (adj[i]) d.A[static_cast<std::size_t>(i - 1)].set(u);
        } else if (tsize == 2) {
            int p = 0;
            for (int i = 1; i <= 5; ++i)
                if (adj[i] && adj[(i % 5) + 1]) p = i;
            if (p) {
                d.B[static_cast<std::size_t>(p - 1)].set(u);
            } else {
                // distance-2 pair {i-1, i+1}
                for (int i = 1; i <= 5; ++i)
                    if (adj[C5Decomposition::wrap(i - 1) + 1] && adj[C5Decomposition::wrap(i + 1) + 1])
                        d.D[static_cast<std::size_t>(i - 1)].set(u);
            }
        } else {
            // tsize == 3 without three consecutive: trace {i-2, i, i+2}
            for (int i = 1; i <= 5; ++i)
                if (adj[C5Decomposition::wrap(i - 2) + 1] && adj[i] && adj[C5Decomposition::wrap(i + 2) + 1])
                    d.Z[static_cast<std::size_t>(i - 1)].set(u);
        }
    }
    return d;
}

C7DecomposeResult decompose_c7(const Graph& g, const std::array<int, 7>& cycle) {
    require_induced_cycle(g, cycle);
    C7Decomposition d;
    d.cycle = cycle;
    for (auto* fam : {&d.Q, &d.X, &d.Y, &d.L})
        fam->fill(Bitset(g.n()));
    d.M = Bitset(g.n());

    Bitset on_cycle(g.n());
    for (int v : cycle) on_cycle.set(v);

    auto at = [&](int i) { return cycle[static_cast<std::size_t>(C7Decomposition::wrap(i))]; };
    auto w7 = [](int i) { return C7Decomposition::wrap(i) + 1; };  // normalize subscript to 1..7

    for (int u = 0; u < g.n(); ++u) {
        if (on_cycle.test(u)) continue;
        bool adj[8];
        std::vector<int> trace;
        for (int i = 1; i <= 7; ++i) {
            adj[i] = g.adjacent(u, at(i));
            if (adj[i]) trace.push_back(i);
        }
        bool placed = false;
        for (int i = 1; i <= 7 && !placed; ++i) {
            auto has = [&](std::initializer_list<int> offs) {
                int cnt = 0;
                for (int o : offs) {
                    if (!adj[w7(i + o)]) return false;
                    ++cnt;
                }
                return cnt == static_cast<int>(trace.size());
            };
            if (trace.empty()) break;
            if (has({-1, +1})) {
                d.Q[static_cast<std::size_t>(i - 1)].set(u);
                placed = true;
            } else if (has({0, +1, +3, -2})) {
                d.X[static_cast<std::size_t>(i - 1)].set(u);
                placed = true;
            } else if (has({0, +1, -2})) {
                d.Y[static_cast<std::size_t>(i - 1)].set(u);
                placed = true;
            } else if (has({0, +1, +3})) {
                d.L[static_cast<std::size_t>(i - 1)].set(u);
                placed = true;
            }
        }
        if (trace.empty()) {
            d.M.set(u);
        } else if (!placed) {
            return UnclassifiedVertex{u, trace};
        }
    }
    return d;
}

namespace {

std::optional<std::pair<int, int>> first_edge_between(const Graph& g, const Bitset& s1, const Bitset& s2) {
    for (int u : s1) {
        Bitset hit = g.neighbors(u) & s2;
        int v = hit.first();
        if (v >= 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> first_internal_edge(const Graph& g, const Bitset& s) {
    for (int u : s) {
        Bitset hit = g.neighbors(u) & s;
        int v = hit.next_after(u);
        if (v >= 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> first_missing_edge_within(const Graph& g, const Bitset& s) {
    for (int u : s)
        for (int v = s.next_after(u); v >= 0; v = s.next_after(v))
            if (!g.adjacent(u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

}  // namespace

std::vector<PropertyViolation> validate_c5_properties(const Graph& g, const C5Decomposition& d) {
    std::vector<PropertyViolation> out;
    auto add = [&](std::string prop, int i, std::vector<int> wit) {
        out.push_back({std::move(prop), i, std::move(wit)});
    };

    for (int i = 1; i <= 5; ++i) {
        // O1: each D_i is stable and |Z_i| <= 1.
        if (auto e = first_internal_edge(g, d.d(i))) add("O1.D-stable", i, {e->first, e->second});
        if (d.z(i).count() > 1) {
            auto zs = d.z(i).to_vector();
            add("O1.Z-size", i, {zs[0], zs[1]});
        }

        // O2: B_i ∪ Z_{i-2} is a clique; each of its vertices has at most
        // one neighbor in B_{i+2} ∪ Z_i and at most one in B_{i-2} ∪ Z_{i+1}.
        Bitset bz = d.b(i) | d.z(i - 2);
        if (auto e = first_missing_edge_within(g, bz)) add("O2.clique", i, {e->first, e->second});
        Bitset next_side = d.b(i + 2) | d.z(i);
        Bitset prev_side = d.b(i - 2) | d.z(i + 1);
        for (int u : bz) {
            Bitset hits = g.neighbors(u) & next_side;
            if (hits.count() > 1) {
                auto hv = hits.to_vector();
                add("O2.next-nbr", i, {u, hv[0], hv[1]});
            }
            hits = g.neighbors(u) & prev_side;
            if (hits.count() > 1) {
                auto hv = hits.to_vector();
                add("O2.prev-nbr", i, {u, hv[0], hv[1]});
            }
        }

        // O3: [B_i ∪ Z_{i-2}, A_i ∪ A_{i+1} ∪ B_{i-1} ∪ B_{i+1} ∪ (D \ D_{i-2}) ∪ (Z \ Z_{i-2})] = ∅.
        Bitset other = d.a(i) | d.a(i + 1) | d.b(i - 1) | d.b(i + 1) |
                       d.d_union().minus(d.d(i - 2)) | d.z_union().minus(d.z(i - 2));
        if (auto e = first_edge_between(g, bz, other)) add("O3.empty", i, {e->first, e->second});

        // O4: A_i ∪ T is stable.
        if (auto e = first_internal_edge(g, d.a(i) | d.t())) add("O4.stable", i, {e->first, e->second});

        // O5: A_i nonempty forces |B_{i+1}| <= 2 and |B_{i-2}| <= 2.
        if (!d.a(i).empty()) {
            int a0 = d.a(i).first();
            if (d.b(i + 1).count() > 2) {
                auto bs = d.b(i + 1).to_vector();
                add("O5.B-next", i, {a0, bs[0], bs[1], bs[2]});
            }
            if (d.b(i - 2).count() > 2) {
                auto bs = d.b(i - 2).to_vector();
                add("O5.B-prev", i, {a0, bs[0], bs[1], bs[2]});
            }
        }

        // O6: [A_i, A_{i+1} ∪ A_{i-1}] is complete or empty.
        Bitset asides = d.a(i + 1) | d.a(i - 1);
        if (!d.a(i).empty() && !asides.empty()) {
            bool any = false, all = true;
            std::pair<int, int> present{-1, -1}, absent{-1, -1};
            for (int u : d.a(i))
                for (int v : asides) {
                    if (g.adjacent(u, v)) {
                        any = true;
                        if (present.first < 0) present = {u, v};
                    } else {
                        all = false;
                        if (absent.first < 0) absent = {u, v};
                    }
                }
            if (any && !all)
                add("O6.mixed", i, {present.first, present.second, absent.first, absent.second});
        }

        // O7: consequences of B_i being nonempty.
        if (!d.b(i).empty()) {
            int b0 = d.b(i).first();
            if (d.b(i - 1).count() > 1) {
                auto bs = d.b(i - 1).to_vector();
                add("O7i.B-prev", i, {b0, bs[0], bs[1]});
            }
            if (d.b(i + 1).count() > 1) {
                auto bs = d.b(i + 1).to_vector();
                add("O7i.B-next", i, {b0, bs[0], bs[1]});
            }
            Bitset dz = d.d(i - 1) | d.d(i + 1) | d.z(i);
            if (!d.b(i - 1).empty() && !dz.empty())
                add("O7ii", i, {b0, d.b(i - 1).first(), dz.first()});
            if (d.b(i).count() >= 2 && !(d.d(i) | d.d(i + 1)).empty()) {
                auto bs = d.b(i).to_vector();
                add("O7iii", i, {bs[0], bs[1], (d.d(i) | d.d(i + 1)).first()});
            }
            if (auto e = first_edge_between(g, d.a(i) | d.d(i + 1), d.d(i - 1)))
                add("O7iv.a", i, {b0, e->first, e->second});
            if (auto e = first_edge_between(g, d.a(i), d.d(i) | d.a(i + 1)))
                add("O7iv.b", i, {b0, e->first, e->second});
            if (auto e = first_edge_between(g, d.a(i + 1) | d.d(i), d.d(i + 2)))
                add("O7iv.c", i, {b0, e->first, e->second});
            if (auto e = first_edge_between(g, d.a(i + 1), d.d(i + 1)))
                add("O7iv.d", i, {b0, e->first, e->second});
            if (d.b(i).count() >= 3) {
                if (auto e = first_edge_between(g, d.t(), d.z_union().minus(d.z(i - 2)))) {
                    auto bs = d.b(i).to_vector();
                    add("O7v", i, {bs[0], bs[1], bs[2], e->first, e->second});
                }
            }
        }
    }
    return out;
}

std::vector<PropertyViolation> validate_c7_claims(const Graph& g, const C7Decomposition& d) {
    std::vector<PropertyViolation> out;
    auto add = [&](std::string prop, int i, std::vector<int> wit) {
        out.push_back({std::move(prop), i, std::move(wit)});
    };

    for (int i = 1; i <= 7; ++i) {
        if (auto e = first_internal_edge(g, d.q(i))) add("c7.Q-stable", i, {e->first, e->second});
        if (auto e = first_internal_edge(g, d.x(i))) add("c7.X-stable", i, {e->first, e->second});
        if (auto e = first_internal_edge(g, d.y(i))) add("c7.Y-stable", i, {e->first, e->second});
        if (auto e = first_internal_edge(g, d.l(i))) add("c7.L-stable", i, {e->first, e->second});
        if (auto e = first_edge_between(g, d.q(i), d.q(i + 3) | d.q(i - 3)))
            add("c7.QQ3", i, {e->first, e->second});
    }
    if (auto e = first_internal_edge(g, d.m())) add("c7.M-stable", 0, {e->first, e->second});

    Bitset qyl(g.n());
    for (int i = 1; i <= 7; ++i) qyl |= d.q(i) | d.y(i) | d.l(i);
    if (auto e = first_edge_between(g, d.m(), qyl)) add("c7.MQYL", 0, {e->first, e->second});

    auto concentrated = [&](const std::array<Bitset, 7>& fam, const char* prop) {
        int seen = 0;
        for (int i = 0; i < 7; ++i)
            if (!fam[static_cast<std::size_t>(i)].empty()) {
                if (seen) {
                    add(prop, i + 1,
                        {fam[static_cast<std::size_t>(seen - 1)].first(), fam[static_cast<std::size_t>(i)].first()});
                    return;
                }
                seen = i + 1;
            }
    };
    concentrated(d.X, "c7.X-multi");
    concentrated(d.Y, "c7.Y-multi");
    concentrated(d.L, "c7.L-multi");
    return out;
}

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::F1: return "F1";
        case CaseTag::F2: return "F2";
        case CaseTag::F3: return "F3";
        case CaseTag::F4: return "F4";
        case CaseTag::PureC5: return "PureC5";
        case CaseTag::C7Case: return "C7";
        case CaseTag::Perfect: return "Perfect";
    }
    return "?";
}

namespace {

// Labeling-invariant realization predicates, evaluated on any one
// decomposition of a cycle.
bool realizes_f1(const C5Decomposition& d) {
    for (int i = 1; i <= 5; ++i)
        if (!d.b(i).empty() && !d.b(i + 1).empty()) return true;
    return false;
}
bool realizes_f2(const C5Decomposition& d) {
    for (int i = 1; i <= 5; ++i)
        if (!d.b(i).empty() && (!d.a(i + 2).empty() || !d.a(i - 1).empty())) return true;
    return false;
}
bool realizes_f3(const C5Decomposition& d) {
    for (int i = 1; i <= 5; ++i)
        if (!d.b(i).empty() && !d.b(i + 2).empty()) return true;
    return false;
}
bool realizes_f4(const C5Decomposition& d) { return !d.b_union().empty(); }

// Anchor predicates in the orientation the per-case colorers expect.
bool anchor_f1(const C5Decomposition& d) { return !d.b(1).empty() && !d.b(5).empty(); }
bool anchor_f2(const C5Decomposition& d) { return !d.b(1).empty() && !d.a(3).empty(); }
bool anchor_f3(const C5Decomposition& d) { return !d.b(1).empty() && !d.b(4).empty(); }
bool anchor_f4(const C5Decomposition& d) { return !d.b(1).empty(); }

std::vector<std::array<int, 5>> dihedral_labelings(const std::array<int, 5>& c) {
    std::vector<std::array<int, 5>> out;
    std::array<int, 5> fwd = c, rev = {c[0], c[4], c[3], c[2], c[1]};
    for (int r = 0; r < 5; ++r) {
        std::array<int, 5> a, b;
        for (int j = 0; j < 5; ++j) {
            a[static_cast<std::size_t>(j)] = fwd[static_cast<std::size_t>((j + r) % 5)];
            b[static_cast<std::size_t>(j)] = rev[static_cast<std::size_t>((j + r) % 5)];
        }
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

}  // namespace

CaseAnalysis classify_case_member(const Graph& g) {
    auto cycles = enumerate_induced_c5(g);
    if (!cycles.empty()) {
        std::vector<C5Decomposition> decs;
        decs.reserve(cycles.size());
        for (const auto& c : cycles) {
            auto res = decompose_c5(g, c);
            if (std::holds_alternative<K4eWitness>(res))
                throw std::logic_error("member graph produced a K4-e witness");
            decs.push_back(std::get<C5Decomposition>(std::move(res)));
        }

        struct Case {
            CaseTag tag;
            bool (*realizes)(const C5Decomposition&);
            bool (*anchored)(const C5Decomposition&);
        };
        const Case cases[] = {{CaseTag::F1, realizes_f1, anchor_f1},
                              {CaseTag::F2, realizes_f2, anchor_f2},
                              {CaseTag::F3, realizes_f3, anchor_f3},
                              {CaseTag::F4, realizes_f4, anchor_f4}};
        for (const auto& cs : cases) {
            std::optional<std::array<int, 5>> best;
            for (std::size_t k = 0; k < cycles.size(); ++k) {
                if (!cs.realizes(decs[k])) continue;
                for (const auto& lab : dihedral_labelings(cycles[k])) {
                    auto res = decompose_c5(g, lab);
                    if (cs.anchored(std::get<C5Decomposition>(res)))
                        if (!best || lab < *best) best = lab;
                }
            }
            if (best) return {cs.tag, {best->begin(), best->end()}};
        }
        const auto& c0 = cycles.front();  // all B-sets empty everywhere
        return {CaseTag::PureC5, {c0.begin(), c0.end()}};
    }
    if (auto c7 = find_induced_c7(g)) return {CaseTag::C7Case, {c7->begin(), c7->end()}};
    return {CaseTag::Perfect, {}};
}

CaseAnalysis classify_case(const Graph& g) {
    auto report = check_class_membership(g);
    if (!report.member()) throw NotAMember(std::move(report));
    return classify_case_member(g);
}

}  // namespace nearopt

#include "nearopt/colorer.hpp"

#include <algorithm>
#include <iostream>

#include <json.hpp>

namespace nearopt {

namespace {

Bitset verts(int n, std::initializer_list<int> ids) {
    Bitset s(n);
    for (int v : ids) s.set(v);
    return s;
}

int take_min(const Bitset& s) { return s.first(); }

std::optional<std::pair<int, int>> edge_between(const Graph& g, const Bitset& s1, const Bitset& s2) {
    for (int u : s1) {
        Bitset hit = g.neighbors(u) & s2;
        int v = hit.first();
        if (v >= 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> internal_edge(const Graph& g, const Bitset& s) {
    for (int u : s) {
        int v = (g.neighbors(u) & s).next_after(u);
        if (v >= 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> missing_edge_within(const Graph& g, const Bitset& s) {
    for (int u : s)
        for (int v = s.next_after(u); v >= 0; v = s.next_after(v))
            if (!g.adjacent(u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

C5Decomposition decompose5(const Graph& g, const std::array<int, 5>& cycle, const std::string& path) {
    auto res = decompose_c5(g, cycle);
    if (auto* w = std::get_if<K4eWitness>(&res))
        throw LemmaViolation(path, "anchor decomposition found an induced K4-e",
                             std::make_pair(w->vertices[0], w->vertices[1]));
    return std::get<C5Decomposition>(std::move(res));
}

C7Decomposition decompose7(const Graph& g, const std::array<int, 7>& cycle) {
    auto res = decompose_c7(g, cycle);
    if (auto* u = std::get_if<UnclassifiedVertex>(&res))
        throw UnclassifiedVertexError(u->vertex, u->trace);
    return std::get<C7Decomposition>(std::move(res));
}

// Accumulates named color classes, then validates the whole construction:
// the classes must partition V(g), each must be stable, and the bound
// claim must hold. Violations surface as LemmaViolation with a witness.
struct Builder {
    const Graph& g;
    CaseTag tag;
    std::string path;
    std::vector<int> anchor;
    std::vector<std::pair<std::string, Bitset>> named;

    Builder(const Graph& g_, CaseTag t, std::string p, std::vector<int> a)
        : g(g_), tag(t), path(std::move(p)), anchor(std::move(a)) {}

    void add(const std::string& name, const Bitset& s) { named.emplace_back(name, s); }

    ColoringCertificate finish(const std::string& claim, std::optional<int> omega,
                               std::optional<OmegaBranchData> branch = std::nullopt) {
        Bitset seen(g.n());
        for (const auto& [name, cls] : named) {
            if (cls.intersects(seen)) {
                int v = (cls & seen).first();
                throw LemmaViolation(path, "vertex " + std::to_string(v) +
                                               " assigned to two classes (second is " + name + ")",
                                     std::nullopt, v);
            }
            seen |= cls;
        }
        if (seen.count() != g.n()) {
            Bitset missing = seen.complemented();
            int v = missing.first();
            throw LemmaViolation(path, "vertex " + std::to_string(v) + " not covered by any class",
                                 std::nullopt, v);
        }
        for (const auto& [name, cls] : named)
            if (auto e = internal_edge(g, cls))
                throw LemmaViolation(path, "class " + name + " is not stable", e);

        ColoringCertificate cert;
        cert.tag = tag;
        cert.anchor = anchor;
        for (const auto& [name, cls] : named)
            if (!cls.empty()) cert.classes.push_back(cls);
        cert.colors_used = static_cast<int>(cert.classes.size());
        cert.bound_claim = claim;
        cert.omega = omega;
        cert.omega_branch = std::move(branch);
        if (claim == "<=6") {
            if (cert.colors_used > 6)
                throw LemmaViolation(path, "construction used " + std::to_string(cert.colors_used) +
                                               " colors, bound claim is <=6");
        } else if (claim == "=omega") {
            if (!omega || cert.colors_used != *omega)
                throw LemmaViolation(path, "construction used " + std::to_string(cert.colors_used) +
                                               " colors, bound claim is =omega with omega=" +
                                               std::to_string(omega.value_or(-1)));
        } else {
            throw std::logic_error("unknown bound claim");
        }
        cert.validated = true;
        return cert;
    }
};

std::vector<int> anchor_of(const std::array<int, 5>& c) { return {c.begin(), c.end()}; }
std::vector<int> anchor_of(const std::array<int, 7>& c) { return {c.begin(), c.end()}; }

// Shared omega branch: W1 = ka ∪ kb is a union of two cliques colored
// optimally by matching with at most omega-2 colors; W2 = h1 ∪ h2 is
// bipartite with no edges to W1, so it reuses the first two palette
// colors; r1 and r2 are stable leftovers on two fresh colors.
ColoringCertificate omega_branch(const Graph& g, CaseTag tag, const std::string& path,
                                 const std::array<int, 5>& cycle, const Bitset& ka, const Bitset& kb,
                                 const Bitset& h1, const Bitset& h2, const Bitset& r1,
                                 const Bitset& r2) {
    if (auto e = missing_edge_within(g, ka))
        throw LemmaViolation(path, "first W1 part is not a clique", e);
    if (auto e = missing_edge_within(g, kb))
        throw LemmaViolation(path, "second W1 part is not a clique", e);
    if (ka.intersects(kb))
        throw LemmaViolation(path, "W1 parts overlap", std::nullopt, (ka & kb).first());
    Bitset w1 = ka | kb, w2 = h1 | h2;
    if (auto e = edge_between(g, w1, w2)) throw LemmaViolation(path, "[W1, W2] is not empty", e);

    const int omega = clique_number(g).omega;
    if (omega < 5) throw LemmaViolation(path, "omega is " + std::to_string(omega) + ", expected >= 5");

    Coloring cw1 = color_two_clique_union(g, ka, kb);
    if (static_cast<int>(cw1.classes.size()) > omega - 2)
        throw LemmaViolation(path, "W1 needs " + std::to_string(cw1.classes.size()) +
                                       " colors, more than omega-2");

    std::vector<Bitset> palette = cw1.classes;
    if (!h1.empty()) {
        if (palette.empty()) palette.push_back(Bitset(g.n()));
        palette[0] |= h1;
    }
    if (!h2.empty()) {
        while (palette.size() < 2) palette.push_back(Bitset(g.n()));
        palette[1] |= h2;
    }

    Builder cb(g, tag, path, anchor_of(cycle));
    for (std::size_t j = 0; j < palette.size(); ++j) cb.add("W" + std::to_string(j + 1), palette[j]);
    cb.add("R1", r1);
    cb.add("R2", r2);
    return cb.finish("=omega", omega, OmegaBranchData{ka, kb, w2, Bitset(g.n())});
}

}  // namespace

ColoringCertificate color_case_f1(const Graph& g, const std::array<int, 5>& cycle) {
    auto dec = decompose5(g, cycle, "F1");
    if (dec.b(1).empty() || dec.b(5).empty())
        throw LemmaViolation("F1", "anchor does not have B1 and B5 nonempty");
    const int n = g.n();
    Bitset b3p(n);
    if (!dec.b(3).empty()) b3p.set(take_min(dec.b(3)));

    Builder cb(g, CaseTag::F1, "F1", anchor_of(cycle));
    cb.add("S1", verts(n, {dec.v(3)}) | dec.a(1) | dec.b(1) | dec.b(5) | dec.d(1));
    cb.add("S2", dec.a(2) | dec.b(2) | dec.d(3));
    cb.add("S3", verts(n, {dec.v(4)}) | dec.a(3) | dec.t());
    cb.add("S4", verts(n, {dec.v(2), dec.v(5)}) | dec.a(4) | b3p);
    cb.add("S5", verts(n, {dec.v(1)}) | dec.a(5) | dec.b(4) | dec.d(4));
    cb.add("S6", dec.z_union().minus(dec.z(1)) | dec.b(3).minus(b3p));
    return cb.finish("<=6", std::nullopt);
}

ColoringCertificate color_case_f2(const Graph& g, const std::array<int, 5>& cycle) {
    auto dec = decompose5(g, cycle, "F2");
    if (dec.b(1).empty() || dec.a(3).empty())
        throw LemmaViolation("F2", "anchor does not have B1 and A3 nonempty");
    const int n = g.n();
    const int b1 = take_min(dec.b(1));

    if (!dec.b(4).empty()) {
        const int b4 = take_min(dec.b(4));
        Builder cb(g, CaseTag::F2, "F2/B4", anchor_of(cycle));
        cb.add("S1", verts(n, {dec.v(4), b1}) | dec.a(1) | dec.d(1) | dec.z(3));
        cb.add("S2", verts(n, {dec.v(5)}) | dec.a(2) | dec.b(1).minus(b1) | dec.d(2));
        cb.add("S3", verts(n, {dec.v(2)}) | dec.a(3) | dec.t());
        cb.add("S4", verts(n, {dec.v(1), b4}) | dec.a(4) | dec.d(4));
        cb.add("S5", verts(n, {dec.v(3)}) | dec.b(4).minus(b4) | dec.a(5) | dec.d(5));
        cb.add("S6", dec.d(3) | dec.z(1) | dec.z(2) | dec.z(4) | dec.z(5));
        return cb.finish("<=6", std::nullopt);
    }

    if (dec.b(1).count() >= 2) {
        if (dec.b(1).count() > 2)
            throw LemmaViolation("F2/B1", "B1 has more than two vertices while A3 is nonempty");
        const int a3 = take_min(dec.a(3));
        const int u = dec.b(1).first();
        const int w = dec.b(1).next_after(u);
        const bool au = g.adjacent(a3, u), aw = g.adjacent(a3, w);
        if (au == aw)
            throw LemmaViolation("F2/B1", "chosen A3 vertex sees neither or both B1 vertices",
                                 std::make_pair(a3, u));
        const int bb = au ? u : w;   // the B1 vertex adjacent to a3
        const int bbp = au ? w : u;  // the other one
        Bitset b3p(n);
        if (!dec.b(3).empty()) b3p.set(take_min(dec.b(3)));

        Builder cb(g, CaseTag::F2, "F2/B1", anchor_of(cycle));
        cb.add("S1", verts(n, {dec.v(4), bbp}) | dec.a(3));
        cb.add("S2", verts(n, {dec.v(3), dec.v(5), bb}) | dec.a(1) | dec.d(3));
        cb.add("S3", dec.a(4) | b3p | dec.z(2));
        cb.add("S4", verts(n, {dec.v(2)}) | dec.a(5) | dec.t());
        cb.add("S5", verts(n, {dec.v(1)}) | dec.b(3).minus(b3p) | dec.d(4) | dec.z(5));
        cb.add("S6", dec.d(5) | dec.z(1) | dec.z(3) | dec.z(4));
        return cb.finish("<=6", std::nullopt);
    }

    if (!dec.b(3).empty()) {
        if (dec.b(3).count() <= 2) {
            const int b3 = take_min(dec.b(3));
            Builder cb(g, CaseTag::F2, "F2/B3", anchor_of(cycle));
            cb.add("S1", verts(n, {dec.v(3), b1}) | dec.a(1) | dec.d(1));
            cb.add("S2", verts(n, {dec.v(4)}) | dec.a(2) | dec.d(2) | dec.z(5));
            cb.add("S3", verts(n, {dec.v(5), b3}) | dec.a(3) | dec.d(3));
            cb.add("S4", verts(n, {dec.v(1)}) | dec.a(4) | dec.b(3).minus(b3) | dec.d(4));
            cb.add("S5", verts(n, {dec.v(2)}) | dec.a(5) | dec.t());
            cb.add("S6", dec.d(5) | dec.z(1) | dec.z(2) | dec.z(3) | dec.z(4));
            return cb.finish("<=6", std::nullopt);
        }
        // |B3| >= 3: a 5-clique exists, color W1 = (B1 ∪ Z4) ∪ (B3 ∪ Z1)
        // by matching, reuse its palette on the bipartite W2.
        return omega_branch(g, CaseTag::F2, "F2/B3-omega", cycle,
                            dec.b(1) | dec.z(4), dec.b(3) | dec.z(1),
                            dec.a(3) | dec.d(2) | dec.z(5), verts(n, {dec.v(5)}) | dec.d(5),
                            verts(n, {dec.v(1), dec.v(3)}) | dec.a(4) | dec.d(1) | dec.z(2),
                            verts(n, {dec.v(2), dec.v(4)}) | dec.a(1) | dec.z(3) | dec.t());
    }

    if (!dec.d(1).empty()) {
        if (dec.a(2).empty() || dec.a(4).empty()) {
            Builder cb(g, CaseTag::F2, "F2/D1", anchor_of(cycle));
            cb.add("S1", verts(n, {b1}) | dec.d(2) | dec.d(5) | dec.z(3));
            cb.add("S2", verts(n, {dec.v(2), dec.v(5)}) | dec.a(1) | dec.a(3) | dec.z(1));
            cb.add("S3", verts(n, {dec.v(1), dec.v(3)}) | dec.a(5) | dec.t());
            cb.add("S4", dec.d(1) | dec.d(3) | dec.z(2) | dec.z(4) | dec.z(5));
            cb.add("S5", verts(n, {dec.v(4)}) | dec.d(4));
            cb.add("S6", dec.a(2) | dec.a(4));
            return cb.finish("<=6", std::nullopt);
        }
        Builder cb(g, CaseTag::F2, "F2/D1-A2A4", anchor_of(cycle));
        cb.add("S1", verts(n, {b1}) | dec.d(2) | dec.d(5) | dec.z(3));
        cb.add("S2", verts(n, {dec.v(2), dec.v(5)}) | dec.a(4) | dec.z(1));
        cb.add("S3", verts(n, {dec.v(1), dec.v(3)}) | dec.a(5) | dec.t());
        cb.add("S4", dec.d(1) | dec.d(3) | dec.z(2) | dec.z(4) | dec.z(5));
        cb.add("S5", verts(n, {dec.v(4)}) | dec.a(3) | dec.d(4));
        cb.add("S6", dec.a(2));
        return cb.finish("<=6", std::nullopt);
    }

    const bool a3a4_empty = !edge_between(g, dec.a(3), dec.a(4)).has_value();
    if (a3a4_empty) {
        Builder cb(g, CaseTag::F2, "F2/final-split", anchor_of(cycle));
        cb.add("S1", verts(n, {dec.v(3), dec.v(5), b1}) | dec.a(1) | dec.d(5));
        cb.add("S2", dec.a(2) | dec.d(2) | dec.z(4));
        cb.add("S3", verts(n, {dec.v(2), dec.v(4)}) | dec.a(5) | dec.t());
        cb.add("S4", verts(n, {dec.v(1)}) | dec.a(3) | dec.a(4));
        cb.add("S5", dec.d(3));
        cb.add("S6", dec.d(4) | dec.z(1) | dec.z(2) | dec.z(3) | dec.z(5));
        return cb.finish("<=6", std::nullopt);
    }
    Builder cb(g, CaseTag::F2, "F2/final-complete", anchor_of(cycle));
    cb.add("S1", verts(n, {dec.v(3), dec.v(5), b1}) | dec.a(1) | dec.d(5));
    cb.add("S2", dec.a(2) | dec.d(2) | dec.z(4));
    cb.add("S3", verts(n, {dec.v(2), dec.v(4)}) | dec.a(5) | dec.t());
    cb.add("S4", verts(n, {dec.v(1)}) | dec.a(3));
    cb.add("S5", dec.a(4) | dec.d(3));
    cb.add("S6", dec.d(4) | dec.z(1) | dec.z(2) | dec.z(3) | dec.z(5));
    return cb.finish("<=6", std::nullopt);
}

ColoringCertificate color_case_f3(const Graph& g, const std::array<int, 5>& cycle) {
    auto dec = decompose5(g, cycle, "F3");
    if (dec.b(1).empty() || dec.b(4).empty())
        throw LemmaViolation("F3", "anchor does not have B1 and B4 nonempty");
    const int n = g.n();

    if (dec.b(1).count() <= 2 && dec.b(4).count() <= 2) {
        const int b1 = take_min(dec.b(1));
        const int b4 = take_min(dec.b(4));
        Builder cb(g, CaseTag::F3, "F3/small", anchor_of(cycle));
        cb.add("S1", verts(n, {dec.v(1), dec.v(4)}) | dec.a(2) | dec.t());
        cb.add("S2", verts(n, {dec.v(2), b4}) | dec.a(4) | dec.d(4));
        cb.add("S3", verts(n, {dec.v(3), dec.v(5), b1}) | dec.d(5));
        cb.add("S4", dec.b(1).minus(b1) | dec.z(2));
        cb.add("S5", dec.b(4).minus(b4) | dec.d(1) | dec.d(3));
        cb.add("S6", dec.d(2) | dec.z(1) | dec.z(3) | dec.z(4) | dec.z(5));
        return cb.finish("<=6", std::nullopt);
    }

    std::array<int, 5> c = cycle;
    if (dec.b(1).count() < 3) {
        // reverse the labeling so the large side becomes B1 (B1 and B4 swap)
        c = {cycle[4], cycle[3], cycle[2], cycle[1], cycle[0]};
        dec = decompose5(g, c, "F3/omega");
        if (dec.b(1).count() < 3) throw LemmaViolation("F3/omega", "neither B-side has three vertices");
    }
    return omega_branch(g, CaseTag::F3, "F3/omega", c,
                        dec.b(1) | dec.z(4), dec.b(4) | dec.z(2),
                        dec.d(5) | dec.z(3), verts(n, {dec.v(3)}) | dec.d(3),
                        verts(n, {dec.v(1), dec.v(4)}) | dec.a(2) | dec.d(4) | dec.z(5),
                        verts(n, {dec.v(2), dec.v(5)}) | dec.a(4) | dec.z(1) | dec.t());
}

ColoringCertificate color_case_f4(const Graph& g, const std::array<int, 5>& cycle) {
    auto dec = decompose5(g, cycle, "F4");
    if (dec.b(1).empty()) throw LemmaViolation("F4", "anchor does not have B1 nonempty");
    const int n = g.n();

    if (!dec.d(1).empty() || !dec.d(2).empty()) {
        std::array<int, 5> c = cycle;
        if (dec.d(1).empty()) {
            // swap D1 and D2 while fixing B1: v'_j = v_{3-j}
            c = {cycle[1], cycle[0], cycle[4], cycle[3], cycle[2]};
            dec = decompose5(g, c, "F4/D1D2");
            if (dec.d(1).empty()) throw LemmaViolation("F4/D1D2", "relabeling failed to move D2 to D1");
        }
        const int b1 = take_min(dec.b(1));
        Builder cb(g, CaseTag::F4, "F4/D1D2", anchor_of(c));
        cb.add("S1", verts(n, {dec.v(3), dec.v(5), b1}) | dec.a(1) | dec.d(5));
        cb.add("S2", dec.a(2) | dec.d(3) | dec.z(4));
        cb.add("S3", verts(n, {dec.v(2)}) | dec.a(4) | dec.t());
        cb.add("S4", verts(n, {dec.v(1), dec.v(4)}) | dec.d(1));
        cb.add("S5", dec.d(2));
        cb.add("S6", dec.d(4) | dec.z(1) | dec.z(2) | dec.z(3) | dec.z(5));
        return cb.finish("<=6", std::nullopt);
    }

    const int b1 = take_min(dec.b(1));
    if (dec.b(1).count() <= 3) {
        Bitset b1second(n), b1third(n);
        int s = dec.b(1).next_after(b1);
        if (s >= 0) {
            b1second.set(s);
            int t3 = dec.b(1).next_after(s);
            if (t3 >= 0) b1third.set(t3);
        }
        Builder cb(g, CaseTag::F4, "F4/B1-small", anchor_of(cycle));
        cb.add("S1", verts(n, {dec.v(1)}) | dec.a(4) | dec.t());
        cb.add("S2", verts(n, {dec.v(4), b1}) | dec.a(1) | dec.a(2));
        cb.add("S3", verts(n, {dec.v(3), dec.v(5)}) | b1second | dec.d(3));
        cb.add("S4", b1third | dec.d(5));
        cb.add("S5", verts(n, {dec.v(2)}) | dec.d(4) | dec.z(1) | dec.z(3));
        cb.add("S6", dec.z(2) | dec.z(4) | dec.z(5));
        return cb.finish("<=6", std::nullopt);
    }

    // |B1| >= 4: name b1 plus the next three, split A4 by adjacency to x.
    const int x = dec.b(1).next_after(b1);
    const int y = dec.b(1).next_after(x);
    const int w = dec.b(1).next_after(y);
    Bitset a4p(n), a4pp(n);
    for (int a : dec.a(4)) {
        if (!g.adjacent(a, x)) {
            a4p.set(a);
        } else {
            if (g.adjacent(a, y))
                throw LemmaViolation("F4/B1-large", "an A4 vertex sees both x and y",
                                     std::make_pair(a, y));
            a4pp.set(a);
        }
    }
    Bitset m = dec.z(4) | dec.b(1).minus(b1).minus(x).minus(y).minus(w);

    Builder cb(g, CaseTag::F4, "F4/B1-large", anchor_of(cycle));
    cb.add("S1", verts(n, {dec.v(3), dec.v(5), b1}) | dec.a(2) | dec.d(3));
    cb.add("S2", verts(n, {w}) | dec.a(1) | dec.d(5));
    cb.add("S3", verts(n, {x}) | a4p | dec.z(1));
    cb.add("S4", verts(n, {y}) | a4pp);
    cb.add("S5", verts(n, {dec.v(1)}) | dec.d(4) | dec.z(2) | dec.z(5));
    cb.add("S6", verts(n, {dec.v(2), dec.v(4)}) | dec.z(3) | dec.t());
    int mi = 0;
    for (int v : m) cb.add("M" + std::to_string(++mi), verts(n, {v}));

    if (!m.empty()) {
        if (auto e = missing_edge_within(g, m))
            throw LemmaViolation("F4/B1-large", "residual set M is not a clique", e);
        const int omega = clique_number(g).omega;
        if (m.count() > omega - 6)
            throw LemmaViolation("F4/B1-large",
                                 "residual clique M has " + std::to_string(m.count()) +
                                     " vertices, more than omega-6");
        return cb.finish("=omega", omega, OmegaBranchData{Bitset(n), Bitset(n), Bitset(n), m});
    }
    return cb.finish("<=6", std::nullopt);
}

ColoringCertificate color_case_pure_c5(const Graph& g, const std::array<int, 5>& cycle) {
    auto dec = decompose5(g, cycle, "PureC5");
    if (!dec.b_union().empty())
        throw LemmaViolation("PureC5", "anchor has a nonempty B-set", std::nullopt,
                             dec.b_union().first());
    // with every B empty, [A_i, D_{i+1}] must vanish for all i
    for (int i = 1; i <= 5; ++i)
        if (auto e = edge_between(g, dec.a(i), dec.d(i + 1)))
            throw LemmaViolation("PureC5", "[A" + std::to_string(i) + ", D" +
                                               std::to_string(C5Decomposition::wrap(i + 1) + 1) +
                                               "] is not empty",
                                 e);
    const int n = g.n();
    Builder cb(g, CaseTag::PureC5, "PureC5", anchor_of(cycle));
    cb.add("S1", verts(n, {dec.v(2), dec.v(4)}) | dec.a(1) | dec.d(2) | dec.z(3));
    cb.add("S2", dec.a(2) | dec.d(3));
    cb.add("S3", dec.a(3) | dec.d(4) | dec.z(1));
    cb.add("S4", verts(n, {dec.v(3), dec.v(5)}) | dec.a(4) | dec.d(5));
    cb.add("S5", verts(n, {dec.v(1)}) | dec.a(5) | dec.t());
    cb.add("S6", dec.d(1) | dec.z(2) | dec.z(4) | dec.z(5));
    return cb.finish("<=6", std::nullopt);
}

namespace {

std::array<int, 7> rotate7(const std::array<int, 7>& c, int shift) {
    std::array<int, 7> out;
    for (int j = 0; j < 7; ++j) out[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>((j + shift) % 7)];
    return out;
}

// v'_j = v_{2-j}: reverses orientation, exchanging the Y and L families.
std::array<int, 7> reverse7(const std::array<int, 7>& c) {
    return {c[0], c[6], c[5], c[4], c[3], c[2], c[1]};
}

ColoringCertificate c7_y_leaf(const Graph& g, const C7Decomposition& dec,
                              const std::array<int, 7>& cycle) {
    const int n = g.n();
    if (dec.l(3).empty()) {
        Builder cb(g, CaseTag::C7Case, "C7/Y", anchor_of(cycle));
        cb.add("S1", verts(n, {dec.v(5)}) | dec.q(2) | dec.q(5) | dec.y(1) | dec.l(7));
        cb.add("S2", verts(n, {dec.v(1), dec.v(3), dec.v(6)}) | dec.q(3) | dec.q(6) | dec.l(4));
        cb.add("S3", verts(n, {dec.v(2), dec.v(4), dec.v(7)}) | dec.q(4) | dec.q(7) | dec.l(5) | dec.m());
        return cb.finish("<=6", std::nullopt);
    }
    Builder cb(g, CaseTag::C7Case, "C7/Y-L3", anchor_of(cycle));
    cb.add("S1", verts(n, {dec.v(3), dec.v(5), dec.v(7)}) | dec.q(3) | dec.q(7) | dec.y(1));
    cb.add("S2", verts(n, {dec.v(2)}) | dec.q(2) | dec.q(5) | dec.l(3));
    cb.add("S3", verts(n, {dec.v(1), dec.v(4), dec.v(6)}) | dec.q(6) | dec.m());
    return cb.finish("<=6", std::nullopt);
}

}  // namespace

ColoringCertificate color_case_c7(const Graph& g, const std::array<int, 7>& cycle) {
    auto dec = decompose7(g, cycle);
    const int n = g.n();

    int xi = 0, yi = 0, li = 0;
    for (int i = 1; i <= 7; ++i) {
        if (xi == 0 && !dec.x(i).empty()) xi = i;
        if (yi == 0 && !dec.y(i).empty()) yi = i;
        if (li == 0 && !dec.l(i).empty()) li = i;
    }

    if (xi) {
        auto c = rotate7(cycle, xi - 1);
        dec = decompose7(g, c);
        Builder cb(g, CaseTag::C7Case, "C7/X", anchor_of(c));
        cb.add("S1", verts(n, {dec.v(5)}) | dec.q(5) | dec.x(1) | dec.y(3) | dec.l(6));
        cb.add("S2", verts(n, {dec.v(2), dec.v(4), dec.v(7)}) | dec.q(4) | dec.q(7) | dec.m());
        cb.add("S3", verts(n, {dec.v(1), dec.v(3), dec.v(6)}) | dec.q(3) | dec.q(6));
        return cb.finish("<=6", std::nullopt);
    }
    if (yi) {
        auto c = rotate7(cycle, yi - 1);
        return c7_y_leaf(g, decompose7(g, c), c);
    }
    if (li) {
        auto c = reverse7(cycle);  // turns L_i into Y_{1-i}
        dec = decompose7(g, c);
        int yj = 0;
        for (int i = 1; i <= 7 && !yj; ++i)
            if (!dec.y(i).empty()) yj = i;
        if (!yj) throw LemmaViolation("C7/L", "reversal did not produce a nonempty Y-set");
        auto c2 = rotate7(c, yj - 1);
        return c7_y_leaf(g, decompose7(g, c2), c2);
    }
    for (int i = 1; i <= 7; ++i) {
        if (!dec.q(i).empty()) continue;
        auto c = rotate7(cycle, i - 1);
        dec = decompose7(g, c);
        Builder cb(g, CaseTag::C7Case, "C7/Q-gap", anchor_of(c));
        cb.add("S1", verts(n, {dec.v(1), dec.v(3), dec.v(6)}) | dec.q(3) | dec.q(6));
        cb.add("S2", verts(n, {dec.v(2), dec.v(5)}) | dec.q(2) | dec.q(5));
        cb.add("S3", verts(n, {dec.v(4), dec.v(7)}) | dec.q(4) | dec.q(7) | dec.m());
        return cb.finish("<=6", std::nullopt);
    }
    Builder cb(g, CaseTag::C7Case, "C7/Q-full", anchor_of(cycle));
    cb.add("S1", verts(n, {dec.v(1), dec.v(3), dec.v(5)}) | dec.q(1) | dec.q(3) | dec.q(5));
    cb.add("S2", verts(n, {dec.v(2), dec.v(4), dec.v(6)}) | dec.q(2) | dec.q(4) | dec.q(6));
    cb.add("S3", verts(n, {dec.v(7)}) | dec.q(7) | dec.m());
    return cb.finish("<=6", std::nullopt);
}

ColoringCertificate color_perfect_fallback(const Graph& g, std::uint64_t budget) {
    auto res = chromatic_number(g, budget);
    const int chi = res.chi();
    const int omega = clique_number(g).omega;
    if (chi != omega)
        throw LemmaViolation("Perfect", "chi is " + std::to_string(chi) + " but omega is " +
                                            std::to_string(omega));
    Builder cb(g, CaseTag::Perfect, "Perfect", {});
    int k = 0;
    for (const auto& cls : res.coloring.classes)
        if (!cls.empty()) cb.add("S" + std::to_string(++k), cls);
    return cb.finish("=omega", omega);
}

ColoringCertificate color_near_optimal(const Graph& g, const ColorOptions& opts) {
    auto analysis = classify_case(g);  // throws NotAMember for non-members
    auto run = [&]() -> ColoringCertificate {
        switch (analysis.tag) {
            case CaseTag::F1:
                return color_case_f1(g, {analysis.anchor[0], analysis.anchor[1], analysis.anchor[2],
                                         analysis.anchor[3], analysis.anchor[4]});
            case CaseTag::F2:
                return color_case_f2(g, {analysis.anchor[0], analysis.anchor[1], analysis.anchor[2],
                                         analysis.anchor[3], analysis.anchor[4]});
            case CaseTag::F3:
                return color_case_f3(g, {analysis.anchor[0], analysis.anchor[1], analysis.anchor[2],
                                         analysis.anchor[3], analysis.anchor[4]});
            case CaseTag::F4:
                return color_case_f4(g, {analysis.anchor[0], analysis.anchor[1], analysis.anchor[2],
                                         analysis.anchor[3], analysis.anchor[4]});
            case CaseTag::PureC5:
                return color_case_pure_c5(g, {analysis.anchor[0], analysis.anchor[1], analysis.anchor[2],
                                              analysis.anchor[3], analysis.anchor[4]});
            case CaseTag::C7Case:
                return color_case_c7(g, {analysis.anchor[0], analysis.anchor[1], analysis.anchor[2],
                                         analysis.anchor[3], analysis.anchor[4], analysis.anchor[5],
                                         analysis.anchor[6]});
            case CaseTag::Perfect:
                return color_perfect_fallback(g, opts.oracle_budget);
        }
        throw std::logic_error("unreachable case tag");
    };

    if (!opts.fallback_exact) return run();
    try {
        return run();
    } catch (const LemmaViolation& lv) {
        std::cerr << "nearopt: construction failed (" << lv.what() << "); falling back to exact oracle\n";
        auto res = chromatic_number(g, opts.oracle_budget);
        const int chi = res.chi();
        ColoringCertificate cert;
        cert.tag = analysis.tag;
        cert.anchor = analysis.anchor;
        for (const auto& cls : res.coloring.classes)
            if (!cls.empty()) cert.classes.push_back(cls);
        cert.colors_used = static_cast<int>(cert.classes.size());
        if (chi <= 6) {
            cert.bound_claim = "<=6";
        } else {
            const int omega = clique_number(g).omega;
            if (chi != omega) throw;
            cert.bound_claim = "=omega";
            cert.omega = omega;
        }
        cert.validated = is_proper_coloring(g, cert.coloring()).proper;
        return cert;
    }
}

std::string ColoringCertificate::to_json() const {
    nlohmann::json j;
    j["case"] = std::string(nearopt::to_string(tag));
    j["anchor"] = anchor;
    j["classes"] = nlohmann::json::array();
    for (const auto& cls : classes) j["classes"].push_back(cls.to_vector());
    j["colors_used"] = colors_used;
    j["bound_claim"] = bound_claim;
    j["omega"] = omega ? nlohmann::json(*omega) : nlohmann::json(nullptr);
    j["validated"] = validated;
    return j.dump(2);
}

bool revalidate_certificate(const Graph& g, const std::string& json_text, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        return fail(std::string("json: ") + e.what());
    }
    if (!j.contains("classes") || !j["classes"].is_array()) return fail("missing classes");
    Coloring c;
    for (const auto& cls : j["classes"]) {
        Bitset s(g.n());
        for (const auto& v : cls) {
            int vi = v.get<int>();
            if (vi < 0 || vi >= g.n()) return fail("class vertex out of range");
            s.set(vi);
        }
        c.classes.push_back(std::move(s));
    }
    if (!c.is_partition_of(g.n())) return fail("classes do not partition the vertex set");
    auto pc = is_proper_coloring(g, c);
    if (!pc.proper)
        return fail("class containing vertex " + std::to_string(pc.violating_edge->first) +
                    " is not stable");
    int colors = 0;
    for (const auto& cls : c.classes) colors += !cls.empty();
    if (!j.contains("colors_used") || j["colors_used"].get<int>() != colors)
        return fail("colors_used does not match the classes");
    std::string claim = j.value("bound_claim", "");
    if (claim == "<=6") {
        if (colors > 6) return fail("bound claim <=6 violated");
    } else if (claim == "=omega") {
        if (!j.contains("omega") || j["omega"].is_null()) return fail("=omega claim without omega");
        int om = j["omega"].get<int>();
        if (clique_number(g).omega != om) return fail("omega field does not match the graph");
        if (colors != om) return fail("bound claim =omega violated");
    } else {
        return fail("unknown bound claim");
    }
    return true;
}

}  // namespace nearopt

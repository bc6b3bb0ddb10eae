#pragma once

// Neighborhood-trace decompositions around an induced C5 or C7 anchor,
// structural property validation, and global case classification.
//
// C5 decomposition, indices mod 5 (1-based accessors wrap):
//   A_i: trace {v_i}          B_i: trace {v_i, v_i+1}
//   D_i: trace {v_i-1, v_i+1} Z_i: trace {v_i-2, v_i, v_i+2}
//   T:   empty trace
// Any vertex adjacent to three consecutive cycle vertices yields an
// induced K4-e witness instead, so the partition is total.
//
// C7 decomposition, indices mod 7:
//   Q_i: trace {v_i-1, v_i+1}      X_i: trace {v_i, v_i+1, v_i+3, v_i-2}
//   Y_i: trace {v_i, v_i+1, v_i-2} L_i: trace {v_i, v_i+1, v_i+3}
//   M:   empty trace
// Any other trace is reported as an unclassified vertex.

#include <array>
#include <string>
#include <variant>

#include "nearopt/detect.hpp"
#include "nearopt/graph.hpp"

namespace nearopt {

struct C5Decomposition {
    std::array<int, 5> cycle{};                 // cycle[j] is the vertex labeled v_{j+1}
    std::array<Bitset, 5> A, B, D, Z;           // [j] holds subscript j+1
    Bitset T;

    static int wrap(int i) { return ((i - 1) % 5 + 5) % 5; }
    int v(int i) const { return cycle[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& a(int i) const { return A[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& b(int i) const { return B[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& d(int i) const { return D[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& z(int i) const { return Z[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& t() const { return T; }

    Bitset a_union() const;
    Bitset b_union() const;
    Bitset d_union() const;
    Bitset z_union() const;
};

struct C7Decomposition {
    std::array<int, 7> cycle{};
    std::array<Bitset, 7> Q, X, Y, L;
    Bitset M;

    static int wrap(int i) { return ((i - 1) % 7 + 7) % 7; }
    int v(int i) const { return cycle[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& q(int i) const { return Q[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& x(int i) const { return X[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& y(int i) const { return Y[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& l(int i) const { return L[static_cast<std::size_t>(wrap(i))]; }
    const Bitset& m() const { return M; }
};

struct K4eWitness {
    std::array<int, 4> vertices;  // {u, v_i, v_i+1, v_i+2}: an induced K4-e
};

struct UnclassifiedVertex {
    int vertex;
    std::vector<int> trace;  // 1-based cycle positions adjacent to the vertex
};

using C5DecomposeResult = std::variant<C5Decomposition, K4eWitness>;
using C7DecomposeResult = std::variant<C7Decomposition, UnclassifiedVertex>;

// Both throw std::invalid_argument unless `cycle` is an induced cycle of
// the right length in g.
C5DecomposeResult decompose_c5(const Graph& g, const std::array<int, 5>& cycle);
C7DecomposeResult decompose_c7(const Graph& g, const std::array<int, 7>& cycle);

// A failed structural property, re-checkable from the witness alone.
struct PropertyViolation {
    std::string property;      // e.g. "O2.clique", "c7.Y-multi"
    int index;                 // 1-based cycle subscript the check ran at (0 if none)
    std::vector<int> witness;  // vertices demonstrating the failure
};

// Checks every O1..O7 sub-item at every index. Empty for class members.
std::vector<PropertyViolation> validate_c5_properties(const Graph& g, const C5Decomposition& d);
// Checks stability of all trace classes, the long-range Q disjointness,
// M's isolation from Q/Y/L, and single-index concentration of X, Y, L.
std::vector<PropertyViolation> validate_c7_claims(const Graph& g, const C7Decomposition& d);

enum class CaseTag { F1, F2, F3, F4, PureC5, C7Case, Perfect };
std::string_view to_string(CaseTag tag);

struct CaseAnalysis {
    CaseTag tag = CaseTag::Perfect;
    std::vector<int> anchor;  // labeled C5/C7 realizing the tag; empty for Perfect
};

// Scans every induced C5 under all ten dihedral labelings. Tag priority
// F1 > F2 > F3 > F4 > PureC5; ties resolved by the lexicographically
// least realizing labeling. C7Case only when no C5 exists, Perfect when
// neither cycle exists. Throws NotAMember for non-members.
CaseAnalysis classify_case(const Graph& g);

// Same, but assumes a membership check already passed.
CaseAnalysis classify_case_member(const Graph& g);

}  // namespace nearopt

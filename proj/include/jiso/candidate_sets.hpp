// The extremal candidate sets of J(n,2): lexicographic prefixes F_m,
// suffixes L_m, the completed-rows set F', stable sets generated by
// domination cones, and the explicit (S, S') pairs whose boundary deltas
// and ratio inequalities the two growth lemmas assert.
#pragma once

#include "jiso/vertex_set.hpp"

#include <optional>
#include <vector>

namespace jiso {

// The m lex-least vertices of J(n,2). 0 < m <= C(n,2).
VertexSet first_m(i64 n, i64 m);

// The m lex-greatest vertices of J(n,2); equals reflect(first_m) as a set.
VertexSet last_m(i64 n, i64 m);

// F_{n*} completed to full rows: the first p complete rows of the diagram,
// p from the closed forms. |F'| = p*n - p(p+1)/2.
VertexSet f_prime(i64 n);

// Generators for a stable set: the set of all vertices dominated by some
// generator. The result is closed under domination by its members.
struct StableSetSpec {
    GraphParams params;  // k = 2
    std::vector<Vertex> generators;
};

VertexSet stable_closure(const StableSetSpec& spec);

// true iff S is closed under domination by its members (every vertex a
// member dominates is again a member).
bool is_stable(const VertexSet& s);

struct LemmaPair {
    VertexSet s;
    VertexSet s_prime;
    // Present for the horizontal-extension pairs: |∂S'| - |∂S| = 2(i+j'-n-2).
    std::optional<i64> predicted_boundary_delta;
};

// Horizontal extension: v = {i,j}, w = {i-1,j'} with j' >= j. S is the
// vertices right of w plus the vertices dominated by v; S' = S ∪ {w}.
// |S| = (n-j') + (j-i)(n-j+1) + (n-j+1)(n-j)/2. j' = n is allowed and makes
// the right-of-w part empty.
LemmaPair lemma4_pair(i64 n, i64 i, i64 j, i64 j_prime);

// Column extension: v = {i,j}, w = {i',j+1} with i' < i, and Q the column-j
// vertices between rows i' and i-1. S is the stable set determined by
// {v,w}; S' = S ∪ Q, |S'| = |S| + (i-i').
LemmaPair lemma5_pair(i64 n, i64 i_prime, i64 i, i64 j);

}  // namespace jiso

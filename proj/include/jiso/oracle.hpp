// Brute-force ground truth at desk scale. Exhaustive subset enumeration
// over bitmasks with incremental boundary updates; no pruning, no
// heuristics. Capacity is capped at C(n,k) <= 24 vertices.
//
// Note on "half": iso(G) minimizes over 0 < |S| <= V/2 where V is the
// number of vertices of the graph under test (C(n,k)), not the Johnson
// parameter n.
#pragma once

#include "jiso/ratio.hpp"
#include "jiso/vertex_set.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jiso {

constexpr i64 kOracleVertexCap = 24;

struct IsoResult {
    ExactRatio iso;
    VertexSet witness;  // lex-least witness among ties
};

// Exact iso(J(n,k)) by exhaustive enumeration. C(n,k) > 24 -> std::length_error.
IsoResult iso_exact(i64 n, i64 k);

struct BCurveEntry {
    i64 m = 0;
    i64 b = 0;               // B_{J(n,k)}(m)
    std::uint32_t witness_mask = 0;  // bit r set <=> vertex of lex rank r
};

struct BCurve {
    i64 n = 0, k = 0;
    std::vector<BCurveEntry> values;  // m = 1 .. m_max

    VertexSet witness_set(i64 m) const;
};

// Exact B(m) for 1 <= m <= m_max (m_max <= floor(C(n,k)/2)), with lex-least
// witnesses.
BCurve b_curve(i64 n, i64 k, i64 m_max);

enum class AkWinner { F, L, Tie };

struct AkRow {
    i64 m = 0;
    i64 b = 0;          // exhaustive minimum
    i64 f_boundary = 0;
    i64 l_boundary = 0;
    AkWinner winner = AkWinner::Tie;
    bool violation = false;  // b != min(f_boundary, l_boundary)
};

struct AkReport {
    i64 n = 0;
    std::vector<AkRow> rows;
    i64 violations = 0;
};

// For every 0 < m <= C(n,2)/2 checks that the exhaustive B(m) is attained
// by F_m or L_m. n <= 7.
AkReport verify_ak(i64 n);

// ceil(iso_exact * floor(C(n,k)/2)): integer lower bound on bisection width.
BigInt bisection_bound(i64 n, i64 k);

struct LemmaFailure {
    std::string lemma;  // "horizontal" or "column"
    i64 n = 0;
    std::vector<i64> params;
    std::string detail;
};

struct LemmaSweepReport {
    i64 n_max = 0;
    i64 horizontal_tuples = 0;
    i64 column_tuples = 0;
    std::vector<LemmaFailure> failures;
};

// Enumerates every valid horizontal-extension tuple (n,i,j,j') and column-
// extension tuple (n,i',i,j) for 4 <= n <= n_max (n_max <= 30) and asserts
// the exact boundary delta and both ratio inequalities with exact rationals.
LemmaSweepReport verify_lemma_sweep(i64 n_max);

}  // namespace jiso

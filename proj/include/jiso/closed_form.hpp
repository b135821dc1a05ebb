// Closed forms for the extremal candidates at the half-way cardinality
// n* = floor(n(n-1)/4): the row parameters p and q, the corner vertex
// (i,j) of L_{n*}, the exact sizes and boundaries of L_{n*} and F', both
// ratios, the conjecture gap |ratio_L - ratio_Fp|, and the asymptotic
// deviation ratio_L / ((2-sqrt(2)) n). Everything is exact integer /
// rational arithmetic; valid for arbitrary n (BigInt), n >= 3.
#pragma once

#include "jiso/ratio.hpp"
#include "jiso/wide_int.hpp"

#include <string>

namespace jiso {

struct ClosedFormRow {
    u64 n = 0;
    BigInt n_star;
    u64 p = 0;
    u64 q = 0;
    u64 i = 0;  // row of the first vertex of L_{n*}
    u64 j = 0;  // column of the first vertex of L_{n*}
    BigInt l_size, l_boundary;
    BigInt fp_size, fp_boundary;
    ExactRatio ratio_L, ratio_Fp;
    ExactRatio gap;         // |ratio_L - ratio_Fp|
    std::string deviation;  // ratio_L / ((2-sqrt(2)) n), >= 12 significant digits
};

// floor(n(n-1)/4). n < 3 -> std::domain_error (all ops below share this).
BigInt n_star(u64 n);

// Smallest p with p*n - p(p+1)/2 >= n*, by exact integer binary search.
u64 p_of(u64 n);
// The ceiling formula p = ceil((2n-1 - sqrt((2n-1)^2 - 8 n*))/2) evaluated
// exactly via integer square root; must agree with p_of everywhere.
u64 p_ceiling_formula(u64 n);

// Smallest q with q(q+1)/2 >= n*, by exact integer binary search.
u64 q_of(u64 n);
// q = ceil((sqrt(8 n* + 1) - 1)/2) evaluated exactly.
u64 q_ceiling_formula(u64 n);

// (i, j) with i = n - q and j = n + q(q-1)/2 + 1 - n*; L_{n*} is exactly
// the set of vertices lex >= {i, j}.
struct LvParams {
    u64 i = 0, j = 0;
};
LvParams lv_params(u64 n);

struct SetStats {
    BigInt size, boundary;
};

// |L_{n*}| (= n*) and |∂L_{n*}| = 2(n-1)|L| - (n-j+1)^2 - (q-1)^2(j-i-1) - q^2(n-j+1).
SetStats l_stats(u64 n);

// |F'| = p*n - p(p+1)/2 and |∂F'| = 2(n-1)|F'| - p(n-1)^2 - (n-p)p^2.
SetStats fp_stats(u64 n);

ExactRatio ratio_L(u64 n);
ExactRatio ratio_Fp(u64 n);

// The quartic-in-q form of |∂L_{n*}|/|L_{n*}|:
//   (-q^4 + 2q^3 + q^2 - 4 n*^2 - 2q + 4 n* q^2 - 12 n* q + 8 n* n - 4 n*) / (4 n*).
// Must equal ratio_L(n) as a reduced fraction; cross-checked by tests.
ExactRatio ratio_L_quartic(u64 n);

// |ratio_L - ratio_Fp|, exact. The conjectured bound gap <= 3/2 is decided
// by integer cross-multiplication 2|AD-BC| <= 3BD, never floating point.
ExactRatio conjecture_gap(u64 n);

// iso(J(n,2)) <= |∂L_{n*}|/|L_{n*}|, i.e. returns ratio_L(n). Note that F'
// is NOT a valid upper-bound witness: |F'| may exceed C(n,2)/2, so ratio_Fp
// only ever enters the lower bound min(ratio_L, ratio_Fp).
ExactRatio iso_upper_bound(u64 n);

// ratio_L(n) / ((2-sqrt(2)) n) with `sig` significant digits, rendered by
// exact decimal long division (reporting only, never a verdict).
std::string deviation(u64 n, int sig = 12);
// The same value as a high-precision exact rational (sqrt(2) taken to 40
// decimal digits); used by the convergence checks with loose tolerances.
ExactRatio deviation_ratio(u64 n);

ClosedFormRow closed_form_row(u64 n);

}  // namespace jiso

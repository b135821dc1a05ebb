// |∂S| computed two independent ways: direct edge counting over the
// materialized set, and the projection identity
//   |∂S| = k(n-k+1)|S| - sum over (k-1)-subsets A of |S_A|^2,
// where S_A = {v in S : A ⊂ v}. The two must agree everywhere; tests and
// the acceptance suite hold them to that.
#pragma once

#include "jiso/ratio.hpp"
#include "jiso/vertex_set.hpp"

#include <map>
#include <vector>

namespace jiso {

// counts[A] = |S_A| for every (k-1)-subset A with a nonzero count.
struct ProjectionProfile {
    std::map<std::vector<int>, i64> counts;

    i64 at(const std::vector<int>& a) const {
        auto it = counts.find(a);
        return it == counts.end() ? 0 : it->second;
    }
};

// Exact count of edges with one endpoint in S; symmetric in S and its
// complement. Empty set -> 0.
BigInt boundary_direct(const VertexSet& s);

ProjectionProfile projection_profile(const VertexSet& s);

// The projection identity above. Promotes to BigInt internally, never wraps.
BigInt boundary_lemma(const VertexSet& s);

// |∂S|/|S| as an exact fraction. Empty S -> std::domain_error.
ExactRatio iso_ratio(const VertexSet& s);

}  // namespace jiso

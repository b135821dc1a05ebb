// Shared helpers for the unit and acceptance suites: the fixed sampling
// seed, a pseudo-random subset source, and a naive boundary counter kept
// deliberately independent of the library's neighbor-generation path.
#pragma once

#include "jiso/boundary.hpp"
#include "jiso/vertex_set.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace jiso::testing {

// Recorded in acceptance output; change it and every sampled expectation moves.
inline constexpr std::uint64_t kSampleSeed = 0x4a49534f2d303031ULL;

// all (n, k) with 1 <= k <= n <= n_cap and C(n,k) <= c_cap
inline std::vector<GraphParams> small_graphs(i64 n_cap, i64 c_cap) {
    std::vector<GraphParams> out;
    for (i64 n = 1; n <= n_cap; ++n)
        for (i64 k = 1; k <= n; ++k)
            if (binomial(n, k) <= c_cap) out.emplace_back(n, k);
    return out;
}

inline std::vector<Vertex> all_vertices(const GraphParams& params) {
    std::vector<Vertex> out;
    const i64 total = params.vertex_count().convert_to<i64>();
    for (i64 r = 0; r < total; ++r) out.push_back(unrank_vertex(params, r));
    return out;
}

// uniformly random subset: every vertex kept with probability 1/2
inline VertexSet random_subset(const GraphParams& params, const std::vector<Vertex>& verts,
                               std::mt19937_64& rng) {
    std::vector<Vertex> keep;
    for (const auto& v : verts)
        if (rng() & 1) keep.push_back(v);
    return VertexSet::from_vertices(params, keep);
}

// Independent boundary oracle: walks every (member, non-member) pair and
// counts intersections directly.
inline i64 naive_boundary(const VertexSet& s) {
    const auto comp = s.complement();
    i64 cut = 0;
    for (i64 a = 0; a < s.size(); ++a) {
        const auto u = s.member(a);
        for (i64 b = 0; b < comp.size(); ++b) {
            const auto v = comp.member(b);
            std::vector<int> inter;
            std::set_intersection(u.begin(), u.end(), v.begin(), v.end(),
                                  std::back_inserter(inter));
            if (static_cast<i64>(inter.size()) == s.params().k - 1) ++cut;
        }
    }
    return cut;
}

}  // namespace jiso::testing

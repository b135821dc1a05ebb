#include "jiso/boundary.hpp"

#include <algorithm>
#include <stdexcept>

namespace jiso {

namespace {

// k = 2, small n: O(1) membership grid keyed by (row, column).
BigInt boundary_direct_k2_grid(const VertexSet& s) {
    const int n = static_cast<int>(s.params().n);
    std::vector<char> grid(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (i64 idx = 0; idx < s.size(); ++idx) {
        auto v = s.member(idx);
        grid[static_cast<std::size_t>(v[0]) * (n + 1) + v[1]] = 1;
    }
    auto in_s = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return grid[static_cast<std::size_t>(a) * (n + 1) + b] != 0;
    };
    u64 cut = 0;
    for (i64 idx = 0; idx < s.size(); ++idx) {
        auto v = s.member(idx);
        const int i = v[0], j = v[1];
        for (int x = 1; x <= n; ++x) {
            if (x == i || x == j) continue;
            if (!in_s(i, x)) ++cut;  // neighbor sharing i
            if (!in_s(j, x)) ++cut;  // neighbor sharing j
        }
    }
    return BigInt(cut);
}

// General k: neighbors are (v \ {v_t}) ∪ {w}; membership by binary search.
BigInt boundary_direct_general(const VertexSet& s) {
    const i64 k = s.params().k;
    const int n = static_cast<int>(s.params().n);
    u64 cut = 0;
    std::vector<int> nb(static_cast<std::size_t>(k));
    for (i64 idx = 0; idx < s.size(); ++idx) {
        auto v = s.member(idx);
        for (i64 t = 0; t < k; ++t) {
            for (int w = 1; w <= n; ++w) {
                bool in_v = std::binary_search(v.begin(), v.end(), w);
                if (in_v) continue;
                std::size_t pos = 0;
                for (i64 u = 0; u < k; ++u)
                    if (u != t) nb[pos++] = v[static_cast<std::size_t>(u)];
                nb[pos] = w;
                std::sort(nb.begin(), nb.end());
                if (!s.contains(nb)) ++cut;
            }
        }
    }
    return BigInt(cut);
}

}  // namespace

BigInt boundary_direct(const VertexSet& s) {
    if (s.empty()) return 0;
    if (s.params().k == 2 && s.params().n <= 4096) return boundary_direct_k2_grid(s);
    return boundary_direct_general(s);
}

ProjectionProfile projection_profile(const VertexSet& s) {
    const i64 k = s.params().k;
    ProjectionProfile prof;
    std::vector<int> key(static_cast<std::size_t>(k - 1));
    for (i64 idx = 0; idx < s.size(); ++idx) {
        auto v = s.member(idx);
        for (i64 t = 0; t < k; ++t) {
            std::size_t pos = 0;
            for (i64 u = 0; u < k; ++u)
                if (u != t) key[pos++] = v[static_cast<std::size_t>(u)];
            ++prof.counts[key];
        }
    }
    return prof;
}

BigInt boundary_lemma(const VertexSet& s) {
    const i64 k = s.params().k;
    const i64 n = s.params().n;
    u128 sum_sq = 0;
    if (k == 2) {
        // |S_{l}| is just the number of members containing element l
        std::vector<i64> counts(static_cast<std::size_t>(n + 1), 0);
        for (i64 idx = 0; idx < s.size(); ++idx) {
            auto v = s.member(idx);
            ++counts[static_cast<std::size_t>(v[0])];
            ++counts[static_cast<std::size_t>(v[1])];
        }
        for (i64 l = 1; l <= n; ++l) {
            u128 c = static_cast<u128>(counts[static_cast<std::size_t>(l)]);
            sum_sq += c * c;
        }
    } else {
        for (const auto& [key, c] : projection_profile(s).counts)
            sum_sq += static_cast<u128>(c) * static_cast<u128>(c);
    }
    BigInt total = BigInt(k) * (n - k + 1) * s.size();
    return total - BigInt(sum_sq);
}

ExactRatio iso_ratio(const VertexSet& s) {
    if (s.empty()) throw std::domain_error("iso_ratio: empty set");
    return make_ratio(boundary_lemma(s), BigInt(s.size()));
}

}  // namespace jiso

// Explicit finite vertex sets of one J(n,k). Storage is a flat row-major
// int buffer (k ints per vertex, rows lex-sorted, unique) so that sets with
// ~10^6 members stay cheap to build and walk. This is the desk-scale
// engine; the closed forms handle the large-n regime without materializing
// anything.
#pragma once

#include "jiso/johnson_core.hpp"

#include <span>
#include <vector>

namespace jiso {

class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(const GraphParams& params) : params_(params) {}

    // Sorts, deduplicates and validates.
    static VertexSet from_vertices(const GraphParams& params, const std::vector<Vertex>& members);
    // flat.size() must be a multiple of k; rows need not be sorted yet.
    static VertexSet from_flat(const GraphParams& params, std::vector<int> flat);

    const GraphParams& params() const { return params_; }
    i64 size() const { return static_cast<i64>(flat_.size()) / std::max<i64>(params_.k, 1); }
    bool empty() const { return flat_.empty(); }

    std::span<const int> member(i64 idx) const {
        return {flat_.data() + idx * params_.k, static_cast<std::size_t>(params_.k)};
    }
    Vertex vertex(i64 idx) const;

    bool contains(std::span<const int> elems) const;
    bool contains(const Vertex& v) const { return contains(v.elements()); }

    // All vertices of J(n,k) not in this set. Desk scale only: requires
    // C(n,k) <= kMaxMaterialized.
    VertexSet complement() const;

    bool operator==(const VertexSet&) const = default;

    // Soft cap for materialized work, documented in the module contract.
    static constexpr i64 kMaxMaterialized = 30'000'000;

  private:
    GraphParams params_;
    std::vector<int> flat_;
};

}  // namespace jiso

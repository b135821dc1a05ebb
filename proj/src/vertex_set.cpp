#include "jiso/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace jiso {

VertexSet VertexSet::from_vertices(const GraphParams& params, const std::vector<Vertex>& members) {
    std::vector<int> flat;
    flat.reserve(members.size() * static_cast<std::size_t>(params.k));
    for (const auto& v : members) {
        validate_vertex(params, v);
        flat.insert(flat.end(), v.elements().begin(), v.elements().end());
    }
    return from_flat(params, std::move(flat));
}

VertexSet VertexSet::from_flat(const GraphParams& params, std::vector<int> flat) {
    const std::size_t k = static_cast<std::size_t>(params.k);
    if (k == 0 || flat.size() % k != 0)
        throw std::invalid_argument("VertexSet: flat buffer size not a multiple of k");
    const std::size_t count = flat.size() / k;
    if (static_cast<i64>(count) > kMaxMaterialized)
        throw std::length_error("VertexSet: above the materialization cap");

    for (std::size_t r = 0; r < count; ++r)
        validate_vertex(params, std::span<const int>(flat.data() + r * k, k));

    // Generators emit rows already lex-sorted; keep that path allocation-free.
    bool sorted = true, dup = false;
    for (std::size_t r = 0; r + 1 < count; ++r) {
        const int* a = flat.data() + r * k;
        const int* b = a + k;
        if (std::lexicographical_compare(b, b + k, a, a + k)) {
            sorted = false;
            break;
        }
        if (std::equal(a, a + k, b)) dup = true;
    }

    VertexSet s(params);
    if (sorted && !dup) {
        s.flat_ = std::move(flat);
        return s;
    }

    std::vector<const int*> rows(count);
    for (std::size_t r = 0; r < count; ++r) rows[r] = flat.data() + r * k;
    std::sort(rows.begin(), rows.end(), [k](const int* a, const int* b) {
        return std::lexicographical_compare(a, a + k, b, b + k);
    });
    std::vector<int> out;
    out.reserve(flat.size());
    const int* prev = nullptr;
    for (const int* row : rows) {
        if (prev && std::equal(row, row + k, prev)) continue;
        out.insert(out.end(), row, row + k);
        prev = row;
    }
    s.flat_ = std::move(out);
    return s;
}

Vertex VertexSet::vertex(i64 idx) const {
    auto e = member(idx);
    return Vertex(std::vector<int>(e.begin(), e.end()));
}

bool VertexSet::contains(std::span<const int> elems) const {
    const i64 k = params_.k;
    if (static_cast<i64>(elems.size()) != k) return false;
    i64 lo = 0, hi = size();
    while (lo < hi) {
        i64 mid = lo + (hi - lo) / 2;
        auto row = member(mid);
        if (std::lexicographical_compare(row.begin(), row.end(), elems.begin(), elems.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == size()) return false;
    auto row = member(lo);
    return std::equal(row.begin(), row.end(), elems.begin(), elems.end());
}

VertexSet VertexSet::complement() const {
    BigInt total = params_.vertex_count();
    if (total > kMaxMaterialized)
        throw std::length_error("complement: C(n,k) above the materialization cap");

    std::vector<int> flat;
    const i64 k = params_.k, n = params_.n;
    flat.reserve(static_cast<std::size_t>((total.convert_to<i64>() - size()) * k));
    // walk all k-subsets in lex order, skipping members (both sides sorted)
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (i64 t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = static_cast<int>(t + 1);
    i64 next_member = 0;
    for (;;) {
        bool is_member = false;
        if (next_member < size()) {
            auto row = member(next_member);
            if (std::equal(row.begin(), row.end(), cur.begin())) {
                is_member = true;
                ++next_member;
            }
        }
        if (!is_member) flat.insert(flat.end(), cur.begin(), cur.end());
        i64 t = k - 1;
        while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++cur[static_cast<std::size_t>(t)];
        for (i64 s = t + 1; s < k; ++s)
            cur[static_cast<std::size_t>(s)] = cur[static_cast<std::size_t>(s - 1)] + 1;
    }

    VertexSet out(params_);
    out.flat_ = std::move(flat);
    return out;
}

}  // namespace jiso

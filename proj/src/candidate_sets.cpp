#include "jiso/candidate_sets.hpp"

#include "jiso/closed_form.hpp"

#include <stdexcept>

namespace jiso {

namespace {

GraphParams params2(i64 n) { return GraphParams(n, 2); }

void append_pair(std::vector<int>& flat, i64 i, i64 j) {
    flat.push_back(static_cast<int>(i));
    flat.push_back(static_cast<int>(j));
}

// all vertices dominated by {a,b}: rows a.., columns >= b
void append_cone(std::vector<int>& flat, i64 n, i64 a, i64 b) {
    for (i64 i = a; i < n; ++i)
        for (i64 j = std::max(b, i + 1); j <= n; ++j) append_pair(flat, i, j);
}

}  // namespace

VertexSet first_m(i64 n, i64 m) {
    const auto params = params2(n);
    const i64 total = n * (n - 1) / 2;
    if (m < 1 || m > total) throw std::out_of_range("first_m: m outside (0, C(n,2)]");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(2 * m));
    i64 left = m;
    for (i64 i = 1; i < n && left > 0; ++i)
        for (i64 j = i + 1; j <= n && left > 0; ++j, --left) append_pair(flat, i, j);
    return VertexSet::from_flat(params, std::move(flat));
}

VertexSet last_m(i64 n, i64 m) {
    const auto params = params2(n);
    const i64 total = n * (n - 1) / 2;
    if (m < 1 || m > total) throw std::out_of_range("last_m: m outside (0, C(n,2)]");
    // locate the (total-m)-th vertex (0-based) and emit everything from it on
    i64 skip = total - m;
    i64 row = 1;
    while (skip >= n - row) {
        skip -= n - row;
        ++row;
    }
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(2 * m));
    for (i64 j = row + 1 + skip; j <= n; ++j) append_pair(flat, row, j);
    for (i64 i = row + 1; i < n; ++i)
        for (i64 j = i + 1; j <= n; ++j) append_pair(flat, i, j);
    return VertexSet::from_flat(params, std::move(flat));
}

VertexSet f_prime(i64 n) {
    if (n < 3) throw std::domain_error("f_prime: requires n >= 3");
    const u64 p = p_of(static_cast<u64>(n));
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(2 * (static_cast<i64>(p) * n)));
    for (i64 i = 1; i <= static_cast<i64>(p); ++i)
        for (i64 j = i + 1; j <= n; ++j) append_pair(flat, i, j);
    return VertexSet::from_flat(params2(n), std::move(flat));
}

VertexSet stable_closure(const StableSetSpec& spec) {
    if (spec.params.k != 2) throw std::domain_error("stable_closure: k = 2 only");
    std::vector<int> flat;
    for (const auto& g : spec.generators) {
        validate_vertex(spec.params, g);
        append_cone(flat, spec.params.n, g.row(), g.column());
    }
    return VertexSet::from_flat(spec.params, std::move(flat));  // sorts + dedupes
}

bool is_stable(const VertexSet& s) {
    if (s.params().k != 2) throw std::domain_error("is_stable: k = 2 only");
    const int n = static_cast<int>(s.params().n);
    // closure under the two covering steps (row+1, column+1) is equivalent
    // to closure under domination on the triangular grid
    for (i64 idx = 0; idx < s.size(); ++idx) {
        auto v = s.member(idx);
        const int i = v[0], j = v[1];
        if (i + 1 < j) {
            const int down[2] = {i + 1, j};
            if (!s.contains(down)) return false;
        }
        if (j + 1 <= n) {
            const int right[2] = {i, j + 1};
            if (!s.contains(right)) return false;
        }
    }
    return true;
}

LemmaPair lemma4_pair(i64 n, i64 i, i64 j, i64 j_prime) {
    if (!(2 <= i && i < j && j <= j_prime && j_prime <= n))
        throw std::invalid_argument("lemma4_pair: need 2 <= i < j <= j' <= n");
    std::vector<int> flat;
    for (i64 c = j_prime + 1; c <= n; ++c) append_pair(flat, i - 1, c);  // right of w
    append_cone(flat, n, i, j);
    auto s = VertexSet::from_flat(params2(n), std::move(flat));

    const i64 expected = (n - j_prime) + (j - i) * (n - j + 1) + (n - j + 1) * (n - j) / 2;
    if (s.size() != expected) throw std::logic_error("lemma4_pair: size formula mismatch");

    std::vector<int> flat_prime;
    flat_prime.reserve(static_cast<std::size_t>(2 * (s.size() + 1)));
    for (i64 idx = 0; idx < s.size(); ++idx) {
        auto v = s.member(idx);
        flat_prime.insert(flat_prime.end(), v.begin(), v.end());
    }
    append_pair(flat_prime, i - 1, j_prime);  // w
    auto s_prime = VertexSet::from_flat(params2(n), std::move(flat_prime));
    if (s_prime.size() != s.size() + 1) throw std::logic_error("lemma4_pair: w was already in S");

    LemmaPair pair;
    pair.s = std::move(s);
    pair.s_prime = std::move(s_prime);
    pair.predicted_boundary_delta = 2 * (i + j_prime - n - 2);
    return pair;
}

LemmaPair lemma5_pair(i64 n, i64 i_prime, i64 i, i64 j) {
    if (!(1 <= i_prime && i_prime < i && i < j && j <= n - 1))
        throw std::invalid_argument("lemma5_pair: need 1 <= i' < i < j <= n-1");
    StableSetSpec spec{params2(n), {Vertex{static_cast<int>(i), static_cast<int>(j)},
                                    Vertex{static_cast<int>(i_prime), static_cast<int>(j + 1)}}};
    auto s = stable_closure(spec);

    const i64 expected = (n - j + 1) * (n - j) / 2 + (n - j) * (j - i_prime) + (j - i);
    if (s.size() != expected) throw std::logic_error("lemma5_pair: size formula mismatch");

    std::vector<int> flat;
    for (i64 idx = 0; idx < s.size(); ++idx) {
        auto v = s.member(idx);
        flat.insert(flat.end(), v.begin(), v.end());
    }
    for (i64 r = i_prime; r < i; ++r) {  // Q: column j between rows i' and i-1
        const int q[2] = {static_cast<int>(r), static_cast<int>(j)};
        if (s.contains(q)) throw std::logic_error("lemma5_pair: Q intersects S");
        append_pair(flat, r, j);
    }
    auto s_prime = VertexSet::from_flat(params2(n), std::move(flat));
    if (s_prime.size() != s.size() + (i - i_prime))
        throw std::logic_error("lemma5_pair: |S'| != |S| + (i - i')");

    LemmaPair pair;
    pair.s = std::move(s);
    pair.s_prime = std::move(s_prime);
    return pair;
}

}  // namespace jiso

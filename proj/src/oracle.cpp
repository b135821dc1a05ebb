#include "jiso/oracle.hpp"

#include "jiso/boundary.hpp"
#include "jiso/candidate_sets.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace jiso {

namespace {

struct SmallGraph {
    GraphParams params;
    int v_count = 0;
    i64 deg = 0;
    std::vector<Vertex> verts;          // lex order, index = rank
    std::vector<std::uint32_t> adj;     // adjacency bitmasks
};

SmallGraph build_small_graph(i64 n, i64 k) {
    GraphParams params(n, k);
    BigInt total = params.vertex_count();
    if (total > kOracleVertexCap)
        throw std::length_error("oracle: C(n,k) above the exhaustive cap of 24");
    SmallGraph g{params, 0, 0, {}, {}};
    g.v_count = total.convert_to<int>();
    g.deg = degree(params);
    g.verts.reserve(static_cast<std::size_t>(g.v_count));
    for (int r = 0; r < g.v_count; ++r) g.verts.push_back(unrank_vertex(params, r));
    g.adj.assign(static_cast<std::size_t>(g.v_count), 0);
    for (int a = 0; a < g.v_count; ++a)
        for (int b = a + 1; b < g.v_count; ++b)
            if (adjacent(g.verts[static_cast<std::size_t>(a)],
                         g.verts[static_cast<std::size_t>(b)])) {
                g.adj[static_cast<std::size_t>(a)] |= 1u << b;
                g.adj[static_cast<std::size_t>(b)] |= 1u << a;
            }
    return g;
}

// boundary size for every subset: add one vertex v to T,
// delta = deg(v) - 2 |N(v) ∩ T|
std::vector<std::uint16_t> boundary_table(const SmallGraph& g) {
    const std::size_t total = std::size_t{1} << g.v_count;
    std::vector<std::uint16_t> bnd(total, 0);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::uint32_t m = static_cast<std::uint32_t>(mask);
        const std::uint32_t low = m & (~m + 1);
        const int v = std::countr_zero(m);
        const std::uint32_t rest = m ^ low;
        const int inside = std::popcount(g.adj[static_cast<std::size_t>(v)] & rest);
        bnd[mask] = static_cast<std::uint16_t>(bnd[rest] + g.deg - 2 * inside);
    }
    return bnd;
}

// lexicographic comparison of the sorted rank sequences two masks encode
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        const int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

VertexSet mask_to_set(const SmallGraph& g, std::uint32_t mask) {
    std::vector<Vertex> vs;
    for (std::uint32_t m = mask; m; m &= m - 1)
        vs.push_back(g.verts[static_cast<std::size_t>(std::countr_zero(m))]);
    return VertexSet::from_vertices(g.params, vs);
}

}  // namespace

IsoResult iso_exact(i64 n, i64 k) {
    const SmallGraph g = build_small_graph(n, k);
    const auto bnd = boundary_table(g);
    const int half = g.v_count / 2;

    u64 best_num = 0, best_den = 0;  // boundary / size
    std::uint32_t best_mask = 0;
    const std::size_t total = std::size_t{1} << g.v_count;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int sz = std::popcount(static_cast<std::uint32_t>(mask));
        if (sz > half) continue;
        const u64 b = bnd[mask];
        if (best_den == 0 || b * best_den < best_num * static_cast<u64>(sz) ||
            (b * best_den == best_num * static_cast<u64>(sz) &&
             mask_lex_less(static_cast<std::uint32_t>(mask), best_mask))) {
            best_num = b;
            best_den = static_cast<u64>(sz);
            best_mask = static_cast<std::uint32_t>(mask);
        }
    }
    return {make_ratio(BigInt(best_num), BigInt(best_den)), mask_to_set(g, best_mask)};
}

VertexSet BCurve::witness_set(i64 m) const {
    for (const auto& e : values)
        if (e.m == m) {
            SmallGraph g = build_small_graph(n, k);
            return mask_to_set(g, e.witness_mask);
        }
    throw std::out_of_range("BCurve: no entry for this m");
}

BCurve b_curve(i64 n, i64 k, i64 m_max) {
    const SmallGraph g = build_small_graph(n, k);
    if (m_max < 1 || m_max > g.v_count / 2)
        throw std::out_of_range("b_curve: m_max outside [1, floor(C(n,k)/2)]");
    const auto bnd = boundary_table(g);

    std::vector<i64> best(static_cast<std::size_t>(m_max + 1), -1);
    std::vector<std::uint32_t> wit(static_cast<std::size_t>(m_max + 1), 0);
    const std::size_t total = std::size_t{1} << g.v_count;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int sz = std::popcount(static_cast<std::uint32_t>(mask));
        if (sz > m_max) continue;
        const i64 b = bnd[mask];
        auto& cur = best[static_cast<std::size_t>(sz)];
        auto& w = wit[static_cast<std::size_t>(sz)];
        if (cur < 0 || b < cur ||
            (b == cur && mask_lex_less(static_cast<std::uint32_t>(mask), w))) {
            cur = b;
            w = static_cast<std::uint32_t>(mask);
        }
    }

    BCurve curve{n, k, {}};
    for (i64 m = 1; m <= m_max; ++m)
        curve.values.push_back({m, best[static_cast<std::size_t>(m)],
                                wit[static_cast<std::size_t>(m)]});
    return curve;
}

AkReport verify_ak(i64 n) {
    if (n > 7) throw std::length_error("verify_ak: n <= 7 (exhaustive sweep)");
    const i64 c = n * (n - 1) / 2;
    const auto curve = b_curve(n, 2, c / 2);

    AkReport report{n, {}, 0};
    for (const auto& e : curve.values) {
        AkRow row;
        row.m = e.m;
        row.b = e.b;
        row.f_boundary = boundary_lemma(first_m(n, e.m)).convert_to<i64>();
        row.l_boundary = boundary_lemma(last_m(n, e.m)).convert_to<i64>();
        row.winner = row.f_boundary < row.l_boundary   ? AkWinner::F
                     : row.l_boundary < row.f_boundary ? AkWinner::L
                                                       : AkWinner::Tie;
        row.violation = e.b != std::min(row.f_boundary, row.l_boundary);
        if (row.violation) ++report.violations;
        report.rows.push_back(row);
    }
    return report;
}

BigInt bisection_bound(i64 n, i64 k) {
    const auto result = iso_exact(n, k);
    const BigInt half = binomial(n, k) / 2;
    const BigInt a = numerator(result.iso), b = denominator(result.iso);
    return (a * half + b - 1) / b;  // ceil(a*half/b)
}

LemmaSweepReport verify_lemma_sweep(i64 n_max) {
    if (n_max > 30) throw std::length_error("verify_lemma_sweep: n_max <= 30");
    LemmaSweepReport report{n_max, 0, 0, {}};

    auto ratio_leq = [](const BigInt& b1, i64 s1, const BigInt& b2, i64 s2) {
        return b1 * s2 <= b2 * s1;  // b1/s1 <= b2/s2
    };

    for (i64 n = 4; n <= n_max; ++n) {
        for (i64 i = 2; i < n; ++i)
            for (i64 j = i + 1; j <= n; ++j)
                for (i64 jp = j; jp <= n; ++jp) {
                    ++report.horizontal_tuples;
                    auto pair = lemma4_pair(n, i, j, jp);
                    const BigInt bs = boundary_direct(pair.s);
                    const BigInt bsp = boundary_direct(pair.s_prime);
                    const i64 delta = (bsp - bs).convert_to<i64>();
                    if (delta != *pair.predicted_boundary_delta)
                        report.failures.push_back(
                            {"horizontal", n, {i, j, jp},
                             "delta " + std::to_string(delta) + " != predicted " +
                                 std::to_string(*pair.predicted_boundary_delta)});
                    else if (!ratio_leq(bsp, pair.s_prime.size(), bs, pair.s.size()))
                        report.failures.push_back({"horizontal", n, {i, j, jp},
                                                   "ratio did not decrease"});
                }
        for (i64 ip = 1; ip < n; ++ip)
            for (i64 i = ip + 1; i < n; ++i)
                for (i64 j = i + 1; j <= n - 1; ++j) {
                    ++report.column_tuples;
                    auto pair = lemma5_pair(n, ip, i, j);
                    const BigInt bs = boundary_direct(pair.s);
                    const BigInt bsp = boundary_direct(pair.s_prime);
                    if (!ratio_leq(bsp, pair.s_prime.size(), bs, pair.s.size()))
                        report.failures.push_back({"column", n, {ip, i, j},
                                                   "ratio did not decrease"});
                }
    }
    return report;
}

}  // namespace jiso

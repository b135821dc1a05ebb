#include "jiso/closed_form.hpp"

#include <stdexcept>

namespace jiso {

namespace {

void require_n(u64 n) {
    if (n < 3) throw std::domain_error("closed forms require n >= 3");
}

// number of vertices in the first p rows: p*n - p(p+1)/2
BigInt first_rows_count(u64 n, u64 p) { return BigInt(p) * n - BigInt(p) * (p + 1) / 2; }

// number of vertices in the last q rows: q(q+1)/2
BigInt last_rows_count(u64 q) { return BigInt(q) * (q + 1) / 2; }

}  // namespace

BigInt n_star(u64 n) {
    require_n(n);
    return BigInt(n) * (n - 1) / 4;
}

u64 p_of(u64 n) {
    require_n(n);
    const BigInt target = n_star(n);
    u64 lo = 1, hi = n - 1;  // the full diagram certainly reaches n*
    while (lo < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (first_rows_count(n, mid) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

u64 p_ceiling_formula(u64 n) {
    require_n(n);
    BigInt a = BigInt(2) * n - 1;
    BigInt d = a * a - 8 * n_star(n);
    BigInt s = isqrt_big(d);
    // ceil((a - sqrt(d))/2) == floor((a - floor(sqrt(d)) + 1)/2), whether or
    // not d is a perfect square
    return ((a - s + 1) / 2).convert_to<u64>();
}

u64 q_of(u64 n) {
    require_n(n);
    const BigInt target = n_star(n);
    u64 lo = 1, hi = n - 1;
    while (lo < hi) {
        u64 mid = lo + (hi - lo) / 2;
        if (last_rows_count(mid) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

u64 q_ceiling_formula(u64 n) {
    require_n(n);
    BigInt e = 8 * n_star(n) + 1;
    BigInt s = isqrt_big(e);
    // ceil((sqrt(e)-1)/2): exact when e is a perfect square, otherwise
    // sqrt(e) lies strictly in (s, s+1) and the ceiling moves to ceil(s/2)
    BigInt q = (s * s == e) ? BigInt(s / 2) : BigInt((s + 1) / 2);
    return q.convert_to<u64>();
}

LvParams lv_params(u64 n) {
    require_n(n);
    const u64 q = q_of(n);
    const BigInt ns = n_star(n);
    BigInt j = BigInt(n) + BigInt(q) * (q - 1) / 2 + 1 - ns;
    LvParams lv{n - q, j.convert_to<u64>()};
    if (!(lv.i + 1 <= lv.j && lv.j <= n))
        throw std::logic_error("lv_params: (i, j) outside the diagram");
    return lv;
}

SetStats l_stats(u64 n) {
    require_n(n);
    const u64 q = q_of(n);
    const auto [i, j] = lv_params(n);
    const BigInt ns = n_star(n);
    BigInt col = BigInt(n) - j + 1;  // vertices of L_{n*} in row i
    BigInt boundary = BigInt(2) * (n - 1) * ns - col * col -
                      BigInt(q - 1) * (q - 1) * (j - i - 1) - BigInt(q) * q * col;
    return {ns, boundary};
}

SetStats fp_stats(u64 n) {
    require_n(n);
    const u64 p = p_of(n);
    BigInt size = first_rows_count(n, p);
    // profile of the first p complete rows: p elements covered n-1 times,
    // the other n-p elements covered p times
    BigInt boundary = BigInt(2) * (n - 1) * size - BigInt(p) * (n - 1) * (n - 1) -
                      (BigInt(n) - p) * p * p;
    return {size, boundary};
}

ExactRatio ratio_L(u64 n) {
    auto st = l_stats(n);
    return make_ratio(st.boundary, st.size);
}

ExactRatio ratio_Fp(u64 n) {
    auto st = fp_stats(n);
    return make_ratio(st.boundary, st.size);
}

ExactRatio ratio_L_quartic(u64 n) {
    require_n(n);
    const BigInt q = q_of(n);
    const BigInt ns = n_star(n);
    BigInt num = -q * q * q * q + 2 * q * q * q + q * q - 4 * ns * ns - 2 * q +
                 4 * ns * q * q - 12 * ns * q + 8 * ns * n - 4 * ns;
    return make_ratio(num, 4 * ns);
}

ExactRatio conjecture_gap(u64 n) { return abs_ratio(ratio_L(n) - ratio_Fp(n)); }

ExactRatio iso_upper_bound(u64 n) { return ratio_L(n); }

namespace {
constexpr int kSqrt2Digits = 40;
}

ExactRatio deviation_ratio(u64 n) {
    require_n(n);
    auto st = l_stats(n);
    // ratio_L / ((2-sqrt(2)) n) == l_boundary (2+sqrt(2)) / (2 l_size n);
    // sqrt(2) enters only here, taken to 40 decimal digits — far beyond the
    // 12 rendered digits
    static const BigInt root = sqrt2_scaled(kSqrt2Digits);
    static const BigInt scale = [] {
        BigInt s = 1;
        for (int i = 0; i < kSqrt2Digits; ++i) s *= 10;
        return s;
    }();
    BigInt num = st.boundary * (2 * scale + root);
    BigInt den = BigInt(2) * st.size * n * scale;
    return make_ratio(num, den);
}

std::string deviation(u64 n, int sig) { return decimal_string(deviation_ratio(n), sig); }

ClosedFormRow closed_form_row(u64 n) {
    require_n(n);
    ClosedFormRow row;
    row.n = n;
    row.n_star = n_star(n);
    row.p = p_of(n);
    row.q = q_of(n);
    const auto lv = lv_params(n);
    row.i = lv.i;
    row.j = lv.j;
    const auto ls = l_stats(n);
    row.l_size = ls.size;
    row.l_boundary = ls.boundary;
    const auto fs = fp_stats(n);
    row.fp_size = fs.size;
    row.fp_boundary = fs.boundary;
    row.ratio_L = make_ratio(ls.boundary, ls.size);
    row.ratio_Fp = make_ratio(fs.boundary, fs.size);
    row.gap = abs_ratio(row.ratio_L - row.ratio_Fp);
    row.deviation = deviation(n);
    return row;
}

}  // namespace jiso

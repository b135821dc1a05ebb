#include "jiso/scan.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jiso {

using json = nlohmann::json;

namespace {

// Above this the u128 pre-stage of the kernel could lose exactness, so we
// go straight to BigInt. (The checked 256-bit stage protects itself.)
constexpr u64 kFastPathMaxN = 1'000'000'000'000'000ULL;  // 10^15

u64 checksum_contribution(u64 n, u64 gap_num_low64) {
    return mix64(mix64(n) ^ gap_num_low64);
}

struct GapValue {
    UInt256 num, den;  // reduced
};

// Closed forms on native + checked 256-bit integers. Throws
// std::overflow_error if anything outgrows 256 bits.
GapValue gap_kernel_fast(u64 n) {
    const u128 big_n = n;
    const u128 nstar = big_n * (big_n - 1) / 4;

    // q = ceil((sqrt(8 n* + 1) - 1)/2), exact integer square root
    const u128 e = 8 * nstar + 1;
    const u128 se = isqrt_u128(e);
    const u64 q = static_cast<u64>(se * se == e ? se / 2 : (se + 1) / 2);

    // p = ceil((2n - 1 - sqrt((2n-1)^2 - 8 n*))/2)
    const u128 a = 2 * big_n - 1;
    const u128 d = a * a - 8 * nstar;
    const u128 sd = isqrt_u128(d);
    const u64 p = static_cast<u64>((a - sd + 1) / 2);

    const u64 i = n - q;
    const u64 j = static_cast<u64>(big_n + static_cast<u128>(q) * (q - 1) / 2 + 1 - nstar);

    const Int256 nn(n);
    const Int256 l_size(nstar);
    const Int256 col = nn - j + 1;
    const Int256 l_boundary =
        2 * (nn - 1) * l_size - col * col - Int256(q - 1) * (q - 1) * (Int256(j) - i - 1) -
        Int256(q) * q * col;

    const Int256 fp_size = Int256(p) * nn - Int256(p) * (p + 1) / 2;
    const Int256 fp_boundary =
        2 * (nn - 1) * fp_size - Int256(p) * (nn - 1) * (nn - 1) - (nn - p) * Int256(p) * p;

    Int256 cross = l_boundary * fp_size - fp_boundary * l_size;
    if (cross < 0) cross = -cross;
    const Int256 den = l_size * fp_size;

    UInt256 unum = cross.convert_to<UInt256>();
    UInt256 uden = den.convert_to<UInt256>();
    if (unum == 0) return {UInt256(0), UInt256(1)};
    const UInt256 g = bmp::gcd(unum, uden);
    return {unum / g, uden / g};
}

struct ChunkState {
    ExactRatio max_gap;   // running maximum, first n attaining it
    u64 argmax_n = 0;
    bool have_max = false;
    std::vector<Violation> violations;
    u64 checksum = 0;
    u64 verified = 0;

    void fold_in(const ChunkState& next) {
        if (next.have_max && (!have_max || next.max_gap > max_gap)) {
            max_gap = next.max_gap;
            argmax_n = next.argmax_n;
            have_max = true;
        }
        violations.insert(violations.end(), next.violations.begin(), next.violations.end());
        checksum ^= next.checksum;
        verified += next.verified;
    }
};

// gap(n) > bound, by cross multiplication in 512 bits (cannot overflow for
// reduced 256-bit fractions against a 64-bit bound)
bool exceeds_bound_fast(const GapValue& gap, u64 bound_num, u64 bound_den) {
    const Int512 lhs = Int512(gap.num) * bound_den;
    const Int512 rhs = Int512(bound_num) * Int512(gap.den);
    return lhs > rhs;
}

ExactRatio gap_value_to_ratio(const GapValue& g) {
    return make_ratio(BigInt(g.num), BigInt(g.den));
}

// Deterministic per-range sample of n values re-verified on the BigInt path.
std::vector<u64> slow_path_sample(u64 n_from, u64 n_to, u64 count) {
    const u64 span = n_to - n_from + 1;
    if (count >= span) {
        std::vector<u64> all(span);
        for (u64 t = 0; t < span; ++t) all[t] = n_from + t;
        return all;
    }
    std::set<u64> picks;
    u64 state = mix64(n_from) ^ mix64(~n_to);
    while (picks.size() < count) {
        state = mix64(state + 0x9E3779B97F4A7C15ULL);
        picks.insert(n_from + state % span);
    }
    return {picks.begin(), picks.end()};
}

// gap a/b > c/d for reduced 256-bit fractions, via 512-bit products
bool gap_greater(const GapValue& a, const GapValue& b) {
    return Int512(a.num) * Int512(b.den) > Int512(b.num) * Int512(a.den);
}

ChunkState scan_chunk(u64 from, u64 to, u64 bound_num, u64 bound_den,
                      const std::vector<u64>& samples) {
    ChunkState st;
    GapValue max{UInt256(0), UInt256(1)};
    u64 argmax = 0;
    bool have_max = false;
    bool max_is_big = false;       // fell off the 256-bit representation
    ExactRatio max_big;

    auto sample_it = std::lower_bound(samples.begin(), samples.end(), from);
    for (u64 n = from; n <= to; ++n) {
        const bool sampled = sample_it != samples.end() && *sample_it == n;
        if (sampled) ++sample_it;

        if (n > kFastPathMaxN) {
            const ExactRatio g = gap_exact(n);
            if (sampled) ++st.verified;
            st.checksum ^= checksum_contribution(n, low64(numerator(g)));
            if (g > ExactRatio(BigInt(bound_num), BigInt(bound_den)))
                st.violations.push_back({n, g});
            const ExactRatio prev = max_is_big ? max_big : gap_value_to_ratio(max);
            if (!have_max || g > prev) {
                max_big = g;
                max_is_big = true;
                argmax = n;
                have_max = true;
            }
            continue;
        }

        GapValue gap;
        bool exceeded;
        try {
            gap = gap_kernel_fast(n);
            exceeded = exceeds_bound_fast(gap, bound_num, bound_den);
        } catch (const std::overflow_error&) {
            const ExactRatio g = gap_exact(n);
            gap = {numerator(g).convert_to<UInt256>(), denominator(g).convert_to<UInt256>()};
            exceeded = g > ExactRatio(BigInt(bound_num), BigInt(bound_den));
        }

        if (sampled) {
            ++st.verified;
            if (gap_exact(n) != gap_value_to_ratio(gap))
                throw std::logic_error("scan: fast/slow path disagree at n=" + std::to_string(n));
        }

        st.checksum ^= checksum_contribution(n, low64(gap.num));
        if (exceeded) st.violations.push_back({n, gap_value_to_ratio(gap)});

        if (!have_max || (max_is_big ? gap_value_to_ratio(gap) > max_big
                                     : gap_greater(gap, max))) {
            max = gap;
            max_is_big = false;
            argmax = n;
            have_max = true;
        }
    }

    st.have_max = have_max;
    if (have_max) {
        st.max_gap = max_is_big ? max_big : gap_value_to_ratio(max);
        st.argmax_n = argmax;
    }
    return st;
}

std::pair<u64, u64> bound_as_u64(const ExactRatio& bound) {
    const BigInt num = numerator(bound), den = denominator(bound);
    if (num < 0) throw std::invalid_argument("scan: bound must be nonnegative");
    if (num > std::numeric_limits<u64>::max() || den > std::numeric_limits<u64>::max())
        throw std::invalid_argument("scan: bound terms must fit 64 bits");
    return {num.convert_to<u64>(), den.convert_to<u64>()};
}

}  // namespace

ExactRatio gap_exact(u64 n) { return conjecture_gap(n); }

ExactRatio gap_fast(u64 n) {
    if (n < 3) throw std::domain_error("gap requires n >= 3");
    if (n > kFastPathMaxN) return gap_exact(n);
    try {
        return gap_value_to_ratio(gap_kernel_fast(n));
    } catch (const std::overflow_error&) {
        return gap_exact(n);
    }
}

bool ScanReport::operator==(const ScanReport& o) const {
    return n_from == o.n_from && n_to == o.n_to && max_gap == o.max_gap &&
           argmax_n == o.argmax_n && violations == o.violations && checksum == o.checksum;
}

ScanReport scan_conjecture(u64 n_from, u64 n_to, const ScanOptions& opts) {
    if (n_from < 3) throw std::invalid_argument("scan: n_from must be >= 3");
    if (n_from > n_to) throw std::invalid_argument("scan: inverted range");
    const auto [bound_num, bound_den] = bound_as_u64(opts.bound);
    const auto t0 = std::chrono::steady_clock::now();

    ChunkState prefix;
    u64 start = n_from;
    u64 resumed_from = 0;
    if (!opts.checkpoint_path.empty()) {
        if (auto cp = read_checkpoint(opts.checkpoint_path);
            cp && cp->last_n >= n_from && cp->last_n <= n_to) {
            prefix.max_gap = cp->max_gap;
            prefix.argmax_n = cp->argmax_n;
            prefix.have_max = true;
            prefix.checksum = cp->checksum;
            prefix.violations = cp->violations;
            start = cp->last_n + 1;
            resumed_from = cp->last_n;
        }
    }

    // sampling is a function of the requested range only, so resumed and
    // fresh scans agree on which n get re-verified
    const auto samples = slow_path_sample(n_from, n_to, opts.slow_path_samples);

    if (start <= n_to) {
        const u64 chunk = std::max<u64>(opts.chunk_size, 1);
        const u64 span = n_to - start + 1;
        const i64 num_chunks = static_cast<i64>((span + chunk - 1) / chunk);

        std::vector<ChunkState> done(static_cast<std::size_t>(num_chunks));
        std::vector<char> ready(static_cast<std::size_t>(num_chunks), 0);
        i64 next_to_fold = 0;
        u64 folded_since_checkpoint = 0;
        std::exception_ptr failure;

#ifdef _OPENMP
        const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
        for (i64 c = 0; c < num_chunks; ++c) {
            ChunkState st;
            try {
                const u64 lo = start + static_cast<u64>(c) * chunk;
                const u64 hi = std::min(n_to, lo + chunk - 1);
                st = scan_chunk(lo, hi, bound_num, bound_den, samples);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical(jiso_scan_merge)
#endif
                failure = std::current_exception();
                continue;
            }
#ifdef _OPENMP
#pragma omp critical(jiso_scan_merge)
#endif
            {
                done[static_cast<std::size_t>(c)] = std::move(st);
                ready[static_cast<std::size_t>(c)] = 1;
                // fold completed chunks in index order; the frontier is the
                // single writer of prefix state and checkpoints
                while (next_to_fold < num_chunks && ready[static_cast<std::size_t>(next_to_fold)]) {
                    prefix.fold_in(done[static_cast<std::size_t>(next_to_fold)]);
                    done[static_cast<std::size_t>(next_to_fold)] = ChunkState{};
                    ++next_to_fold;
                    ++folded_since_checkpoint;
                    if (!opts.checkpoint_path.empty() &&
                        (folded_since_checkpoint >= std::max<u64>(opts.checkpoint_interval, 1) ||
                         next_to_fold == num_chunks)) {
                        const u64 last =
                            std::min(n_to, start + static_cast<u64>(next_to_fold) * chunk - 1);
                        write_checkpoint(opts.checkpoint_path,
                                         {last, prefix.max_gap, prefix.checksum, prefix.argmax_n,
                                          prefix.violations});
                        folded_since_checkpoint = 0;
                        if (opts.progress)
                            std::cerr << "scan: checkpoint at n=" << last << "\n";
                    }
                }
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    const auto t1 = std::chrono::steady_clock::now();
    ScanReport report;
    report.n_from = n_from;
    report.n_to = n_to;
    report.max_gap = prefix.max_gap;
    report.argmax_n = prefix.argmax_n;
    report.violations = std::move(prefix.violations);
    report.checksum = prefix.checksum;
    report.verified_samples = prefix.verified;
    report.resumed_from = resumed_from;
    report.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.rows_per_second =
        report.elapsed_seconds > 0
            ? static_cast<double>(n_to - n_from + 1) / report.elapsed_seconds
            : 0.0;
    return report;
}

ScanReport scan_conjecture_reference(u64 n_from, u64 n_to, const ExactRatio& bound) {
    if (n_from < 3 || n_from > n_to) throw std::invalid_argument("scan: bad range");
    const auto t0 = std::chrono::steady_clock::now();
    ScanReport report;
    report.n_from = n_from;
    report.n_to = n_to;
    bool have_max = false;
    for (u64 n = n_from; n <= n_to; ++n) {
        const ExactRatio g = gap_exact(n);
        report.checksum ^= checksum_contribution(n, low64(numerator(g)));
        if (g > bound) report.violations.push_back({n, g});
        if (!have_max || g > report.max_gap) {
            report.max_gap = g;
            report.argmax_n = n;
            have_max = true;
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.rows_per_second =
        report.elapsed_seconds > 0
            ? static_cast<double>(n_to - n_from + 1) / report.elapsed_seconds
            : 0.0;
    return report;
}

namespace {

std::string checksum_hex(u64 checksum) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum));
    return buf;
}

u64 parse_hex_u64(const std::string& s) {
    return std::stoull(s, nullptr, 16);
}

json ratio_json(const ExactRatio& r) {
    return json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

ExactRatio ratio_from_json(const json& j) {
    return make_ratio(BigInt(j.at("num").get<std::string>()),
                      BigInt(j.at("den").get<std::string>()));
}

}  // namespace

std::string scan_report_to_json(const ScanReport& r) {
    json j;
    j["n_from"] = r.n_from;
    j["n_to"] = r.n_to;
    j["max_gap"] = ratio_json(r.max_gap);
    j["argmax_n"] = r.argmax_n;
    json viols = json::array();
    for (const auto& v : r.violations) viols.push_back({{"n", v.n}, {"gap", ratio_json(v.gap)}});
    j["violations"] = viols;
    j["checksum"] = checksum_hex(r.checksum);
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["rows_per_second"] = r.rows_per_second;
    j["verified_samples"] = r.verified_samples;
    j["resumed_from"] = r.resumed_from;
    return j.dump(2);
}

ScanReport scan_report_from_json(const std::string& text) {
    const json j = json::parse(text);
    ScanReport r;
    r.n_from = j.at("n_from").get<u64>();
    r.n_to = j.at("n_to").get<u64>();
    r.max_gap = ratio_from_json(j.at("max_gap"));
    r.argmax_n = j.at("argmax_n").get<u64>();
    for (const auto& v : j.at("violations"))
        r.violations.push_back({v.at("n").get<u64>(), ratio_from_json(v.at("gap"))});
    r.checksum = parse_hex_u64(j.at("checksum").get<std::string>());
    r.elapsed_seconds = j.value("elapsed_seconds", 0.0);
    r.rows_per_second = j.value("rows_per_second", 0.0);
    r.verified_samples = j.value("verified_samples", u64{0});
    r.resumed_from = j.value("resumed_from", u64{0});
    return r;
}

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
        out << "n=" << cp.last_n << "\n";
        out << "max_gap=" << ratio_to_string(cp.max_gap) << "\n";
        out << "checksum=" << checksum_hex(cp.checksum) << "\n";
        out << "argmax_n=" << cp.argmax_n << "\n";
        for (const auto& v : cp.violations)
            out << "violation=" << v.n << ":" << ratio_to_string(v.gap) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("checkpoint: cannot replace " + path);
}

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint cp;
    bool have_n = false, have_gap = false, have_sum = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("checkpoint: bad line '" + line + "'");
        const std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        if (key == "n") {
            cp.last_n = std::stoull(value);
            have_n = true;
        } else if (key == "max_gap") {
            cp.max_gap = parse_ratio(value);
            have_gap = true;
        } else if (key == "checksum") {
            cp.checksum = parse_hex_u64(value);
            have_sum = true;
        } else if (key == "argmax_n") {
            cp.argmax_n = std::stoull(value);
        } else if (key == "violation") {
            const auto colon = value.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error("checkpoint: bad violation line");
            cp.violations.push_back(
                {std::stoull(value.substr(0, colon)), parse_ratio(value.substr(colon + 1))});
        } else {
            throw std::runtime_error("checkpoint: unknown key '" + key + "'");
        }
    }
    if (!have_n || !have_gap || !have_sum)
        throw std::runtime_error("checkpoint: incomplete file " + path);
    if (cp.argmax_n == 0) cp.argmax_n = cp.last_n;  // legacy three-line file
    return cp;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<u64>& ns) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(ns.size());
    for (u64 n : ns) {
        const auto row = closed_form_row(n);
        rows.push_back({n, decimal_string(row.ratio_L), decimal_string(row.ratio_Fp),
                        row.deviation, decimal_string(row.gap)});
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void convergence_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out) {
    out << "n,ratio_L,ratio_Fp,deviation,gap\r\n";
    for (const auto& r : rows)
        out << r.n << ',' << csv_field(r.ratio_l) << ',' << csv_field(r.ratio_fp) << ','
            << csv_field(r.deviation) << ',' << csv_field(r.gap) << "\r\n";
}

}  // namespace jiso

// High-throughput exact verification of the gap conjecture
// |ratio_L - ratio_Fp| <= 3/2 over n ranges, and the asymptotic
// convergence table.
//
// The scan is an OpenMP loop over fixed-size chunks of n. The per-n kernel
// runs on checked 256-bit integers; any overflow promotes that single n to
// the BigInt reference path (gap_exact), so the verdict is exact for every
// n. A serial all-BigInt reference scan is kept alongside for tests and
// the benchmark. Reports merge in chunk order, and the checksum folds
// per-n values commutatively, so results are identical for any worker
// count or chunk size.
#pragma once

#include "jiso/closed_form.hpp"
#include "jiso/ratio.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jiso {

// |ratio_L(n) - ratio_Fp(n)| as a reduced fraction, fast path. Falls back
// to gap_exact(n) on 256-bit overflow.
ExactRatio gap_fast(u64 n);
// BigInt reference: closed_form::conjecture_gap.
ExactRatio gap_exact(u64 n);

struct Violation {
    u64 n = 0;
    ExactRatio gap;
    bool operator==(const Violation&) const = default;
};

struct ScanOptions {
    ExactRatio bound = ExactRatio(3, 2);
    int workers = 0;          // 0 = all available
    u64 chunk_size = 1u << 20;
    std::string checkpoint_path;    // empty = no checkpointing
    u64 checkpoint_interval = 1;    // chunks between checkpoint writes
    u64 slow_path_samples = 1000;   // per-run re-verification with gap_exact
    bool progress = false;          // progress lines on stderr
};

struct ScanReport {
    u64 n_from = 0, n_to = 0;
    ExactRatio max_gap;
    u64 argmax_n = 0;  // first n attaining max_gap
    std::vector<Violation> violations;
    u64 checksum = 0;  // commutative fold of reduced gap numerators
    double elapsed_seconds = 0.0;
    double rows_per_second = 0.0;
    u64 verified_samples = 0;  // n re-checked on the BigInt path this run
    u64 resumed_from = 0;      // 0 when the scan started fresh

    bool operator==(const ScanReport& o) const;  // ignores timing fields
};

// Scans [n_from, n_to]; resumes from opts.checkpoint_path when the file
// exists and matches the range. 3 <= n_from <= n_to required.
ScanReport scan_conjecture(u64 n_from, u64 n_to, const ScanOptions& opts = {});

// Single-threaded all-BigInt reference scan (no checkpointing). Produces a
// report identical to scan_conjecture on the same range.
ScanReport scan_conjecture_reference(u64 n_from, u64 n_to,
                                     const ExactRatio& bound = ExactRatio(3, 2));

std::string scan_report_to_json(const ScanReport& r);
ScanReport scan_report_from_json(const std::string& text);

// Checkpoint file: lines "n=", "max_gap=num/den", "checksum=hex", plus
// "argmax_n=" and one "violation=n:num/den" line per violation (the last
// two carry state the three-line core cannot reproduce after a resume).
struct Checkpoint {
    u64 last_n = 0;
    ExactRatio max_gap;
    u64 checksum = 0;
    u64 argmax_n = 0;
    std::vector<Violation> violations;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp);
std::optional<Checkpoint> read_checkpoint(const std::string& path);

struct ConvergenceRow {
    u64 n = 0;
    std::string ratio_l;    // 12-significant-digit decimals
    std::string ratio_fp;
    std::string deviation;
    std::string gap;
};

std::vector<ConvergenceRow> convergence_table(const std::vector<u64>& ns);

// CSV per RFC 4180: header n,ratio_L,ratio_Fp,deviation,gap.
void convergence_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out);

}  // namespace jiso

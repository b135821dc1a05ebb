#include "jiso/scan.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jiso;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path((std::filesystem::temp_directory_path() / name).string()) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

json strip_timing(const std::string& text) {
    json j = json::parse(text);
    j.erase("elapsed_seconds");
    j.erase("rows_per_second");
    return j;
}

}  // namespace

TEST_CASE("fast kernel and BigInt path agree") {
    for (u64 n = 3; n <= 5000; ++n) CHECK(gap_fast(n) == gap_exact(n));
    for (u64 n : {999983ULL, 1000003ULL, 999999937ULL, 1000000007ULL, 88888888888ULL,
                  1000000000000ULL, 999999999999999ULL}) {
        CHECK(gap_fast(n) == gap_exact(n));
    }
    // both sides of the fast-path cutoff at n = 10^15, frozen from an
    // independent big-integer computation
    CHECK(gap_fast(1000000000000000ULL) ==
          make_ratio(BigInt("101181281779972970950016827860582905888099"),
                     BigInt("76483278726995712047187222825000000000000")));
    CHECK(gap_fast(1000000000000001ULL) ==
          make_ratio(BigInt("80961226872097390323938024306026865580997"),
                     BigInt("83747389186938270560576000125000000000000")));
    CHECK_THROWS_AS(gap_fast(2), std::domain_error);
}

TEST_CASE("point scans match the closed forms") {
    auto r = scan_conjecture(4, 4);
    CHECK(r.max_gap == ExactRatio(0, 1));
    CHECK(r.argmax_n == 4);
    CHECK(r.violations.empty());

    r = scan_conjecture(5, 5);
    CHECK(r.max_gap == ExactRatio(38, 35));
    CHECK(r.argmax_n == 5);
}

TEST_CASE("desk-range scan finds no violations and the known maximum") {
    const auto r = scan_conjecture(3, 10000);
    CHECK(r.violations.empty());
    // largest gap in this range, first attained at n = 18
    CHECK(r.max_gap == ExactRatio(1597, 1102));
    CHECK(r.argmax_n == 18);
    CHECK(r.verified_samples > 0);
}

TEST_CASE("scan rejects bad ranges and bounds") {
    CHECK_THROWS_AS(scan_conjecture(2, 10), std::invalid_argument);
    CHECK_THROWS_AS(scan_conjecture(10, 3), std::invalid_argument);
    ScanOptions opts;
    opts.bound = ExactRatio(-1, 2);
    CHECK_THROWS_AS(scan_conjecture(3, 10, opts), std::invalid_argument);
}

TEST_CASE("violations appear exactly when the gap exceeds the bound") {
    ScanOptions opts;
    opts.bound = ExactRatio(1, 1);
    const auto r = scan_conjecture(3, 100, opts);
    CHECK_FALSE(r.violations.empty());
    CHECK(r.violations.front().n == 5);  // gap(5) = 38/35 > 1
    CHECK(r.violations.front().gap == ExactRatio(38, 35));
    for (const auto& v : r.violations) CHECK(v.gap > opts.bound);

    // the bound is inclusive: gap == bound is not a violation
    ScanOptions at_max;
    at_max.bound = ExactRatio(1597, 1102);
    CHECK(scan_conjecture(3, 100, at_max).violations.empty());
    ScanOptions below_max;
    below_max.bound = ExactRatio(1596, 1102);
    const auto rb = scan_conjecture(3, 100, below_max);
    REQUIRE(rb.violations.size() == 1);
    CHECK(rb.violations.front().n == 18);
}

TEST_CASE("reports are deterministic across workers and chunking") {
    ScanOptions one;
    one.workers = 1;
    ScanOptions many;
    many.workers = 4;
    many.chunk_size = 1777;
    const auto r1 = scan_conjecture(3, 100000, one);
    const auto r2 = scan_conjecture(3, 100000, many);
    CHECK(r1 == r2);
    CHECK(r1.checksum == r2.checksum);
    CHECK(strip_timing(scan_report_to_json(r1)) == strip_timing(scan_report_to_json(r2)));
}

TEST_CASE("kernel scan equals the serial BigInt reference scan") {
    const auto ref = scan_conjecture_reference(3, 20000);
    ScanOptions opts;
    opts.workers = 2;
    const auto fast = scan_conjecture(3, 20000, opts);
    CHECK(ref == fast);
}

TEST_CASE("scan report JSON round-trips") {
    ScanOptions opts;
    opts.bound = ExactRatio(1, 1);
    const auto r = scan_conjecture(3, 500, opts);
    const auto text = scan_report_to_json(r);
    const auto back = scan_report_from_json(text);
    CHECK(back == r);
    CHECK(back.violations == r.violations);
    CHECK(back.elapsed_seconds == r.elapsed_seconds);
    CHECK(back.rows_per_second == r.rows_per_second);
    CHECK(back.verified_samples == r.verified_samples);

    const json j = json::parse(text);
    CHECK(j.at("max_gap").at("num").is_string());
    CHECK(j.at("max_gap").at("den").is_string());
    CHECK(j.at("checksum").is_string());
    CHECK(j.at("checksum").get<std::string>().size() == 16);
}

TEST_CASE("checkpoints round-trip and carry violations") {
    TempFile tmp("jiso_test_checkpoint.txt");
    Checkpoint cp{12345, ExactRatio(1597, 1102), 0xdeadbeefcafe1234ULL, 18,
                  {{5, ExactRatio(38, 35)}}};
    write_checkpoint(tmp.path, cp);

    std::ifstream in(tmp.path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n=12345");
    std::getline(in, line);
    CHECK(line == "max_gap=1597/1102");
    std::getline(in, line);
    CHECK(line == "checksum=deadbeefcafe1234");

    const auto back = read_checkpoint(tmp.path);
    REQUIRE(back.has_value());
    CHECK(back->last_n == 12345);
    CHECK(back->max_gap == ExactRatio(1597, 1102));
    CHECK(back->checksum == 0xdeadbeefcafe1234ULL);
    CHECK(back->argmax_n == 18);
    REQUIRE(back->violations.size() == 1);
    CHECK(back->violations.front().n == 5);

    CHECK_FALSE(read_checkpoint("/nonexistent/path/checkpoint").has_value());
}

TEST_CASE("a legacy three-line checkpoint still parses") {
    TempFile tmp("jiso_test_checkpoint3.txt");
    {
        std::ofstream out(tmp.path);
        out << "n=777\nmax_gap=3/2\nchecksum=00000000000000ff\n";
    }
    const auto cp = read_checkpoint(tmp.path);
    REQUIRE(cp.has_value());
    CHECK(cp->last_n == 777);
    CHECK(cp->argmax_n == 777);  // best available fallback
    CHECK(cp->checksum == 0xffULL);
}

TEST_CASE("an interrupted scan resumes into the same final report") {
    TempFile tmp("jiso_test_resume.txt");
    ScanOptions opts;
    opts.checkpoint_path = tmp.path;
    opts.chunk_size = 7000;
    opts.workers = 2;

    // simulate an interruption after a prefix of the range
    const auto partial = scan_conjecture(3, 30000, opts);
    CHECK(partial.resumed_from == 0);
    {
        const auto cp = read_checkpoint(tmp.path);
        REQUIRE(cp.has_value());
        CHECK(cp->last_n == 30000);
    }

    const auto resumed = scan_conjecture(3, 60000, opts);
    CHECK(resumed.resumed_from == 30000);
    const auto fresh = scan_conjecture(3, 60000);
    CHECK(resumed == fresh);

    // a checkpoint at the end of the range short-circuits the whole scan
    const auto done = scan_conjecture(3, 60000, opts);
    CHECK(done.resumed_from == 60000);
    CHECK(done == fresh);
}

TEST_CASE("convergence table and CSV emission") {
    const auto rows = convergence_table({100, 1000});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 100);
    CHECK(rows[0].ratio_l == "58.5212121212");
    CHECK(rows[0].ratio_fp == "57.1597633136");
    CHECK(rows[0].deviation == "0.999019580554");
    CHECK(rows[1].deviation == "1.00014434162");

    std::ostringstream out;
    convergence_csv(rows, out);
    const std::string text = out.str();
    CHECK(text.find("n,ratio_L,ratio_Fp,deviation,gap\r\n") == 0);
    CHECK(text.find("100,58.5212121212,57.1597633136,0.999019580554,") != std::string::npos);
}

#include "jiso/cli.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

using nlohmann::json;

namespace {

struct CliResult {
    int code = 0;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = jiso::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("closed-form subcommand emits exact strings") {
    auto r = run({"closed-form", "--n", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("ratio_L") == "14/5");
    CHECK(j.at("ratio_Fp") == "12/7");
    CHECK(j.at("gap") == "38/35");
    CHECK(j.at("n_star") == "5");
    CHECK(j.at("p") == 2);

    // text and json present identical numeric content
    auto t = run({"closed-form", "--n", "5"});
    REQUIRE(t.code == 0);
    CHECK(t.out.find("ratio_L = 14/5") != std::string::npos);
    CHECK(t.out.find("ratio_Fp = 12/7") != std::string::npos);
    CHECK(t.out.find("gap = 38/35") != std::string::npos);
    CHECK(t.out.find("deviation = " + j.at("deviation").get<std::string>()) != std::string::npos);
}

TEST_CASE("exact subcommand reports iso and witness") {
    auto r = run({"exact", "--n", "4", "--k", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("iso(J(4,2)) = 2/1") != std::string::npos);
    CHECK(r.out.find("{1,2} {1,3} {1,4}") != std::string::npos);

    auto j = run({"exact", "--n", "5", "--format", "json"});
    REQUIRE(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed.at("iso") == "14/5");
    CHECK(parsed.at("witness").size() == 5);
}

TEST_CASE("bcurve subcommand") {
    auto r = run({"bcurve", "--n", "5", "--k", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.at("values").size() == 5);
    CHECK(j.at("values")[3].at("m") == 4);
    CHECK(j.at("values")[3].at("b") == 12);
}

TEST_CASE("verification subcommands succeed on clean inputs") {
    CHECK(run({"verify-ak", "--n", "5"}).code == 0);
    CHECK(run({"verify-ak", "--n", "5", "--format", "json"}).code == 0);
    auto r = run({"verify-lemmas", "--max-n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no failures") != std::string::npos);
}

TEST_CASE("candidates subcommand") {
    auto r = run({"candidates", "--n", "5", "--set", "Fp", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("size") == 7);
    CHECK(j.at("boundary") == "12");
    CHECK(j.at("ratio") == "12/7");
    CHECK(j.at("members").size() == 7);

    auto l = run({"candidates", "--n", "5", "--set", "L", "--m", "5"});
    REQUIRE(l.code == 0);
    CHECK(l.out.find("{2,4}") != std::string::npos);

    CHECK(run({"candidates", "--n", "5", "--set", "F"}).code == 2);  // missing --m
}

TEST_CASE("scan subcommand round-trips JSON and honors the bound") {
    auto r = run({"scan", "--from", "3", "--to", "2000", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("n_from") == 3);
    CHECK(j.at("n_to") == 2000);
    CHECK(j.at("violations").empty());
    CHECK(j.at("max_gap").at("num") == "1597");
    CHECK(j.at("max_gap").at("den") == "1102");
    CHECK(j.at("argmax_n") == 18);

    auto v = run({"scan", "--from", "3", "--to", "100", "--bound", "1/1"});
    CHECK(v.code == 1);  // gaps above 1 exist

    auto bad = run({"scan", "--from", "10", "--to", "3"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("scan honors the checkpoint interval environment variable") {
    const auto path = (std::filesystem::temp_directory_path() / "jiso_cli_ckpt.txt").string();
    std::remove(path.c_str());
    setenv("JOHNSON_ISO_CHECKPOINT_INTERVAL", "2", 1);
    auto r = run({"scan", "--from", "3", "--to", "5000", "--chunk-size", "1000",
                  "--checkpoint", path});
    unsetenv("JOHNSON_ISO_CHECKPOINT_INTERVAL");
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(path));
    std::remove(path.c_str());

    setenv("JOHNSON_ISO_CHECKPOINT_INTERVAL", "0", 1);
    auto bad = run({"scan", "--from", "3", "--to", "100"});
    unsetenv("JOHNSON_ISO_CHECKPOINT_INTERVAL");
    CHECK(bad.code == 2);
}

TEST_CASE("converge subcommand emits CSV by default") {
    auto r = run({"converge", "--ns", "100,1000"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("n,ratio_L,ratio_Fp,deviation,gap") == 0);
    CHECK(r.out.find("100,58.5212121212,") != std::string::npos);

    auto j = run({"converge", "--ns", "100", "--format", "json"});
    REQUIRE(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed[0].at("deviation") == "0.999019580554");
}

TEST_CASE("usage errors exit with 2 and a diagnostic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"closed-form"},
             {"closed-form", "--n", "5", "--format", "yaml"},
             {"exact", "--n", "4", "--bogus"},
         }) {
        auto r = run(args);
        CHECK(r.code == 2);
        CHECK_FALSE(r.err.empty());
    }
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"closed-form", "--n", "2"}).code == 2);   // n < 3 is a bad value
    CHECK(run({"exact", "--n", "8", "--k", "2"}).code == 2);  // beyond the exhaustive cap
}

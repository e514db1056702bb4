#include <doctest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cache.hpp"
#include "cli.hpp"
#include "mirrorgw/localization.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
    json parsed() const { return json::parse(out); }
};

Result run_cli(std::vector<std::string> args) {
    ::setenv("MIRROR_GW_CACHE", "", 1);
    std::ostringstream out, err;
    int code = mgw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = fs::temp_directory_path() / ("mirrorgw-test-" + std::to_string(stamp));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    std::string str() const { return path_.string(); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table prints the degree-7 counts") {
    Result r = run_cli({"table", "--d-max", "3"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["n"] == 7);
    CHECK(j["integral"] == true);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["d"] == 1);
    CHECK(j["rows"][0]["bps"] == "1707797/1");
    CHECK(j["rows"][1]["bps"] == "510787745643/1");
    CHECK(j["rows"][2]["bps"] == "222548537108926490/1");
    CHECK(j["insertions"][0]["b"] == 2);
}

TEST_CASE("bps requires n and a Calabi-Yau degree") {
    CHECK(run_cli({"bps", "--d-max", "2"}).code == 2);
    CHECK(run_cli({"bps", "--n", "5", "--a", "4", "--d-max", "2"}).code == 2);
    Result r = run_cli({"bps", "--n", "5", "--d-max", "2", "--insertion", "0,1", "--insertion", "0,1"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["rows"][0]["bps"] == "2875/1");
}

TEST_CASE("invariants report dimension zeros and exact values") {
    Result r = run_cli({"invariants", "--n", "7", "--d-max", "1", "--insertion", "0,1", "--insertion", "0,2"});
    REQUIRE(r.code == 0);
    json row = r.parsed()[0];
    CHECK(row["value"] == "0/1");
    CHECK(row["reason"] == "dimension");

    r = run_cli({"invariants", "--n", "7", "--d-max", "1", "--insertion", "0,2", "--insertion", "0,2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1707797/1") != std::string::npos);
}

TEST_CASE("invariants of a cubic surface match the localization oracle") {
    Result r = run_cli({"invariants", "--n", "4", "--a", "3", "--d-max", "1"});
    REQUIRE(r.code == 0);
    mgw::AlphaSpec s = mgw::AlphaSpec::default_for(4, 3, 1);
    int rows = 0;
    for (const auto& row : r.parsed()) {
        if (row.contains("reason")) continue;
        mgw::Rational want = mgw::oracle_two_point(s, row["d"], row["a1"], row["b1"], row["a2"], row["b2"]);
        CHECK(mgw::Rational::parse(row["value"].get<std::string>()) == want);
        ++rows;
    }
    CHECK(rows > 0);
}

TEST_CASE("csv output") {
    Result r = run_cli({"table", "--d-max", "2", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,a,d,a1,b1,a2,b2,value\r\n", 0) == 0);
    CHECK(r.out.find("7,7,1,0,2,0,2,1707797/1\r\n") != std::string::npos);
}

TEST_CASE("verify") {
    SUBCASE("psi suite passes quickly") {
        auto t0 = std::chrono::steady_clock::now();
        Result r = run_cli({"verify", "--suite", "psi"});
        CHECK(r.code == 0);
        CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(5));
        json j = r.parsed();
        REQUIRE(j.size() == 1);
        CHECK(j[0]["suite"] == "psi");
        CHECK(j[0]["status"] == "PASS");
    }
    SUBCASE("resonant weights are rejected") {
        Result r = run_cli({"verify", "--n", "3", "--alpha", "1,2,3", "--d-max", "3"});
        CHECK(r.code == 2);
        CHECK(r.err.find("rejected weights") != std::string::npos);
    }
    SUBCASE("a mutant fails at the first fixed point in degree one") {
        Result r = run_cli({"verify", "--suite", "recursion", "--mutate"});
        REQUIRE(r.code == 1);
        json f = r.parsed()[0];
        CHECK(f["status"] == "FAIL");
        CHECK(f["failures"][0]["i"] == 1);
        CHECK(f["failures"][0]["d"] == 1);
        CHECK(f["failures"][0]["detail"].get<std::string>().find("pole at h = 8") != std::string::npos);
    }
    SUBCASE("unknown suite") {
        CHECK(run_cli({"verify", "--suite", "nonsense"}).code == 2);
    }
}

TEST_CASE("cache round trip and tampering") {
    TempDir dir;
    std::vector<std::string> args{"table", "--d-max", "3", "--cache-dir", dir.str()};
    Result cold = run_cli(args);
    REQUIRE(cold.code == 0);
    Result warm = run_cli(args);
    CHECK(warm.out == cold.out);

    Result stat = run_cli({"cache", "stat", "--cache-dir", dir.str()});
    REQUIRE(stat.code == 0);
    CHECK(stat.parsed()["entries"].get<int>() >= 1);
    CHECK(stat.parsed()["invalid"] == 0);

    SUBCASE("a corrupted digest is recomputed") {
        for (const auto& e : fs::directory_iterator(dir.path())) {
            json j = json::parse(std::ifstream(e.path()));
            j["digest"] = "0000000000000000";
            std::ofstream(e.path()) << j.dump();
        }
        CHECK(run_cli({"cache", "stat", "--cache-dir", dir.str()}).parsed()["invalid"].get<int>() >= 1);
        CHECK(run_cli(args).out == cold.out);
    }
    SUBCASE("a stale format version is ignored") {
        for (const auto& e : fs::directory_iterator(dir.path())) {
            json j = json::parse(std::ifstream(e.path()));
            j["format_version"] = 0;
            j["payload"] = json::array();
            std::ofstream(e.path()) << j.dump();
        }
        CHECK(run_cli(args).out == cold.out);
    }
    SUBCASE("clear removes every entry") {
        Result cleared = run_cli({"cache", "clear", "--cache-dir", dir.str()});
        CHECK(cleared.code == 0);
        CHECK(cleared.parsed()["removed"].get<int>() >= 1);
        CHECK(run_cli({"cache", "stat", "--cache-dir", dir.str()}).parsed()["entries"] == 0);
    }
    CHECK(run_cli({"cache", "stat"}).code == 2);
}

TEST_CASE("digest helper") {
    CHECK(mgw::cli::fnv1a("") == 14695981039346656037ull);
    CHECK(mgw::cli::fnv1a_hex("a") == mgw::cli::fnv1a_hex("a"));
    CHECK(mgw::cli::fnv1a_hex("a") != mgw::cli::fnv1a_hex("b"));
}

TEST_CASE("output is deterministic across runs and thread counts") {
    Result a = run_cli({"sweep", "--n-min", "5", "--n-max", "6", "--d-max", "4", "--threads", "1"});
    Result b = run_cli({"sweep", "--n-min", "5", "--n-max", "6", "--d-max", "4", "--threads", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json j = a.parsed();
    CHECK(j.size() == 2);  // one pair each for n = 5 and n = 6
    for (const auto& t : j) CHECK(t["integral"] == true);
    CHECK(run_cli({"invariants", "--n", "5", "--d-max", "2"}).out ==
          run_cli({"invariants", "--n", "5", "--d-max", "2"}).out);
}

TEST_CASE("bad arguments are configuration errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"table", "--bogus"}).code == 2);
    CHECK(run_cli({"table", "--format", "xml"}).code == 2);
    CHECK(run_cli({"table", "--threads", "0"}).code == 2);
    CHECK(run_cli({"invariants", "--d-max", "2"}).code == 2);
    CHECK(run_cli({"invariants", "--n", "5", "--d-max", "2", "--insertion", "x"}).code == 2);
    CHECK(run_cli({"sweep", "--d-max", "2"}).code == 2);
    CHECK(run_cli({"table", "--help"}).code == 0);
}

}

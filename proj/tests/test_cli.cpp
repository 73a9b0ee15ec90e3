#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "capelli/json_io.hpp"
#include "capelli/verify.hpp"
#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run invoke(std::vector<const char*> args) {
    args.insert(args.begin(), "capelli");
    std::ostringstream out, err;
    int code = capelli::cli::run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fusion output matches the symmetrizer route") {
    Run fusion = invoke({"fusion", "--shape", "2,1"});
    Run symm = invoke({"symmetrizer", "--shape", "2,1"});
    REQUIRE(fusion.code == 0);
    REQUIRE(symm.code == 0);
    auto jf = capelli::Json::parse(fusion.out);
    auto js = capelli::Json::parse(symm.out);
    CHECK(jf["terms"] == js["Phi"]);
}

TEST_CASE("pole order of the single-box pair") {
    Run r = invoke({"phi-pair", "--lambda", "1", "--mu", "1", "--pole-order"});
    REQUIRE(r.code == 0);
    auto j = capelli::Json::parse(r.out);
    CHECK(j["pole_order"] == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(invoke({"no-such-command"}).code == 2);
    CHECK(invoke({"fusion"}).code == 2);                      // missing --shape
    CHECK(invoke({"fusion", "--shape", "1,2"}).code == 2);    // not weakly decreasing
    CHECK(invoke({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("verification subcommand reports success") {
    Run r = invoke({"verify", "--suite", "fusion", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output is byte-stable across runs") {
    Run a = invoke({"elambda", "--shape", "2", "--N", "2", "--z-poly"});
    Run b = invoke({"elambda", "--shape", "2", "--N", "2", "--z-poly"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    Run c = invoke({"capelli", "--shape", "1,1", "--N", "2", "--M", "2", "--formula", "1.1"});
    Run d = invoke({"capelli", "--shape", "1,1", "--N", "2", "--M", "2", "--formula", "1.3"});
    REQUIRE(c.code == 0);
    // The classical identity: both formulas print the same operator.
    CHECK(c.out.substr(c.out.find("terms")) == d.out.substr(d.out.find("terms")));
}

TEST_CASE("help exits cleanly") {
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("worker pool size resolution") {
    CHECK(capelli::verify::resolve_jobs(5) == 5);
    setenv("CAPELLI_JOBS", "3", 1);
    CHECK(capelli::verify::resolve_jobs(0) == 3);
    unsetenv("CAPELLI_JOBS");
    CHECK(capelli::verify::resolve_jobs(0) >= 1);
}

TEST_CASE("text format is readable") {
    Run r = invoke({"symmetrizer", "--shape", "2", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("Phi =") != std::string::npos);
    CHECK(r.out.find("1 * [1,2]") != std::string::npos);
}

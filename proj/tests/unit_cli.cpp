#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "puiseux/cli.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/serialize.hpp"

using namespace puiseux;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::vector<const char*> argv{"puiseux"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("polygon command text output") {
    auto r = run({"polygon", "y^2 - x^3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(q=2, m=3, l=6)") != std::string::npos);
}

TEST_CASE("polygon svg output") {
    std::string path = "/tmp/puiseux_test_polygon.svg";
    auto r = run({"polygon", "y^2 - x^3", "--svg", path});
    CHECK(r.code == 0);
    std::ifstream is(path);
    REQUIRE(is.good());
    std::stringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str().find("</svg>") != std::string::npos);
}

TEST_CASE("puiseux command json matches the documented schema") {
    auto r = run({"puiseux", "y^2 - x^3", "--field", "5", "--trunc", "8", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    REQUIRE(j.contains("center"));
    REQUIRE(j.contains("expansions"));
    REQUIRE(j["expansions"].size() == 1);
    const auto& e = j["expansions"][0];
    // canonical field order: e, f, field, lambda, terms, trunc
    std::vector<std::string> keys;
    for (auto it = e.begin(); it != e.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"e", "f", "field", "lambda", "terms", "trunc"});
    CHECK(e["e"] == 2);
    CHECK(e["f"] == 1);
    CHECK(e["field"]["p"] == "5");
    CHECK(e["terms"][0][0] == 3);
    CHECK(e["trunc"] == 8);
}

TEST_CASE("genus command") {
    auto r = run({"genus", "y^2 - x^3 + x", "--strategy", "lv", "--seed", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("genus = 1") != std::string::npos);
    auto rj = run({"genus", "y^2 - x^3", "--strategy", "mc", "--seed", "2", "--format", "json"});
    REQUIRE(rj.code == 0);
    auto j = Json::parse(rj.out);
    CHECK(j["genus"] == 0);
    CHECK(j["prime"]["status"] == "GoodScreened");
    CHECK(j.contains("contributions"));
    CHECK(j.contains("checks"));
}

TEST_CASE("goodprime command") {
    auto r = run({"goodprime", "y^2 - x^3", "--strategy", "det", "--lambda", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("p = 11 [GoodVerified]") != std::string::npos);
}

TEST_CASE("tree command over Q and over a named extension field") {
    auto r = run({"tree", "y^2 - x^2 - x^3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("profile {(2,1)}") != std::string::npos);
    auto r4 = run({"tree", "y^2 - x^2 - x^3", "--field", "7,2,1:0:1", "--format", "json"});
    REQUIRE(r4.code == 0);
    auto j = Json::parse(r4.out);
    CHECK(j["edges"][0]["profile"][0][0] == 2);
}

TEST_CASE("exit codes: input errors give 1") {
    CHECK(run({"polygon", "y +"}).code == 1);
    CHECK(run({"puiseux", "y^2 - 2*x*y + x^2", "--field", "7"}).code == 1);  // not squarefree
    CHECK(run({"puiseux", "y^2 - x^3", "--field", "4"}).code == 1);          // 4 is not prime
    CHECK(run({"puiseux", "y^2 - x^3", "--field", "2"}).code == 1);          // small char
    CHECK(run({"nosuchcommand"}).code == 1);
    auto r = run({"polygon", "y +"});
    CHECK(!r.err.empty());
    CHECK(r.err.find('\n') == r.err.size() - 1);  // one-line diagnostic
}

TEST_CASE("round trip: printed polynomials reparse to the same value") {
    Rng rng(9);
    QQ q0;
    for (int i = 0; i < 40; ++i) {
        std::vector<UniPoly<QQ>> cy;
        for (long j = 0; j <= 3; ++j) {
            std::vector<Rational> col;
            for (long t = 0; t <= 3; ++t) {
                long num = static_cast<long>(rng.below_u64(19)) - 9;
                long den = 1 + static_cast<long>(rng.below_u64(4));
                col.emplace_back(Integer(num), Integer(den));
            }
            cy.emplace_back(q0, std::move(col));
        }
        BiPoly<QQ> f(q0, std::move(cy));
        CHECK(parse_bipoly(bipoly_str(f)) == f);
    }
}

TEST_CASE("bench determinism of non-timing fields") {
    auto a = run({"bench", "--family", "dense", "--sizes", "3,4", "--seed", "11", "--format",
                  "json"});
    auto b = run({"bench", "--family", "dense", "--sizes", "3,4", "--seed", "11", "--format",
                  "json"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    auto ja = Json::parse(a.out), jb = Json::parse(b.out);
    REQUIRE(ja["records"].size() == jb["records"].size());
    for (std::size_t i = 0; i < ja["records"].size(); ++i) {
        for (const char* key : {"curve", "d", "p", "delta", "peak_bits_modular",
                                "peak_bits_char0"})
            CHECK(ja["records"][i][key] == jb["records"][i][key]);
    }
}

TEST_CASE("bench single size has no slope") {
    auto r = run({"bench", "--family", "cusp", "--sizes", "4", "--seed", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["slope"].is_null());
}

TEST_CASE("seed falls back to PUISEUX_SEED") {
    setenv("PUISEUX_SEED", "12345", 1);
    auto a = run({"goodprime", "y^2 - x^3", "--strategy", "mc"});
    auto b = run({"goodprime", "y^2 - x^3", "--strategy", "mc"});
    auto c = run({"goodprime", "y^2 - x^3", "--strategy", "mc", "--seed", "999"});
    unsetenv("PUISEUX_SEED");
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

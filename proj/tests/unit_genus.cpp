#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "puiseux/genus.hpp"
#include "puiseux/parse.hpp"

using namespace puiseux;

namespace {

BiPoly<QQ> Q(const std::string& s) { return parse_bipoly(s); }

long genus_at(const std::string& s, long p, std::uint64_t seed = 1) {
    Rng rng(seed);
    return genus_mod_p(parse_bipoly_fq(s, fp_context(Integer(p))), rng).genus;
}

}  // namespace

TEST_CASE("textbook genus values mod p") {
    CHECK(genus_at("y^2 - x^3", 5) == 0);
    CHECK(genus_at("y^2 - x^3 + x", 7) == 1);
    CHECK(genus_at("y^2 - x^5 + 1", 11) == 2);
    // p = 7: x^5 - 1 factors as (x - 1) * (degree 4) over F_7, exercising an
    // extension-field center
    CHECK(genus_at("y^2 - x^5 + 1", 7) == 2);
}

TEST_CASE("genus over Q with chosen primes") {
    Rng rng(3);
    auto r1 = genus_over_q(Q("y^2 - x^3 + x"), PrimeStrategy::LasVegas, 16, rng);
    CHECK(r1.genus == 1);
    REQUIRE(r1.prime.has_value());
    CHECK(r1.prime->status == PrimeStatus::GoodVerified);

    auto r0 = genus_over_q(Q("y^2 - x^3"), PrimeStrategy::MonteCarlo, 16, rng);
    CHECK(r0.genus == 0);

    auto rg = genus_over_q(Q("y - x^9"), PrimeStrategy::LasVegas, 16, rng);
    CHECK(rg.genus == 0);
}

TEST_CASE("hyperelliptic oracle family: genus m for deg s in {2m+1, 2m+2}") {
    // classical hyperelliptic genus formula as the independent oracle
    Rng rng(4);
    struct Case {
        const char* s;
        long m;
    };
    const Case cases[] = {
        {"x", 0},                    // deg 1
        {"x^2 - 1", 0},              // deg 2
        {"x^3 - x", 1},              // deg 3
        {"x^4 + x + 1", 1},          // deg 4
        {"x^5 - 1", 2},              // deg 5
        {"x^6 + x + 1", 2},          // deg 6
        {"x^7 - x - 1", 3},          // deg 7
        {"x^8 + x + 3", 3},          // deg 8
        {"x^9 - x - 1", 4},          // deg 9
        {"x^10 + x + 3", 4},         // deg 10
    };
    for (const auto& c : cases) {
        auto s = Q(c.s);
        // oracle precondition: s squarefree
        REQUIRE(gcd_monic(s.cy[0], derivative(s.cy[0])).deg() == 0);
        auto f = Q("y^2") - s;
        auto rep = genus_over_q(f, PrimeStrategy::LasVegas, 20, rng);
        CHECK(rep.genus == c.m);
    }
}

TEST_CASE("prime independence across three verified primes") {
    Rng rng(5);
    for (const char* s : {"y^2 - x^3 + x", "y^2 - x^5 + 1", "y^3 - x^2*y + x^5"}) {
        std::set<std::string> primes;
        std::set<long> genera;
        std::uint64_t seed = 100;
        while (primes.size() < 3) {
            Rng r(seed++);
            auto rep = genus_over_q(Q(s), PrimeStrategy::LasVegas, 24, r);
            if (primes.insert(rep.prime->p.str()).second) genera.insert(rep.genus);
        }
        CHECK(genera.size() == 1);
    }
}

TEST_CASE("conservation recorded per center") {
    Rng rng(6);
    auto rep = genus_mod_p(parse_bipoly_fq("y^2 - x^3 + x", fp_context(Integer(11))), rng);
    REQUIRE(!rep.contributions.empty());
    for (const auto& c : rep.contributions) CHECK(c.conservation == 2);
    long total = 0;
    for (const auto& c : rep.contributions) total += c.multiplier * c.contribution;
    CHECK(total % 2 == 0);
}

TEST_CASE("guards") {
    Rng rng(7);
    CHECK_THROWS_AS(genus_mod_p(parse_bipoly_fq("y^2 - x^3", fp_context(Integer(2))), rng),
                    SmallCharacteristic);
    CHECK_THROWS_AS(genus_mod_p(parse_bipoly_fq("y^2 - 2*x*y + x^2", fp_context(Integer(7))), rng),
                    NotSquarefree);
}

TEST_CASE("singular affine models are handled through places") {
    // nodal cubic: geometric genus 0 (the node is two places)
    CHECK(genus_at("y^2 - x^2 - x^3", 7) == 0);
    // ramphoid-type quartic (y^2 - x^3)^2 - x^7
    Rng rng(8);
    auto rep = genus_over_q(Q("y^4 - 2*x^3*y^2 + x^6 - x^7"), PrimeStrategy::LasVegas, 20, rng);
    CHECK(rep.genus >= 0);
}

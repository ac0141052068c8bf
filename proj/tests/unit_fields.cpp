#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <gmpxx.h>

#include "puiseux/fq.hpp"
#include "puiseux/fq_factor.hpp"
#include "puiseux/integer.hpp"

using namespace puiseux;

namespace {

// Independent oracle: Lucas-Lehmer test for Mersenne numbers 2^p - 1.
bool lucas_lehmer(unsigned long p) {
    Integer m = Integer::two_pow(p) - Integer(1);
    Integer s(4);
    for (unsigned long i = 0; i + 2 < p; ++i) s = (s * s - Integer(2)).mod(m);
    return s.is_zero();
}

// Independent oracle: GMP's own primality machinery.
bool gmp_prime(const Integer& n) { return mpz_probab_prime_p(n.raw().get_mpz_t(), 30) != 0; }

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long n = lo; n < hi; ++n) {
        bool p = n >= 2;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) { p = false; break; }
        if (p) out.push_back(n);
    }
    return out;
}

}  // namespace

TEST_CASE("is_prime small cases") {
    CHECK_FALSE(is_prime(Integer(0)));
    CHECK_FALSE(is_prime(Integer(1)));
    CHECK(is_prime(Integer(2)));
    CHECK(is_prime(Integer(7)));
    CHECK_FALSE(is_prime(Integer(9)));
    CHECK_FALSE(is_prime(Integer(91)));  // 7 * 13
    CHECK(is_prime(Integer(97)));
}

TEST_CASE("is_prime 2^61 - 1 against Lucas-Lehmer oracle") {
    REQUIRE(lucas_lehmer(61));
    CHECK(is_prime(Integer::two_pow(61) - Integer(1)));
    REQUIRE_FALSE(lucas_lehmer(67));
    CHECK_FALSE(is_prime(Integer::two_pow(67) - Integer(1)));
}

TEST_CASE("is_prime agrees with GMP on random 64-bit and 128-bit inputs") {
    Rng rng(42);
    for (int i = 0; i < 400; ++i) {
        Integer n = rng.bit_string(63);
        CHECK(is_prime(n) == gmp_prime(n));
    }
    for (int i = 0; i < 60; ++i) {
        Integer n = rng.bit_string(128);
        CHECK(is_prime(n) == gmp_prime(n));
    }
}

TEST_CASE("is_prime composite with large prime factors") {
    // 14089 = 73 * 193; no factor below the trial-division cutoff
    CHECK_FALSE(is_prime(Integer(14089)));
    CHECK(is_prime(Integer(73)));
    CHECK(is_prime(Integer(193)));
}

TEST_CASE("random_prime ranges") {
    Rng rng(7);
    for (int i = 0; i < 20; ++i) {
        Integer p = random_prime(3, rng);
        CHECK((p == Integer(5) || p == Integer(7)));
    }
    for (int i = 0; i < 20; ++i) {
        Integer p = random_prime(4, rng);
        CHECK((p == Integer(11) || p == Integer(13)));
    }
}

TEST_CASE("random_prime bits=20 reproducible and in range") {
    auto in_range = primes_in(1L << 19, 1L << 20);
    Rng a(12345), b(12345);
    Integer p = random_prime(20, a);
    Integer q = random_prime(20, b);
    CHECK(p == q);
    REQUIRE(p.fits_long());
    bool member = std::find(in_range.begin(), in_range.end(), p.to_long()) != in_range.end();
    CHECK(member);
}

TEST_CASE("random_prime 62-bit") {
    Rng rng(99);
    Integer p = random_prime(62, rng);
    CHECK(p.bits() == 62);
    CHECK(gmp_prime(p));
}

TEST_CASE("arithmetic stays exact at 4096 bits and beyond") {
    Rng rng(4096);
    for (int i = 0; i < 20; ++i) {
        Integer a = rng.bit_string(4096) + Integer(1);
        Integer b = rng.bit_string(4100) + Integer(1);
        CHECK((a * b) / b == a);
        CHECK(((a * b) + a).mod(b) == a.mod(b));
        Rational r(a, b);
        Rational back = r * Rational(b);
        CHECK(back.den().is_one());
        CHECK(back == Rational(a));
    }
}

TEST_CASE("rational normalization") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        Integer n = rng.bit_string(40) - rng.bit_string(40);
        Integer d = rng.bit_string(30) + Integer(1);
        if (rng.u64() & 1) d = -d;
        Rational r(n, d);
        CHECK(r.den() > Integer(0));
        CHECK(Integer::gcd(r.num(), r.den()).is_one());
        if (r.num().is_zero()) CHECK(r.den().is_one());
    }
    CHECK(Rational(Integer(4), Integer(-6)) == Rational(Integer(-2), Integer(3)));
}

TEST_CASE("prime field arithmetic") {
    auto f7 = fp_context(Integer(7));
    FqElement three = fq_from_integer(f7, Integer(3));
    CHECK(three.inv() == fq_from_integer(f7, Integer(5)));  // 3 * 5 = 15 = 1 mod 7
    FqElement a = fq_from_integer(f7, Integer(6));
    CHECK(a + fq_zero(f7) == a);
    CHECK((a * a).scalar() == Integer(1));
    CHECK_THROWS_AS(fq_zero(f7).inv(), ZeroInversion);
}

TEST_CASE("context mismatch is rejected") {
    auto f5 = fp_context(Integer(5));
    auto f7 = fp_context(Integer(7));
    CHECK_THROWS_AS(fq_one(f5) + fq_one(f7), ContextMismatch);
}

TEST_CASE("fq_make builds F_4 and rejects reducible moduli") {
    PrimeField p2{Integer(2)};
    // z^2 + z + 1 has no root in F_2 (brute force: 0, 1 are not roots)
    for (long r : {0L, 1L}) {
        long v = (r * r + r + 1) % 2;
        REQUIRE(v != 0);
    }
    auto f4 = fq_make(p2, {Integer(1), Integer(1), Integer(1)});
    CHECK(f4->k == 2);
    CHECK(f4->cardinality() == Integer(4));
    // z * z = z + 1 in F_4
    FqElement z = fq_gen_pow(f4, 1);
    FqElement z1 = z * z;
    CHECK(z1 == z + fq_one(f4));

    PrimeField p5{Integer(5)};
    CHECK_THROWS_AS(fq_make(p5, {Integer(-1), Integer(0), Integer(1)}), ReducibleModulus);
    auto f5 = fq_make(p5, {Integer(0), Integer(1)});  // degree-1 modulus: F_5 itself
    CHECK(f5->k == 1);
}

TEST_CASE("field axioms on random elements") {
    Rng rng(2024);
    PrimeField p2{Integer(2)};
    std::vector<FqCtxPtr> ctxs = {
        fp_context(Integer(101)),
        fq_make(p2, {Integer(1), Integer(1), Integer(1)}),
        fq_make(PrimeField{Integer(5)}, {Integer(2), Integer(0), Integer(1)}),  // F_25
    };
    for (const auto& ctx : ctxs) {
        int inverted = 0;
        while (inverted < 10000) {
            FqElement a = fq_random(ctx, rng);
            if (a.is_zero()) continue;
            REQUIRE((a * a.inv()).is_one());
            ++inverted;
        }
        for (int i = 0; i < 200; ++i) {
            FqElement a = fq_random(ctx, rng);
            FqElement b = fq_random(ctx, rng);
            CHECK(a * b == b * a);
            CHECK((a + b) - b == a);
        }
        // Frobenius: a^(p^k) = a
        Integer q = ctx->cardinality();
        for (int i = 0; i < 50; ++i) {
            FqElement a = fq_random(ctx, rng);
            CHECK(a.pow(q) == a);
        }
    }
}

TEST_CASE("inverse stress in a larger prime field") {
    Rng rng(77);
    auto ctx = fp_context(random_prime(62, rng));
    for (int i = 0; i < 10000; ++i) {
        FqElement a = fq_random(ctx, rng);
        if (a.is_zero()) continue;
        CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("fq_arith dispatcher") {
    auto f7 = fp_context(Integer(7));
    FqElement a = fq_from_integer(f7, Integer(3)), b = fq_from_integer(f7, Integer(4));
    CHECK(fq_arith(a, b, FqOp::Add).scalar() == Integer(0));
    CHECK(fq_arith(a, b, FqOp::Sub).scalar() == Integer(6));
    CHECK(fq_arith(a, b, FqOp::Mul).scalar() == Integer(5));
    CHECK(fq_arith(a, b, FqOp::Inv).scalar() == Integer(5));
    CHECK(fq_arith(a, b, FqOp::Pow).scalar() == Integer(4));  // 3^4 = 81 = 4 mod 7
}

TEST_CASE("pth_root inverts Frobenius") {
    Rng rng(8);
    auto f8 = fq_make(PrimeField{Integer(2)}, {Integer(1), Integer(1), Integer(0), Integer(1)});
    FqField k{f8};
    for (int i = 0; i < 30; ++i) {
        FqElement a = fq_random(f8, rng);
        CHECK(k.pth_root(a * a) == a);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "puiseux/fq.hpp"
#include "puiseux/fq_factor.hpp"
#include "puiseux/qq.hpp"
#include "puiseux/upoly.hpp"

using namespace puiseux;

namespace {

UniPoly<QQ> qpoly(std::vector<long> coeffs) {
    QQ k;
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly<QQ>(k, std::move(c));
}

UniPoly<FqField> fqpoly(const FqCtxPtr& ctx, std::vector<long> coeffs) {
    FqField k{ctx};
    std::vector<FqElement> c;
    for (long v : coeffs) c.push_back(fq_from_integer(ctx, Integer(v)));
    return UniPoly<FqField>(k, std::move(c));
}

UniPoly<FqField> random_poly(const FqCtxPtr& ctx, long deg, Rng& rng) {
    FqField k{ctx};
    std::vector<FqElement> c;
    for (long i = 0; i <= deg; ++i) c.push_back(fq_random(ctx, rng));
    if (c.back().is_zero()) c.back() = fq_one(ctx);
    return UniPoly<FqField>(k, std::move(c));
}

}  // namespace

TEST_CASE("divrem over F_5: (x^2+1) / (x+2)") {
    auto f5 = fp_context(Integer(5));
    auto [q, r] = divrem(fqpoly(f5, {1, 0, 1}), fqpoly(f5, {2, 1}));
    // (x+2)(x+3) = x^2 + 5x + 6 = x^2 + 1 mod 5
    CHECK(q == fqpoly(f5, {3, 1}));
    CHECK(r.is_zero());
}

TEST_CASE("ring identities") {
    auto a = qpoly({3, 0, -2, 1});
    CHECK(a * UniPoly<QQ>::one(QQ{}) == a);
    CHECK(eval(qpoly({1, 0, 1}), Rational(2)) == Rational(5));
    CHECK_THROWS_AS(divrem(a, UniPoly<QQ>::zero(QQ{})), DivisionByZeroPoly);
}

TEST_CASE("divrem invariant deg(rem) < deg(b) on random inputs") {
    Rng rng(31);
    auto f13 = fp_context(Integer(13));
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(f13, 1 + static_cast<long>(rng.below_u64(10)), rng);
        auto b = random_poly(f13, 1 + static_cast<long>(rng.below_u64(6)), rng);
        auto [q, r] = divrem(a, b);
        CHECK(r.deg() < b.deg());
        CHECK(q * b + r == a);
    }
}

TEST_CASE("gcd_monic examples") {
    // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1 (common root 1 only)
    auto g = gcd_monic(qpoly({-1, 0, 1}), qpoly({1, -2, 1}));
    CHECK(g == qpoly({-1, 1}));
    CHECK(gcd_monic(qpoly({2, 4}), UniPoly<QQ>::zero(QQ{})) == qpoly({1, 2}) * UniPoly<QQ>::constant(QQ{}, Rational(Integer(1), Integer(2))));
    CHECK(gcd_monic(qpoly({0, 1}), qpoly({1, 1})).deg() == 0);
}

TEST_CASE("gcd divisibility property") {
    Rng rng(77);
    auto f7 = fp_context(Integer(7));
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(f7, 1 + static_cast<long>(rng.below_u64(4)), rng);
        auto b = random_poly(f7, 1 + static_cast<long>(rng.below_u64(4)), rng);
        auto g = random_poly(f7, 1 + static_cast<long>(rng.below_u64(3)), rng);
        if (gcd_monic(a, b).deg() != 0) continue;  // want coprime a, b
        auto d = gcd_monic(a * g, b * g);
        auto [q, r] = divrem(d, monic(g));
        CHECK(r.is_zero());
        (void)q;
    }
}

TEST_CASE("squarefree decomposition over Q") {
    // x^3 + x^2 = x^2 (x + 1)
    auto sfd = squarefree_decomposition(qpoly({0, 0, 1, 1}));
    REQUIRE(sfd.parts.size() == 2);
    CHECK(sfd.parts[0].first == qpoly({1, 1}));
    CHECK(sfd.parts[0].second == 1);
    CHECK(sfd.parts[1].first == qpoly({0, 1}));
    CHECK(sfd.parts[1].second == 2);

    auto sq = squarefree_decomposition(qpoly({1, 3, 1}));
    REQUIRE(sq.parts.size() == 1);
    CHECK(sq.parts[0].second == 1);
    CHECK(sq.parts[0].first == qpoly({1, 3, 1}));
}

TEST_CASE("squarefree decomposition over F_2: x^2 + 1 = (x+1)^2") {
    auto f2 = fp_context(Integer(2));
    auto sfd = squarefree_decomposition(fqpoly(f2, {1, 0, 1}));
    REQUIRE(sfd.parts.size() == 1);
    CHECK(sfd.parts[0].first == fqpoly(f2, {1, 1}));
    CHECK(sfd.parts[0].second == 2);
}

TEST_CASE("squarefree reassembly and cross-check with factor_fq") {
    Rng rng(123);
    std::vector<FqCtxPtr> ctxs = {
        fp_context(Integer(2)), fp_context(Integer(3)), fp_context(Integer(7)),
        fq_make(PrimeField{Integer(7)}, {Integer(1), Integer(0), Integer(1)}),  // F_49
    };
    for (const auto& ctx : ctxs) {
        FqField k{ctx};
        for (int trial = 0; trial < 40; ++trial) {
            auto f = random_poly(ctx, 2 + static_cast<long>(rng.below_u64(10)), rng);
            auto sfd = squarefree_decomposition(f);
            // reassemble
            auto acc = UniPoly<FqField>::constant(k, sfd.unit);
            for (const auto& [g, m] : sfd.parts)
                acc = acc * pow_ui(g, static_cast<unsigned long>(m));
            CHECK(acc == f);
            // parts pairwise coprime and squarefree
            for (std::size_t i = 0; i < sfd.parts.size(); ++i) {
                for (std::size_t j = i + 1; j < sfd.parts.size(); ++j)
                    CHECK(gcd_monic(sfd.parts[i].first, sfd.parts[j].first).deg() == 0);
                if (sfd.parts[i].first.deg() > 0) {
                    auto d = derivative(sfd.parts[i].first);
                    if (!d.is_zero()) CHECK(gcd_monic(sfd.parts[i].first, d).deg() == 0);
                }
            }
            // multiplicity profile agrees with full factorization
            auto fl = factor_fq(f, rng);
            std::map<long, long> sfd_weight, fac_weight;
            for (const auto& [g, m] : sfd.parts) sfd_weight[m] += g.deg();
            for (const auto& [g, m] : fl.factors) fac_weight[m] += g.deg();
            CHECK(sfd_weight == fac_weight);
        }
    }
}

TEST_CASE("factor_fq examples") {
    Rng rng(5);
    auto f5 = fp_context(Integer(5));
    // x^2 + 1 = (x+2)(x+3) over F_5
    auto fl = factor_fq(fqpoly(f5, {1, 0, 1}), rng);
    REQUIRE(fl.factors.size() == 2);
    CHECK(fl.factors[0].first == fqpoly(f5, {2, 1}));
    CHECK(fl.factors[1].first == fqpoly(f5, {3, 1}));

    auto f3 = fp_context(Integer(3));
    // brute force: x^2 + 1 has no root over F_3
    for (long r : {0L, 1L, 2L}) REQUIRE((r * r + 1) % 3 != 0);
    auto fl3 = factor_fq(fqpoly(f3, {1, 0, 1}), rng);
    REQUIRE(fl3.factors.size() == 1);
    CHECK(fl3.factors[0].first.deg() == 2);
    CHECK(is_irreducible(fqpoly(f3, {1, 0, 1})));

    auto f7 = fp_context(Integer(7));
    auto fl7 = factor_fq(fqpoly(f7, {0, 1, 1}), rng);  // x(x+1)
    REQUIRE(fl7.factors.size() == 2);
}

TEST_CASE("factor_fq re-expansion on random instances") {
    Rng rng(2718);
    std::vector<FqCtxPtr> ctxs = {
        fp_context(Integer(2)),
        fp_context(Integer(13)),
        fq_make(PrimeField{Integer(2)}, {Integer(1), Integer(1), Integer(1)}),          // F_4
        fq_make(PrimeField{Integer(2)}, {Integer(1), Integer(1), Integer(0), Integer(1)}),  // F_8
        fq_make(PrimeField{Integer(5)}, {Integer(2), Integer(0), Integer(1)}),          // F_25
    };
    for (const auto& ctx : ctxs) {
        FqField k{ctx};
        for (int trial = 0; trial < 30; ++trial) {
            auto f = random_poly(ctx, 1 + static_cast<long>(rng.below_u64(12)), rng);
            auto fl = factor_fq(f, rng);
            auto acc = UniPoly<FqField>::constant(k, fl.unit);
            for (const auto& [g, m] : fl.factors) {
                CHECK(is_irreducible(g));
                acc = acc * pow_ui(g, static_cast<unsigned long>(m));
            }
            CHECK(acc == f);
        }
    }
}

TEST_CASE("factorization in a 62-bit prime field") {
    Rng rng(99);
    auto p = random_prime(62, rng);
    auto ctx = fp_context(p);
    auto f = random_poly(ctx, 9, rng);
    auto fl = factor_fq(f, rng);
    FqField k{ctx};
    auto acc = UniPoly<FqField>::constant(k, fl.unit);
    for (const auto& [g, m] : fl.factors) acc = acc * pow_ui(g, static_cast<unsigned long>(m));
    CHECK(acc == f);
}

TEST_CASE("roots_in_field") {
    Rng rng(1);
    auto f5 = fp_context(Integer(5));
    auto roots = roots_in_field(fqpoly(f5, {-1, 0, 1}), rng);  // x^2 - 1
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first.scalar() == Integer(1));
    CHECK(roots[1].first.scalar() == Integer(4));

    auto f3 = fp_context(Integer(3));
    CHECK(roots_in_field(fqpoly(f3, {1, 0, 1}), rng).empty());

    auto f7 = fp_context(Integer(7));
    auto rr = roots_in_field(fqpoly(f7, {4, -4, 1}), rng);  // (x-2)^2
    REQUIRE(rr.size() == 1);
    CHECK(rr[0].first.scalar() == Integer(2));
    CHECK(rr[0].second == 2);
}

TEST_CASE("series inverse") {
    QQ k;
    auto a = qpoly({1, 1});  // 1 + x
    auto b = inv_series(a, 8);
    auto prod = mul_trunc(a, b, 8);
    CHECK(prod == UniPoly<QQ>::one(k));
}

TEST_CASE("extension and embedding") {
    Rng rng(55);
    auto f3 = fp_context(Integer(3));
    auto g = fqpoly(f3, {1, 0, 1});  // irreducible over F_3
    auto ext = extend_by_irreducible(f3, g, rng);
    CHECK(ext.emb.to->k == 2);
    // xi^2 + 1 = 0 in F_9
    auto gm = ext.emb.apply(g);
    CHECK(eval(gm, ext.xi).is_zero());
    // embedding is a ring homomorphism on random pairs
    for (int i = 0; i < 40; ++i) {
        FqElement a = fq_random(f3, rng), b = fq_random(f3, rng);
        CHECK(ext.emb.apply(a * b) == ext.emb.apply(a) * ext.emb.apply(b));
        CHECK(ext.emb.apply(a + b) == ext.emb.apply(a) + ext.emb.apply(b));
        CHECK(ext.emb.project(ext.emb.apply(a)) == a);
    }
    // tower case: extend F_4 by an irreducible quadratic
    auto f4 = fq_make(PrimeField{Integer(2)}, {Integer(1), Integer(1), Integer(1)});
    FqField k4{f4};
    UniPoly<FqField> h(k4, {fq_gen_pow(f4, 1), fq_one(f4), fq_one(f4)});  // x^2 + x + z
    REQUIRE(is_irreducible(h));
    auto ext2 = extend_by_irreducible(f4, h, rng);
    CHECK(ext2.emb.to->k == 4);
    CHECK(eval(ext2.emb.apply(h), ext2.xi).is_zero());
    for (int i = 0; i < 20; ++i) {
        FqElement a = fq_random(f4, rng), b = fq_random(f4, rng);
        CHECK(ext2.emb.apply(a * b) == ext2.emb.apply(a) * ext2.emb.apply(b));
        CHECK(ext2.emb.project(ext2.emb.apply(a)) == a);
    }
}

TEST_CASE("char-2 equal-degree splitting via trace map") {
    Rng rng(4);
    auto f8 = fq_make(PrimeField{Integer(2)}, {Integer(1), Integer(1), Integer(0), Integer(1)});
    FqField k{f8};
    // (x - z)(x - z^2), distinct roots in F_8
    FqElement z = fq_gen_pow(f8, 1), z2 = z * z;
    UniPoly<FqField> f = UniPoly<FqField>(k, {z, k.one()}) * UniPoly<FqField>(k, {z2, k.one()});
    auto fl = factor_fq(f, rng);
    REQUIRE(fl.factors.size() == 2);
    CHECK(fl.factors[0].first.deg() == 1);
    CHECK(fl.factors[1].first.deg() == 1);
}

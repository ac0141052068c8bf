#include "puiseux/bpoly.hpp"

namespace puiseux {

std::pair<long, long> bezout_uv(long q, long m) {
    if (q < 1 || m < 0 || std::gcd(q, m) != 1) throw InputError("bezout_uv: bad (q, m)");
    if (m == 0) return {1, 0};
    // u = q^{-1} mod m in [0, m), then v = (u q - 1)/m in [0, q)
    long u = 1;
    if (m > 1) {
        long r0 = m, r1 = q % m, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long qu = r0 / r1;
            long r2 = r0 - qu * r1, s2 = s0 - qu * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        u = ((s0 % m) + m) % m;
    }
    long v = (u * q - 1) / m;
    return {u, v};
}

UniPoly<QQ> resultant_y(const BiPoly<QQ>& a, const BiPoly<QQ>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<QQ>::zero(a.k);
    long counter = 0;
    auto nodes = [&]() -> Rational {
        long n = counter++;
        // 0, 1, -1, 2, -2, ...
        long v = (n + 1) / 2;
        return Rational((n & 1L) ? v : -v);
    };
    return detail::resultant_y_interp(a, b, nodes);
}

BiPoly<FqField> reduce_mod_p(const BiPoly<QQ>& f, const FqCtxPtr& ctx) {
    FqField k{ctx};
    std::vector<UniPoly<FqField>> out;
    for (const auto& col : f.cy) {
        std::vector<FqElement> rc;
        rc.reserve(col.c.size());
        for (const auto& q : col.c) {
            Integer den = q.den().mod(ctx->p);
            if (den.is_zero())
                throw BadPrimeDenominator("prime " + ctx->p.str() +
                                          " divides a coefficient denominator");
            Integer num = q.num().mod(ctx->p);
            rc.push_back(fq_from_integer(ctx, num * Integer::invmod(den, ctx->p)));
        }
        out.emplace_back(k, std::move(rc));
    }
    return BiPoly<FqField>(k, std::move(out));
}

Integer denominator_lcm(const BiPoly<QQ>& f) {
    Integer l(1);
    for (const auto& col : f.cy)
        for (const auto& q : col.c) l = Integer::lcm(l, q.den());
    return l;
}

BiPoly<QQ> clear_denominators(const BiPoly<QQ>& f) {
    Rational l{denominator_lcm(f)};
    std::vector<UniPoly<QQ>> out;
    out.reserve(f.cy.size());
    for (const auto& col : f.cy) out.push_back(scale(col, l));
    return BiPoly<QQ>(f.k, std::move(out));
}

}  // namespace puiseux

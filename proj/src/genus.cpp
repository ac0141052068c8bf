#include "puiseux/genus.hpp"

#include <algorithm>

namespace puiseux {

namespace {

using UP = UniPoly<FqField>;
using BP = BiPoly<FqField>;

CenterReport places_report(const BP& f, const Center& center, const std::string& label,
                           long multiplier, Rng& rng) {
    PlaceSet ps = places_above(f, center, std::nullopt, rng);
    CenterReport r;
    r.center = label;
    r.multiplier = multiplier;
    r.conservation = ps.conservation;
    for (const auto& ex : ps.expansions) r.contribution += ex.f * (ex.e - 1);
    if (r.conservation != f.degY())
        throw InternalError("genus: conservation failed above " + label);
    return r;
}

}  // namespace

GenusReport genus_mod_p(const BiPoly<FqField>& f, Rng& rng) {
    const long n = f.degY();
    if (n < 1) throw InputError("genus: deg_y must be >= 1");
    const FqCtxPtr& base = f.k.ctx;
    if (base->p <= Integer(n))
        throw SmallCharacteristic("genus: characteristic must exceed deg_y");

    GenusReport rep;
    if (n == 1) {
        // rational graph y = r(x): genus 0, no ramification anywhere
        rep.genus = 0;
        return rep;
    }

    UP disc = discriminant_y(f);
    if (disc.is_zero()) throw NotSquarefree();

    // Critical x-values: roots of the discriminant and of the leading
    // coefficient (pole centers), one representative per irreducible factor.
    UP crit = monic(disc);
    UP lc = monic(f.cy.back());
    if (lc.deg() > 0) {
        UP extra = div_exact(lc, gcd_monic(lc, crit));
        if (extra.deg() > 0) crit = crit * extra;
    }

    auto factors = factor_fq(crit, rng);
    long total = 0;
    for (const auto& [fac, mult] : factors.factors) {
        (void)mult;
        if (fac.deg() == 0) continue;
        CenterReport r;
        if (fac.deg() == 1) {
            FqElement x0 = f.k.neg(fac.c[0]);
            r = places_report(f, Center::at(x0), "x = " + x0.str(), 1, rng);
        } else {
            auto ext = extend_by_irreducible(base, fac, rng);
            BP fx = ext.emb.apply(f);
            r = places_report(fx, Center::at(ext.xi),
                              "root of " + poly_str(fac, "x") + " (degree " +
                                  std::to_string(fac.deg()) + ")",
                              fac.deg(), rng);
        }
        rep.contributions.push_back(r);
        total += r.multiplier * r.contribution;
    }
    {
        CenterReport r = places_report(f, Center::inf(), "x = infinity", 1, rng);
        rep.contributions.push_back(r);
        total += r.contribution;
    }

    long rhs = -2 * n + total;  // 2g - 2
    if (rhs % 2 != 0)
        throw NonIntegralGenus("genus: odd ramification total " + std::to_string(total));
    long g = rhs / 2 + 1;
    if (g < 0)
        throw NonIntegralGenus("genus: negative genus " + std::to_string(g) +
                               " (missed places or reducible curve?)");
    rep.genus = g;
    return rep;
}

GenusReport genus_over_q(const BiPoly<QQ>& f, PrimeStrategy strategy, unsigned lambda, Rng& rng) {
    auto chosen = choose_prime(f, strategy, lambda, rng);
    BP fp = reduce_mod_p(f, fp_context(chosen.verdict.p));
    GenusReport rep = genus_mod_p(fp, rng);
    rep.prime = chosen.verdict;
    return rep;
}

}  // namespace puiseux

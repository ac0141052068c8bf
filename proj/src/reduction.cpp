#include "puiseux/reduction.hpp"

namespace puiseux {

std::string status_str(PrimeStatus s) {
    switch (s) {
        case PrimeStatus::GoodVerified: return "GoodVerified";
        case PrimeStatus::GoodScreened: return "GoodScreened";
        case PrimeStatus::Bad: return "Bad";
    }
    return "?";
}

std::string reason_str(BadReason r) {
    switch (r) {
        case BadReason::None: return "None";
        case BadReason::DividesLeadingCoeff: return "DividesLeadingCoeff";
        case BadReason::DropsYDegree: return "DropsYDegree";
        case BadReason::DenominatorClash: return "DenominatorClash";
        case BadReason::NotSquarefreeModP: return "NotSquarefreeModP";
        case BadReason::TreeMismatch: return "TreeMismatch";
        case BadReason::SmallCharacteristic: return "SmallCharacteristic";
    }
    return "?";
}

ScreenContext::ScreenContext(const BiPoly<QQ>& f) : f_(f) {
    if (f.degY() < 1) throw InputError("screening needs deg_y >= 1");
    if (discriminant_y(f).is_zero()) throw NotSquarefree();
    den_lcm_ = denominator_lcm(f);
    BiPoly<QQ> cleared = clear_denominators(f);
    for (const auto& c : cleared.cy.back().c) lc_ints_.push_back(c.num());
    lc_x_lead_ = lc_ints_.back();
    disc_int_ = discriminant_y(cleared);
}

PrimeVerdict ScreenContext::screen(const Integer& p) const {
    PrimeVerdict v{p, PrimeStatus::Bad, BadReason::None};
    if (p <= Integer(degy())) {
        v.reason = BadReason::SmallCharacteristic;
        return v;
    }
    if (den_lcm_.mod(p).is_zero()) {
        v.reason = BadReason::DenominatorClash;
        return v;
    }
    bool lc_all_zero = true;
    for (const auto& c : lc_ints_)
        if (!c.mod(p).is_zero()) {
            lc_all_zero = false;
            break;
        }
    if (lc_all_zero) {
        v.reason = BadReason::DropsYDegree;
        return v;
    }
    if (lc_x_lead_.mod(p).is_zero()) {
        v.reason = BadReason::DividesLeadingCoeff;
        return v;
    }
    bool disc_zero_mod_p = true;
    for (const auto& c : disc_int_.c)
        if (!c.num().mod(p).is_zero()) {
            disc_zero_mod_p = false;
            break;
        }
    if (disc_zero_mod_p) {
        v.reason = BadReason::NotSquarefreeModP;
        return v;
    }
    v.status = PrimeStatus::GoodScreened;
    return v;
}

PrimeVerdict screen_prime(const BiPoly<QQ>& f, const Integer& p) {
    return ScreenContext(f).screen(p);
}

PrimeVerdict screen_prime(const ScreenContext& ctx, const Integer& p) { return ctx.screen(p); }

PrimeVerdict verify_prime(const BiPoly<QQ>& f, const Integer& p, Rng& rng) {
    ScreenContext ctx(f);
    PrimeVerdict v = ctx.screen(p);
    if (!v.good()) return v;
    PolygonTree tq = polygon_tree_q(f);
    PolygonTree tp = polygon_tree_fq(reduce_mod_p(f, fp_context(p)), rng);
    if (tree_equal(tq, tp)) {
        v.status = PrimeStatus::GoodVerified;
    } else {
        v.status = PrimeStatus::Bad;
        v.reason = BadReason::TreeMismatch;
    }
    return v;
}

ChoosePrimeResult choose_prime(const BiPoly<QQ>& f, PrimeStrategy strategy, unsigned lambda,
                               Rng& rng) {
    // Deterministic enumeration works from any starting point; the randomized
    // strategies need a healthy prime density in the sampling window.
    if (strategy == PrimeStrategy::Deterministic ? lambda < 3 : lambda < 8)
        throw InputError("choose_prime: lambda too small");
    ScreenContext ctx(f);
    ChoosePrimeResult res;
    PolygonTree tq;
    if (strategy != PrimeStrategy::MonteCarlo) tq = polygon_tree_q(f);

    auto verify_screened = [&](PrimeVerdict v) -> PrimeVerdict {
        Rng vr = rng.fork(0x54524545 ^ v.p.bits());
        PolygonTree tp = polygon_tree_fq(reduce_mod_p(f, fp_context(v.p)), vr);
        if (tree_equal(tq, tp)) {
            v.status = PrimeStatus::GoodVerified;
        } else {
            v.status = PrimeStatus::Bad;
            v.reason = BadReason::TreeMismatch;
        }
        return v;
    };

    if (strategy == PrimeStrategy::Deterministic) {
        Integer p = Integer::two_pow(lambda - 1) - Integer(1);
        while (true) {
            p = next_prime_above(p);
            PrimeVerdict v = ctx.screen(p);
            if (v.good()) v = verify_screened(v);
            if (v.status == PrimeStatus::GoodVerified) {
                res.verdict = v;
                return res;
            }
            res.rejected.push_back(v);
        }
    }

    const int budget = 64;
    for (int attempt = 0; attempt < budget; ++attempt) {
        Integer p = random_prime(lambda, rng);
        PrimeVerdict v = ctx.screen(p);
        if (v.good() && strategy == PrimeStrategy::LasVegas) v = verify_screened(v);
        if (v.good()) {
            res.verdict = v;
            return res;
        }
        res.rejected.push_back(v);
    }
    std::string msg = "choose_prime: no usable prime in " + std::to_string(budget) + " draws;";
    for (const auto& r : res.rejected) msg += " " + r.p.str() + ":" + reason_str(r.reason);
    throw RetryBudgetExhausted(msg);
}

}  // namespace puiseux

#ifndef PUISEUX_REDUCTION_HPP
#define PUISEUX_REDUCTION_HPP

#include <string>
#include <vector>

#include "puiseux/tree.hpp"

namespace puiseux {

enum class PrimeStatus { GoodVerified, GoodScreened, Bad };

enum class BadReason {
    None,
    DividesLeadingCoeff,
    DropsYDegree,
    DenominatorClash,
    NotSquarefreeModP,
    TreeMismatch,
    SmallCharacteristic,
};

std::string status_str(PrimeStatus s);
std::string reason_str(BadReason r);

struct PrimeVerdict {
    Integer p;
    PrimeStatus status = PrimeStatus::Bad;
    BadReason reason = BadReason::None;

    bool good() const { return status != PrimeStatus::Bad; }
};

// Cached per-curve screening data: degrees, denominator lcm, and the integer
// discriminant (computed once over Z by clearing denominators).
class ScreenContext {
  public:
    explicit ScreenContext(const BiPoly<QQ>& f);

    const BiPoly<QQ>& curve() const { return f_; }
    long degy() const { return f_.degY(); }

    PrimeVerdict screen(const Integer& p) const;

  private:
    BiPoly<QQ> f_;
    Integer den_lcm_;
    Integer lc_x_lead_;            // leading integer coefficient of the cleared a_N
    std::vector<Integer> lc_ints_;  // integer coefficients of the cleared a_N
    UniPoly<QQ> disc_int_{QQ{}};    // integer discriminant of the cleared curve
};

// Cheap checks only: p > deg_y, no denominator divisible by p, y-degree and
// x-degree of the leading coefficient preserved, disc mod p nonzero.
PrimeVerdict screen_prime(const BiPoly<QQ>& f, const Integer& p);
PrimeVerdict screen_prime(const ScreenContext& ctx, const Integer& p);

// Full criterion: polygon tree over Q (dynamic evaluation) equals the tree
// over F_p.
PrimeVerdict verify_prime(const BiPoly<QQ>& f, const Integer& p, Rng& rng);

enum class PrimeStrategy { MonteCarlo, LasVegas, Deterministic };

struct ChoosePrimeResult {
    PrimeVerdict verdict;
    std::vector<PrimeVerdict> rejected;
};

// MonteCarlo: random lambda-bit primes until one screens clean.
// LasVegas: additionally verify tree preservation.
// Deterministic: enumerate primes upward from 2^(lambda-1), verifying each.
ChoosePrimeResult choose_prime(const BiPoly<QQ>& f, PrimeStrategy strategy, unsigned lambda,
                               Rng& rng);

}  // namespace puiseux

#endif

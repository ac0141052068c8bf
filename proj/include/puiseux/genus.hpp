#ifndef PUISEUX_GENUS_HPP
#define PUISEUX_GENUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "puiseux/puiseux.hpp"
#include "puiseux/reduction.hpp"

namespace puiseux {

// Riemann-Hurwitz bookkeeping for one critical center.
struct CenterReport {
    std::string center;      // printable description
    long multiplier = 1;     // degree of the center over F_p (conjugates counted once)
    long contribution = 0;   // sum f (e - 1) over places above the center
    long conservation = 0;   // sum e f, poles included
};

struct GenusReport {
    long genus = 0;
    std::optional<PrimeVerdict> prime;  // present when reduction was involved
    std::vector<CenterReport> contributions;
};

// Genus of the plane curve F = 0 over F_p via modular Puiseux expansions and
// Riemann-Hurwitz over the x-line. F must be squarefree in y and irreducible
// as a curve (asserted by the caller), with p > deg_y.
GenusReport genus_mod_p(const BiPoly<FqField>& f, Rng& rng);

// Reduce at a prime of the chosen strategy, then compute mod p.
GenusReport genus_over_q(const BiPoly<QQ>& f, PrimeStrategy strategy, unsigned lambda, Rng& rng);

}  // namespace puiseux

#endif

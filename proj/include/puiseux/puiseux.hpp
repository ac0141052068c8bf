#ifndef PUISEUX_PUISEUX_HPP
#define PUISEUX_PUISEUX_HPP

#include <optional>
#include <string>
#include <vector>

#include "puiseux/fq_factor.hpp"

namespace puiseux {

// One rational Puiseux expansion: X(T) = x0 + lambda T^e at a finite center
// (lambda T^{-e} above infinity), Y(T) = sum beta_i T^{n_i}. Coefficients live
// in `field`, an extension of the input's coefficient field of relative
// degree f. Exponents below trunc are exactly the ones shown; n_i < 0 occurs
// for pole branches.
struct PuiseuxExpansion {
    FqCtxPtr field;
    FqElement lambda;
    long e = 1;
    long f = 1;
    std::vector<std::pair<long, FqElement>> terms;
    long trunc = 0;
    // Image of the input field's generator in `field`; fixes the embedding the
    // coefficients were computed under (identity when f = 1).
    FqElement base_gen;

    FqEmbedding embedding_from(const FqCtxPtr& base) const {
        return FqEmbedding{base, field, base_gen};
    }
};

struct Center {
    bool infinity = false;
    FqElement x0;  // meaningful when finite

    static Center at(FqElement v) { return Center{false, std::move(v)}; }
    static Center inf() { return Center{true, {}}; }
};

struct PlaceSet {
    Center center;
    std::vector<PuiseuxExpansion> expansions;
    long conservation = 0;  // sum e_i * f_i
    long delta = 0;         // output size: sum e_i * f_i * max(1, #terms_i)
};

struct RnpOptions {
    // x-degree truncation passed to the edge transforms (benchmark mode).
    std::optional<long> x_trunc_eta;
    // Lift the p > deg_y and squarefree guards; wild-characteristic probes
    // only, results are out of contract.
    bool lift_guards = false;
};

// All expansions above x = 0 with valuation >= 0, coefficients to T-order
// trunc (exclusive).
PlaceSet rnpuiseux(const BiPoly<FqField>& f, long trunc, Rng& rng, const RnpOptions& opts = {});

// Expansions truncated at the first regular point: the minimal data
// determining each place. trunc is set per expansion to that order.
PlaceSet singular_parts(const BiPoly<FqField>& f, Rng& rng, const RnpOptions& opts = {});

// Places above an arbitrary center (or infinity), pole branches included.
// With trunc = nullopt, singular parts only.
PlaceSet places_above(const BiPoly<FqField>& f, const Center& center, std::optional<long> trunc,
                      Rng& rng, const RnpOptions& opts = {});

// F(X(T), Y(T)) = 0 mod T^order?
bool verify_expansion(const BiPoly<FqField>& f, const Center& center,
                      const PuiseuxExpansion& exp, long order);

// Largest order at which the residual is fully determined by exp's data.
long max_verifiable_order(const BiPoly<FqField>& f, const Center& center,
                          const PuiseuxExpansion& exp);

std::string expansion_str(const Center& center, const PuiseuxExpansion& exp);

}  // namespace puiseux

#endif

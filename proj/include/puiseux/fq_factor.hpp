#ifndef PUISEUX_FQ_FACTOR_HPP
#define PUISEUX_FQ_FACTOR_HPP

#include <utility>
#include <vector>

#include "puiseux/bpoly.hpp"
#include "puiseux/fq.hpp"
#include "puiseux/upoly.hpp"

namespace puiseux {

struct FactorList {
    FqElement unit;
    std::vector<std::pair<UniPoly<FqField>, long>> factors;  // (monic irreducible, multiplicity)
};

// Complete factorization into monic irreducibles: squarefree decomposition,
// then distinct-degree, then equal-degree splitting (Cantor-Zassenhaus for odd
// q, trace-map splitting in characteristic 2). Factors are sorted canonically.
FactorList factor_fq(const UniPoly<FqField>& f, Rng& rng);

// Roots lying in the coefficient field, with multiplicities, canonical order.
std::vector<std::pair<FqElement, long>> roots_in_field(const UniPoly<FqField>& f, Rng& rng);

// Rabin's irreducibility test (deterministic).
bool is_irreducible(const UniPoly<FqField>& f);

// Random monic irreducible of the given degree.
UniPoly<FqField> random_irreducible(const FqCtxPtr& ctx, int degree, Rng& rng);

// Checked context constructor: verifies m monic of degree >= 1 and irreducible
// over F_p (throws ReducibleModulus otherwise).
FqCtxPtr fq_make(const PrimeField& base, std::vector<Integer> modulus);

// F_p-linear embedding of one field into a larger one, fixed by the image of
// the source generator.
struct FqEmbedding {
    FqCtxPtr from;
    FqCtxPtr to;
    FqElement gen_image;

    FqElement apply(const FqElement& a) const;
    UniPoly<FqField> apply(const UniPoly<FqField>& f) const;
    BiPoly<FqField> apply(const BiPoly<FqField>& f) const;
    bool trivial() const { return same_context(*from, *to); }

    // Preimage in the source field; throws InternalError when the element is
    // not in the embedded copy.
    FqElement project(const FqElement& a) const;
    UniPoly<FqField> project(const UniPoly<FqField>& f) const;
};

FqEmbedding identity_embedding(const FqCtxPtr& ctx);

struct FqExtension {
    FqEmbedding emb;
    FqElement xi;  // a root of the defining polynomial in the new field
};

// Extension of K containing a root of the irreducible g over K. Flattened to a
// fresh F_p[w]/(m2) with deg m2 = k * deg g; the embedding sends the old
// generator to a root of the old modulus in the new field.
FqExtension extend_by_irreducible(const FqCtxPtr& ctx, const UniPoly<FqField>& g, Rng& rng);

// Degree-s extension without a distinguished root.
FqEmbedding extend_by_degree(const FqCtxPtr& ctx, int s, Rng& rng);

}  // namespace puiseux

#endif

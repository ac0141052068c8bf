#ifndef PUISEUX_SERIALIZE_HPP
#define PUISEUX_SERIALIZE_HPP

#include <json.hpp>

#include "puiseux/genus.hpp"
#include "puiseux/polygon.hpp"
#include "puiseux/puiseux.hpp"
#include "puiseux/tree.hpp"

namespace puiseux {

using Json = nlohmann::ordered_json;

// Integers are serialized as decimal strings: 62-bit primes and arbitrary
// precision values do not fit portable JSON numbers.
Json json_of_integer(const Integer& n);
Json json_of_fq(const FqElement& a);        // coefficient sequence
Json json_of_field(const FqCtxPtr& ctx);    // { p, k, modulus }

// { center, expansions: [ { e, f, field, lambda, terms, trunc } ] }
Json json_of_placeset(const PlaceSet& ps);

// { genus, prime: { p, status }, contributions: [...], checks: [...] }
Json json_of_genus(const GenusReport& rep);

Json json_of_polygon(const NewtonPolygon& np);
Json json_of_tree(const PolygonTree& t);
Json json_of_verdict(const PrimeVerdict& v);

}  // namespace puiseux

#endif

#ifndef PUISEUX_PARSE_HPP
#define PUISEUX_PARSE_HPP

#include <string>

#include "puiseux/bpoly.hpp"

namespace puiseux {

// Grammar: signed integer or a/b rational coefficients (optionally
// parenthesized), monomials x^i*y^j with * optional, +/- separators,
// whitespace insensitive. Example: "y^2 - x^3 + (1/2)*x*y".
BiPoly<QQ> parse_bipoly(const std::string& text);

// Same grammar, coefficients reduced into the given field.
BiPoly<FqField> parse_bipoly_fq(const std::string& text, const FqCtxPtr& ctx);

}  // namespace puiseux

#endif

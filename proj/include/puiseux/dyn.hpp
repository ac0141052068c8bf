#ifndef PUISEUX_DYN_HPP
#define PUISEUX_DYN_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "puiseux/qq.hpp"
#include "puiseux/upoly.hpp"

namespace puiseux {

// Q[z]/(h) for monic squarefree h, not necessarily irreducible. When an
// operation distinguishes the components of a reducible h (a zero divisor
// shows up), it raises DynSplit and the computation is rerun per factor.
struct DynCtx {
    UniPoly<QQ> h;     // monic squarefree modulus, deg >= 1
    std::uint64_t id;  // identifies which ring split
};

using DynCtxPtr = std::shared_ptr<const DynCtx>;

DynCtxPtr dyn_context(UniPoly<QQ> h);
// The trivial ring Q = Q[z]/(z).
DynCtxPtr dyn_trivial();

// Control-flow signal, not an error: h = h1 * h2 was discovered, rerun the
// enclosing computation over both factors.
struct DynSplit {
    std::uint64_t ctx_id;
    UniPoly<QQ> h1, h2;
};

class DynElem {
  public:
    DynElem() = default;
    DynElem(DynCtxPtr ctx, UniPoly<QQ> rep);

    const DynCtxPtr& ctx() const { return ctx_; }
    const UniPoly<QQ>& rep() const { return rep_; }

    // Semantic zero test: throws DynSplit when the answer differs between
    // components of the ring.
    bool is_zero() const;

    DynElem operator+(const DynElem& o) const;
    DynElem operator-(const DynElem& o) const;
    DynElem operator*(const DynElem& o) const;
    DynElem operator-() const;
    DynElem inv() const;  // throws DynSplit on zero divisors, ZeroInversion on 0

    // Reduce into a refinement ring (h' | h).
    DynElem refine(const DynCtxPtr& finer) const;

    std::string str() const { return poly_str(rep_, "z"); }

  private:
    DynCtxPtr ctx_;
    UniPoly<QQ> rep_{QQ{}};  // reduced mod h
};

// Non-throwing inversion: either the inverse or the discovered factorization.
using DynInvertResult = std::variant<DynElem, std::pair<UniPoly<QQ>, UniPoly<QQ>>>;
DynInvertResult dyn_invert(const DynElem& a);

struct DynField {
    using Elem = DynElem;
    DynCtxPtr ctx;

    Elem zero() const { return DynElem(ctx, UniPoly<QQ>::zero(QQ{})); }
    Elem one() const { return DynElem(ctx, UniPoly<QQ>::one(QQ{})); }
    Elem from_long(long n) const {
        return DynElem(ctx, UniPoly<QQ>::constant(QQ{}, Rational(n)));
    }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return (a - b).is_zero(); }
    bool same(const DynField& o) const { return ctx->id == o.ctx->id; }
    Integer characteristic() const { return Integer(0); }
    Elem pth_root(const Elem&) const { throw InternalError("pth_root in characteristic 0"); }
    std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace puiseux

#endif

#ifndef PUISEUX_FQ_HPP
#define PUISEUX_FQ_HPP

#include <memory>
#include <string>
#include <vector>

#include "puiseux/integer.hpp"

namespace puiseux {

// Prime p certified at construction.
class PrimeField {
  public:
    explicit PrimeField(Integer p) : p_(std::move(p)) {
        if (!is_prime(p_)) throw InputError("PrimeField: " + p_.str() + " is not prime");
    }
    const Integer& p() const { return p_; }

  private:
    Integer p_;
};

// F_p[z]/(m(z)). The prime field itself is the degenerate case m = z.
// Irreducibility of m is the caller's responsibility at this level; fq_make
// (fq_factor.hpp) is the checked constructor.
struct FqContext {
    Integer p;
    std::vector<Integer> modulus;  // monic, canonical coefficients, size k+1
    int k = 1;

    bool prime_field() const { return k == 1; }
    Integer cardinality() const;
    std::string str() const;
};

using FqCtxPtr = std::shared_ptr<const FqContext>;

// Unchecked context builders (modulus reduced and verified monic, not
// verified irreducible).
FqCtxPtr fq_context_unchecked(const Integer& p, std::vector<Integer> modulus);
FqCtxPtr fp_context(const PrimeField& base);
FqCtxPtr fp_context(const Integer& p);

class FqElement {
  public:
    FqElement() = default;
    FqElement(FqCtxPtr ctx, std::vector<Integer> rep);

    const FqCtxPtr& ctx() const { return ctx_; }
    const std::vector<Integer>& rep() const { return rep_; }
    bool is_zero() const;
    bool is_one() const;

    // Value of a degree-0 element (prime-field case mostly).
    const Integer& scalar() const { return rep_[0]; }

    FqElement operator+(const FqElement& o) const;
    FqElement operator-(const FqElement& o) const;
    FqElement operator*(const FqElement& o) const;
    FqElement operator-() const;
    FqElement inv() const;
    FqElement pow(const Integer& e) const;  // negative e inverts first
    bool operator==(const FqElement& o) const;
    bool operator!=(const FqElement& o) const { return !(*this == o); }

    // Total order on canonical representatives; used for deterministic choices.
    static int cmp(const FqElement& a, const FqElement& b);

    std::string str() const;

  private:
    void check_ctx(const FqElement& o) const;
    FqCtxPtr ctx_;
    std::vector<Integer> rep_;  // length k, entries in [0, p)
};

bool same_context(const FqContext& a, const FqContext& b);

FqElement fq_zero(const FqCtxPtr& ctx);
FqElement fq_one(const FqCtxPtr& ctx);
FqElement fq_from_integer(const FqCtxPtr& ctx, const Integer& n);
// z^i as an element (i < k).
FqElement fq_gen_pow(const FqCtxPtr& ctx, int i);
// All field elements in canonical order; only sensible for small fields.
std::vector<FqElement> fq_enumerate(const FqCtxPtr& ctx, std::size_t limit);
FqElement fq_random(const FqCtxPtr& ctx, Rng& rng);

enum class FqOp { Add, Sub, Mul, Inv, Pow };

// Dispatcher form of the element arithmetic; Inv ignores b, Pow uses b's
// scalar as the exponent of a.
FqElement fq_arith(const FqElement& a, const FqElement& b, FqOp op);

// Field object for the generic polynomial templates.
struct FqField {
    using Elem = FqElement;
    FqCtxPtr ctx;

    Elem zero() const { return fq_zero(ctx); }
    Elem one() const { return fq_one(ctx); }
    Elem from_long(long n) const { return fq_from_integer(ctx, Integer(n)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool same(const FqField& o) const { return same_context(*ctx, *o.ctx); }
    Integer characteristic() const { return ctx->p; }
    Elem pth_root(const Elem& a) const;
    std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace puiseux

#endif

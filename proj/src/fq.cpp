#include "puiseux/fq.hpp"

#include <algorithm>
#include <sstream>

namespace puiseux {

namespace {

// Dense polynomial helpers over F_p on raw coefficient vectors. Internal to
// element arithmetic; the generic UniPoly machinery is layered above contexts,
// not below them.

using Vec = std::vector<Integer>;

Integer norm(const Integer& a, const Integer& p) {
    Integer r = a.mod(p);
    BitWatermark::note(r.bits());
    return r;
}

void vtrim(Vec& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Vec vadd(const Vec& a, const Vec& b, const Integer& p) {
    Vec r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Integer s = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
        r[i] = norm(s, p);
    }
    vtrim(r);
    return r;
}

Vec vsub(const Vec& a, const Vec& b, const Integer& p) {
    Vec r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Integer s = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
        r[i] = norm(s, p);
    }
    vtrim(r);
    return r;
}

Vec vmul(const Vec& a, const Vec& b, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c = norm(c, p);
    vtrim(r);
    return r;
}

// Remainder of a by monic m.
Vec vmod(Vec a, const Vec& m, const Integer& p) {
    vtrim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Integer c = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (!c.is_zero()) {
            for (std::size_t i = 0; i < dm; ++i) a[shift + i] = norm(a[shift + i] - c * m[i], p);
        }
        a.pop_back();
        vtrim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

// Extended gcd of a and monic m over F_p: returns (g, s) with s*a = g mod m
// and g the monic gcd. Only s is tracked; callers need inverses.
std::pair<Vec, Vec> vgcdext(Vec a, Vec m, const Integer& p) {
    Vec r0 = std::move(m), r1 = std::move(a);
    Vec s0 = {}, s1 = {Integer(1)};
    vtrim(r0);
    vtrim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Vec q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, Integer(0));
        Vec rem = r0;
        Integer lcinv = Integer::invmod(r1.back(), p);
        while (rem.size() >= r1.size() && !rem.empty()) {
            Integer c = norm(rem.back() * lcinv, p);
            std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            if (!c.is_zero())
                for (std::size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = norm(rem[shift + i] - c * r1[i], p);
            rem.pop_back();
            vtrim(rem);
        }
        vtrim(q);
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Vec s2 = vsub(s0, vmul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // normalize gcd monic
    if (!r0.empty() && !r0.back().is_one()) {
        Integer u = Integer::invmod(r0.back(), p);
        for (auto& c : r0) c = norm(c * u, p);
        for (auto& c : s0) c = norm(c * u, p);
    }
    return {r0, s0};
}

}  // namespace

Integer FqContext::cardinality() const {
    Integer q(1);
    for (int i = 0; i < k; ++i) q = q * p;
    return q;
}

std::string FqContext::str() const {
    if (prime_field()) return "F_" + p.str();
    std::ostringstream os;
    os << "F_" << p.str() << "^" << k;
    return os.str();
}

FqCtxPtr fq_context_unchecked(const Integer& p, std::vector<Integer> modulus) {
    auto ctx = std::make_shared<FqContext>();
    ctx->p = p;
    for (auto& c : modulus) c = c.mod(p);
    while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
    if (modulus.size() < 2) throw InputError("field modulus must have degree >= 1");
    if (!modulus.back().is_one()) throw InputError("field modulus must be monic");
    ctx->modulus = std::move(modulus);
    ctx->k = static_cast<int>(ctx->modulus.size()) - 1;
    return ctx;
}

FqCtxPtr fp_context(const PrimeField& base) {
    return fq_context_unchecked(base.p(), {Integer(0), Integer(1)});
}

FqCtxPtr fp_context(const Integer& p) { return fp_context(PrimeField(p)); }

bool same_context(const FqContext& a, const FqContext& b) {
    return a.p == b.p && a.modulus == b.modulus;
}

FqElement::FqElement(FqCtxPtr ctx, std::vector<Integer> rep) : ctx_(std::move(ctx)) {
    rep = vmod(std::move(rep), ctx_->modulus, ctx_->p);
    for (auto& c : rep) c = norm(c, ctx_->p);
    rep.resize(ctx_->k, Integer(0));
    rep_ = std::move(rep);
}

bool FqElement::is_zero() const {
    for (const auto& c : rep_)
        if (!c.is_zero()) return false;
    return true;
}

bool FqElement::is_one() const {
    if (!rep_[0].is_one()) return false;
    for (std::size_t i = 1; i < rep_.size(); ++i)
        if (!rep_[i].is_zero()) return false;
    return true;
}

void FqElement::check_ctx(const FqElement& o) const {
    if (ctx_.get() == o.ctx_.get()) return;
    if (!same_context(*ctx_, *o.ctx_)) throw ContextMismatch();
}

FqElement FqElement::operator+(const FqElement& o) const {
    check_ctx(o);
    return FqElement(ctx_, vadd(rep_, o.rep_, ctx_->p));
}

FqElement FqElement::operator-(const FqElement& o) const {
    check_ctx(o);
    return FqElement(ctx_, vsub(rep_, o.rep_, ctx_->p));
}

FqElement FqElement::operator*(const FqElement& o) const {
    check_ctx(o);
    return FqElement(ctx_, vmul(rep_, o.rep_, ctx_->p));
}

FqElement FqElement::operator-() const {
    return FqElement(ctx_, vsub({}, rep_, ctx_->p));
}

FqElement FqElement::inv() const {
    if (is_zero()) throw ZeroInversion();
    auto [g, s] = vgcdext(rep_, ctx_->modulus, ctx_->p);
    if (g.size() != 1)
        throw InternalError("FqElement::inv: modulus not irreducible (zero divisor hit)");
    return FqElement(ctx_, s);
}

FqElement FqElement::pow(const Integer& e) const {
    if (e.sign() < 0) return inv().pow(-e);
    FqElement base = *this;
    FqElement acc = fq_one(ctx_);
    Integer n = e;
    while (!n.is_zero()) {
        if (n.is_odd()) acc = acc * base;
        n = n / Integer(2);
        if (!n.is_zero()) base = base * base;
    }
    return acc;
}

bool FqElement::operator==(const FqElement& o) const {
    check_ctx(o);
    return rep_ == o.rep_;
}

int FqElement::cmp(const FqElement& a, const FqElement& b) {
    for (std::size_t i = a.rep_.size(); i-- > 0;) {
        if (a.rep_[i] < b.rep_[i]) return -1;
        if (b.rep_[i] < a.rep_[i]) return 1;
    }
    return 0;
}

std::string FqElement::str() const {
    if (ctx_->prime_field()) return rep_[0].str();
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rep_.size(); ++i) {
        if (i) os << ",";
        os << rep_[i].str();
    }
    os << "]";
    return os.str();
}

FqElement fq_zero(const FqCtxPtr& ctx) { return FqElement(ctx, {}); }

FqElement fq_one(const FqCtxPtr& ctx) { return FqElement(ctx, {Integer(1)}); }

FqElement fq_from_integer(const FqCtxPtr& ctx, const Integer& n) {
    return FqElement(ctx, {n.mod(ctx->p)});
}

FqElement fq_gen_pow(const FqCtxPtr& ctx, int i) {
    std::vector<Integer> rep(static_cast<std::size_t>(i) + 1, Integer(0));
    rep.back() = Integer(1);
    return FqElement(ctx, std::move(rep));
}

std::vector<FqElement> fq_enumerate(const FqCtxPtr& ctx, std::size_t limit) {
    std::vector<FqElement> out;
    std::vector<Integer> rep(ctx->k, Integer(0));
    while (out.size() < limit) {
        out.emplace_back(ctx, rep);
        // odometer increment base p
        int i = 0;
        for (; i < ctx->k; ++i) {
            rep[i] += Integer(1);
            if (rep[i] < ctx->p) break;
            rep[i] = Integer(0);
        }
        if (i == ctx->k) break;  // wrapped: field exhausted
    }
    return out;
}

FqElement fq_random(const FqCtxPtr& ctx, Rng& rng) {
    std::vector<Integer> rep(ctx->k);
    for (auto& c : rep) c = rng.below(ctx->p);
    return FqElement(ctx, std::move(rep));
}

FqElement fq_arith(const FqElement& a, const FqElement& b, FqOp op) {
    switch (op) {
        case FqOp::Add: return a + b;
        case FqOp::Sub: return a - b;
        case FqOp::Mul: return a * b;
        case FqOp::Inv: return a.inv();
        case FqOp::Pow: return a.pow(b.scalar());
    }
    throw InternalError("fq_arith: bad op");
}

FqElement FqField::pth_root(const Elem& a) const {
    // Frobenius is x -> x^p; its inverse on F_{p^k} is x -> x^{p^(k-1)}.
    if (ctx->k == 1) return a;
    Integer e(1);
    for (int i = 0; i + 1 < ctx->k; ++i) e = e * ctx->p;
    return a.pow(e);
}

}  // namespace puiseux

#include "puiseux/dyn.hpp"

#include <atomic>

namespace puiseux {

namespace {
std::atomic<std::uint64_t> next_ctx_id{1};
}

DynCtxPtr dyn_context(UniPoly<QQ> h) {
    if (h.deg() < 1) throw InputError("dynamic modulus must have degree >= 1");
    h = monic(h);
    return std::make_shared<DynCtx>(DynCtx{std::move(h), next_ctx_id.fetch_add(1)});
}

DynCtxPtr dyn_trivial() {
    return dyn_context(UniPoly<QQ>::xpow(QQ{}, 1));
}

DynElem::DynElem(DynCtxPtr ctx, UniPoly<QQ> rep) : ctx_(std::move(ctx)) {
    rep_ = divrem(rep, ctx_->h).second;
}

bool DynElem::is_zero() const {
    if (rep_.is_zero()) return true;
    if (rep_.deg() == 0 || ctx_->h.deg() == 1) return false;
    UniPoly<QQ> g = gcd_monic(rep_, ctx_->h);
    if (g.deg() == 0) return false;
    // Zero on the g-component, nonzero elsewhere.
    throw DynSplit{ctx_->id, g, div_exact(ctx_->h, g)};
}

DynElem DynElem::operator+(const DynElem& o) const { return DynElem(ctx_, rep_ + o.rep_); }
DynElem DynElem::operator-(const DynElem& o) const { return DynElem(ctx_, rep_ - o.rep_); }
DynElem DynElem::operator*(const DynElem& o) const { return DynElem(ctx_, rep_ * o.rep_); }
DynElem DynElem::operator-() const { return DynElem(ctx_, -rep_); }

DynElem DynElem::inv() const {
    DynInvertResult r = dyn_invert(*this);
    if (auto* e = std::get_if<DynElem>(&r)) return *e;
    auto& [h1, h2] = std::get<std::pair<UniPoly<QQ>, UniPoly<QQ>>>(r);
    throw DynSplit{ctx_->id, h1, h2};
}

DynInvertResult dyn_invert(const DynElem& a) {
    if (a.rep().is_zero()) throw ZeroInversion();
    auto [g, s, t] = ext_gcd(a.rep(), a.ctx()->h);
    (void)t;
    if (g.deg() == 0) return DynElem(a.ctx(), s);
    return std::make_pair(g, div_exact(a.ctx()->h, g));
}

DynElem DynElem::refine(const DynCtxPtr& finer) const {
    return DynElem(finer, rep_);
}

}  // namespace puiseux

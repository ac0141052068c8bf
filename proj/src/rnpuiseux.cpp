#include <algorithm>
#include <limits>
#include <sstream>

#include "puiseux/polygon.hpp"
#include "puiseux/puiseux.hpp"

namespace puiseux {

namespace {

using UP = UniPoly<FqField>;
using BP = BiPoly<FqField>;

FqElement elem_pow_long(const FqElement& a, long e) { return a.pow(Integer(e)); }

// Accumulated parametrization state along one recursion path:
//   x_orig = lambda * T^e,  y_orig = sum terms + scale * T^gamma * y_cur,
// everything expressed in the current local variable T and the current field.
struct RecState {
    FqCtxPtr field;
    long base_k;  // degree of the input's coefficient field over F_p
    long e = 1;
    FqElement lambda;
    std::vector<std::pair<long, FqElement>> terms;
    FqElement scale;
    long gamma = 0;
    FqElement base_gen;  // image of the input field generator

    explicit RecState(const FqCtxPtr& ctx)
        : field(ctx),
          base_k(ctx->k),
          lambda(fq_one(ctx)),
          scale(fq_one(ctx)),
          base_gen(fq_gen_pow(ctx, std::min(1, ctx->k - 1))) {}

    long fdeg() const { return field->k / base_k; }

    void embed(const FqEmbedding& emb) {
        if (emb.trivial()) return;
        field = emb.to;
        lambda = emb.apply(lambda);
        scale = emb.apply(scale);
        base_gen = emb.apply(base_gen);
        for (auto& [n, b] : terms) b = emb.apply(b);
    }

    // Apply the substitution x = xi^v x'^q, y = x^m (xi^u + y').
    void descend(long q, long m, const FqElement& xi, long u, long v) {
        FqElement xiv = elem_pow_long(xi, v);
        lambda = lambda * elem_pow_long(xiv, e);
        e *= q;
        for (auto& [n, b] : terms) {
            b = b * elem_pow_long(xiv, n);
            n *= q;
        }
        scale = scale * elem_pow_long(xiv, gamma);
        gamma = q * gamma + m;
        terms.emplace_back(gamma, scale * elem_pow_long(xi, u));
    }
};

struct EmitCtx {
    std::vector<PuiseuxExpansion>* out;
    std::optional<long> trunc;  // nullopt: singular parts only
    RnpOptions opts;
    long depth_bound;
};

void emit_place(const RecState& st, std::vector<std::pair<long, FqElement>> extra, long trunc_val,
                EmitCtx& em) {
    PuiseuxExpansion ex;
    ex.field = st.field;
    ex.lambda = st.lambda;
    ex.e = st.e;
    ex.f = st.fdeg();
    ex.terms = st.terms;
    for (auto& t : extra) ex.terms.push_back(std::move(t));
    ex.trunc = trunc_val;
    ex.base_gen = st.base_gen;
    em.out->push_back(std::move(ex));
}

// Series root of F above a simple root at the origin: quadratic Newton
// lifting, doubling the correct order each step.
UP newton_series_root(const BP& f, long prec) {
    const FqField& k = f.k;
    UP y = UP::zero(k);
    long cur = 1;
    while (cur < prec) {
        long next = std::min(2 * cur, prec);
        UP val = eval_y_trunc(f, y, next);
        if (!val.is_zero() && val_x(val) < cur)
            throw InternalError("newton lifting: residual valuation did not double");
        UP der = eval_y_trunc(derivative_y(f), y, next);
        y = trunc(y - mul_trunc(val, inv_series(der, next), next), next);
        cur = next;
    }
    UP final_val = eval_y_trunc(f, y, prec);
    if (!final_val.is_zero() && val_x(final_val) < prec)
        throw InternalError("newton lifting: solution check failed");
    return y;
}

void recurse(const BP& f, RecState st, bool first, Rng& rng, EmitCtx& em, long depth) {
    if (depth > em.depth_bound)
        throw InternalError("rnpuiseux: depth guard exceeded (non-terminating recursion?)");

    BP g = f;
    long c = y_content(f);
    if (c >= 1) {
        // y = 0 solves the transformed equation: the accumulated terms are an
        // exact root of the input.
        emit_place(st, {}, em.trunc ? *em.trunc : st.gamma + 1, em);
        g = divide_y_content(f, c);
    }
    if (g.degY() <= 0) return;

    auto np = newton_polygon(g);
    for (const Edge& e : np.edges) {
        if (!first && e.m == 0) continue;
        auto phi = characteristic_poly(g, e);
        auto factors = factor_fq(phi, rng);
        auto [u, v] = bezout_uv(e.q, e.m);
        for (const auto& [irr, mult] : factors.factors) {
            auto ext = extend_by_irreducible(g.k.ctx, irr, rng);
            RecState stnext = st;
            stnext.embed(ext.emb);
            stnext.descend(e.q, e.m, ext.xi, u, v);
            BP gm = ext.emb.apply(g);
            BP fnext = detail::edge_transform_impl(gm, e, ext.xi, u, v, em.opts.x_trunc_eta);

            const FqField& kn = fnext.k;
            bool regular = false;
            if (mult == 1) {
                bool at_origin = fnext.is_zero() || fnext.at(0).is_zero() ||
                                 kn.is_zero(fnext.at(0).at(0));
                bool simple = fnext.degY() >= 1 && !fnext.at(1).is_zero() &&
                              !kn.is_zero(fnext.at(1).at(0));
                regular = at_origin && simple;
                if (!regular && !em.opts.lift_guards)
                    throw InternalError("rnpuiseux: simple factor did not give a regular point");
            }
            if (regular) {
                if (em.trunc) {
                    if (*em.trunc <= stnext.gamma) throw TruncationTooSmall(stnext.gamma + 1);
                    long need = *em.trunc - stnext.gamma;
                    UP root = newton_series_root(fnext, need);
                    std::vector<std::pair<long, FqElement>> extra;
                    for (long i = 1; i <= root.deg(); ++i) {
                        FqElement coef = root.at(i);
                        if (!coef.is_zero())
                            extra.emplace_back(stnext.gamma + i, stnext.scale * coef);
                    }
                    emit_place(stnext, std::move(extra), *em.trunc, em);
                } else {
                    emit_place(stnext, {}, stnext.gamma + 1, em);
                }
            } else {
                recurse(fnext, std::move(stnext), false, rng, em, depth + 1);
            }
        }
    }
}

int exp_cmp(const PuiseuxExpansion& a, const PuiseuxExpansion& b) {
    if (a.e != b.e) return a.e < b.e ? -1 : 1;
    if (a.f != b.f) return a.f < b.f ? -1 : 1;
    long fa = a.terms.empty() ? std::numeric_limits<long>::max() : a.terms.front().first;
    long fb = b.terms.empty() ? std::numeric_limits<long>::max() : b.terms.front().first;
    if (fa != fb) return fa < fb ? -1 : 1;
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].first != b.terms[i].first)
            return a.terms[i].first < b.terms[i].first ? -1 : 1;
        int c = FqElement::cmp(a.terms[i].second, b.terms[i].second);
        if (c != 0) return c;
    }
    int c = FqElement::cmp(a.lambda, b.lambda);
    if (c != 0) return c;
    if (a.trunc != b.trunc) return a.trunc < b.trunc ? -1 : 1;
    return 0;
}

PlaceSet finish_placeset(Center center, std::vector<PuiseuxExpansion> exps) {
    std::sort(exps.begin(), exps.end(),
              [](const PuiseuxExpansion& a, const PuiseuxExpansion& b) { return exp_cmp(a, b) < 0; });
    PlaceSet ps;
    ps.center = std::move(center);
    ps.expansions = std::move(exps);
    for (const auto& ex : ps.expansions) {
        ps.conservation += ex.e * ex.f;
        ps.delta += ex.e * ex.f * std::max<long>(1, static_cast<long>(ex.terms.size()));
    }
    return ps;
}

// Shared entry guards; returns the recursion depth bound.
long check_input(const BP& f, const RnpOptions& opts) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (opts.lift_guards) return (f.degY() + 2) * (f.degX() + 2) + 8;
    if (f.degY() >= 1) {
        Integer p = f.k.ctx->p;
        if (p <= Integer(f.degY()))
            throw SmallCharacteristic("characteristic " + p.str() +
                                      " is not greater than deg_y = " +
                                      std::to_string(f.degY()));
        auto disc = discriminant_y(f);
        if (disc.is_zero()) throw NotSquarefree();
        return val_x(disc) + f.degY() + 4;
    }
    return 4;
}

// Branches the recursion will actually track above x = 0 (content plus the
// width covered by slope <= 0 edges).
long expected_conservation(const BP& f) {
    long c = y_content(f);
    BP g = c ? divide_y_content(f, c) : f;
    if (g.degY() <= 0) return c;
    auto np = newton_polygon(g);
    long covered = np.edges.empty() ? 0 : np.edges.back().j1;
    return c + covered;
}

// Run the recursion and check conservation when in contract.
std::vector<PuiseuxExpansion> run_expand(const BP& f, std::optional<long> trunc_order, Rng& rng,
                                         const RnpOptions& opts, long bound) {
    std::vector<PuiseuxExpansion> out;
    EmitCtx em{&out, trunc_order, opts, bound};
    recurse(f, RecState(f.k.ctx), true, rng, em, 0);
    if (!opts.lift_guards) {
        long total = 0;
        for (const auto& ex : out) total += ex.e * ex.f;
        if (total != expected_conservation(f))
            throw InternalError("rnpuiseux: conservation failed (sum e*f = " +
                                std::to_string(total) + ")");
    }
    return out;
}

}  // namespace

PlaceSet rnpuiseux(const BiPoly<FqField>& f, long trunc_order, Rng& rng, const RnpOptions& opts) {
    if (trunc_order < 1) throw InputError("rnpuiseux: trunc must be >= 1");
    long bound = check_input(f, opts);
    // Find the singular-part order first so a too-small truncation reports the
    // minimal sufficient value over all branches.
    {
        Rng probe = rng.fork(0x53494e47);
        std::vector<PuiseuxExpansion> sing;
        EmitCtx em{&sing, std::nullopt, opts, bound};
        recurse(f, RecState(f.k.ctx), true, probe, em, 0);
        long needed = 1;
        for (const auto& ex : sing) needed = std::max(needed, ex.trunc);
        if (trunc_order < needed) throw TruncationTooSmall(needed);
    }
    auto out = run_expand(f, trunc_order, rng, opts, bound);
    return finish_placeset(Center::at(fq_zero(f.k.ctx)), std::move(out));
}

PlaceSet singular_parts(const BiPoly<FqField>& f, Rng& rng, const RnpOptions& opts) {
    long bound = check_input(f, opts);
    auto out = run_expand(f, std::nullopt, rng, opts, bound);
    return finish_placeset(Center::at(fq_zero(f.k.ctx)), std::move(out));
}

PlaceSet places_above(const BiPoly<FqField>& f, const Center& center,
                      std::optional<long> trunc_order, Rng& rng, const RnpOptions& opts) {
    BP g = center.infinity ? invert_x(f) : shift_x(f, center.x0);
    long bound = check_input(g, opts);
    if (trunc_order && *trunc_order < 1) throw InputError("places_above: trunc must be >= 1");
    auto out = run_expand(g, trunc_order, rng, opts, bound);

    // Pole branches: valuation-positive roots of y^N F(x, 1/y), inverted back.
    if (val_x(g.cy.back()) != 0) {
        BP h = invert_y(g);
        std::vector<PuiseuxExpansion> wexp;
        EmitCtx emw{&wexp, trunc_order, opts, bound};
        recurse(h, RecState(h.k.ctx), false, rng, emw, 0);
        for (const auto& w : wexp) {
            if (w.terms.empty()) throw InternalError("places_above: pole branch with no terms");
            long vw = w.terms.front().first;
            // Y = 1/W with W = T^vw U, U a unit known mod T^{trunc - vw}, so Y
            // is determined mod T^{trunc - 2 vw}.
            FqField kw{w.field};
            long known = w.trunc - vw;
            std::vector<FqElement> uc(static_cast<std::size_t>(known), kw.zero());
            for (const auto& [n, b] : w.terms) uc[static_cast<std::size_t>(n - vw)] = b;
            UP unit(kw, std::move(uc));
            PuiseuxExpansion ex;
            ex.field = w.field;
            ex.lambda = w.lambda;
            ex.e = w.e;
            ex.f = w.f;
            ex.base_gen = w.base_gen;
            ex.trunc = w.trunc - 2 * vw;
            UP uinv = inv_series(unit, known);
            for (long i = 0; i <= uinv.deg(); ++i)
                if (!uinv.at(i).is_zero()) ex.terms.emplace_back(i - vw, uinv.at(i));
            out.push_back(std::move(ex));
        }
    }
    if (center.infinity)
        for (auto& ex : out) ex.lambda = ex.lambda.inv();
    PlaceSet ps = finish_placeset(center, std::move(out));
    if (!opts.lift_guards && ps.conservation != f.degY())
        throw InternalError("places_above: conservation with poles failed");
    return ps;
}

// ---------------------------------------------------------------------------
// Verification.

namespace {

// Truncated Laurent series: sum c_i T^{off+i}.
struct Laurent {
    FqField k;
    long off = 0;
    std::vector<FqElement> c;

    void normalize() {
        std::size_t lead = 0;
        while (lead < c.size() && c[lead].is_zero()) ++lead;
        if (lead) {
            c.erase(c.begin(), c.begin() + static_cast<long>(lead));
            off += static_cast<long>(lead);
        }
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

Laurent laurent_mul(const Laurent& a, const Laurent& b, long horizon) {
    Laurent r{a.k, a.off + b.off, {}};
    if (a.c.empty() || b.c.empty()) return r;
    long len = horizon - r.off;
    if (len <= 0) return r;
    len = std::min<long>(len, static_cast<long>(a.c.size() + b.c.size()) - 1);
    r.c.assign(static_cast<std::size_t>(len), a.k.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.k.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size() && i + j < r.c.size(); ++j)
            r.c[i + j] = a.k.add(r.c[i + j], a.k.mul(a.c[i], b.c[j]));
    }
    r.normalize();
    return r;
}

Laurent laurent_add(const Laurent& a, const Laurent& b) {
    if (a.c.empty()) return b;
    if (b.c.empty()) return a;
    long off = std::min(a.off, b.off);
    long top =
        std::max(a.off + static_cast<long>(a.c.size()), b.off + static_cast<long>(b.c.size()));
    Laurent r{a.k, off, std::vector<FqElement>(static_cast<std::size_t>(top - off), a.k.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r.c[static_cast<std::size_t>(a.off - off) + i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        auto idx = static_cast<std::size_t>(b.off - off) + i;
        r.c[idx] = a.k.add(r.c[idx], b.c[i]);
    }
    r.normalize();
    return r;
}

Laurent laurent_of_x(const FqField& k, const Center& center, const PuiseuxExpansion& exp,
                     const FqEmbedding& emb) {
    if (center.infinity) return Laurent{k, -exp.e, {exp.lambda}};
    Laurent lam{k, exp.e, {exp.lambda}};
    if (center.x0.is_zero()) return lam;
    return laurent_add(Laurent{k, 0, {emb.apply(center.x0)}}, lam);
}

}  // namespace

bool verify_expansion(const BiPoly<FqField>& f, const Center& center,
                      const PuiseuxExpansion& exp, long order) {
    FqField kx{exp.field};
    FqEmbedding emb = exp.embedding_from(f.k.ctx);
    BP fl = emb.apply(f);

    Laurent x_series = laurent_of_x(kx, center, exp, emb);
    Laurent y_series{kx, 0, {}};
    for (const auto& [n, b] : exp.terms) y_series = laurent_add(y_series, Laurent{kx, n, {b}});

    // All series here are finite (X exact, Y truncated), so the residual is
    // computed exactly; truncating intermediates would be unsound when Y has
    // negative valuation.
    const long horizon = std::numeric_limits<long>::max() / 4;
    Laurent acc{kx, 0, {}};
    for (std::size_t j = fl.cy.size(); j-- > 0;) {
        acc = laurent_mul(acc, y_series, horizon);
        Laurent col{kx, 0, {}};
        const auto& a = fl.cy[j];
        for (std::size_t i = a.c.size(); i-- > 0;) {
            col = laurent_mul(col, x_series, horizon);
            col = laurent_add(col, Laurent{kx, 0, {a.c[i]}});
        }
        acc = laurent_add(acc, col);
    }
    for (std::size_t i = 0; i < acc.c.size(); ++i)
        if (acc.off + static_cast<long>(i) < order && !acc.c[i].is_zero()) return false;
    return true;
}

long max_verifiable_order(const BiPoly<FqField>& f, const Center& center,
                          const PuiseuxExpansion& exp) {
    long vy = exp.terms.empty() ? 0 : std::min<long>(exp.terms.front().first, 0);
    FqField kx{exp.field};
    FqEmbedding emb = exp.embedding_from(f.k.ctx);
    long best = std::numeric_limits<long>::max();
    for (long j = 1; j <= f.degY(); ++j) {
        const auto& a = f.cy[static_cast<std::size_t>(j)];
        if (a.is_zero()) continue;
        long ord;
        if (center.infinity) {
            ord = -exp.e * a.deg();
        } else {
            // ord_T a_j(x0 + lambda T^e) = e * (multiplicity of x0 in a_j)
            UP al = emb.apply(a);
            UP lin(kx, {kx.neg(emb.apply(center.x0)), kx.one()});
            long mult = 0;
            while (true) {
                auto [q, r] = divrem(al, lin);
                if (!r.is_zero()) break;
                ++mult;
                al = q;
            }
            ord = exp.e * mult;
        }
        best = std::min(best, exp.trunc + (j - 1) * vy + ord);
    }
    if (best == std::numeric_limits<long>::max()) best = exp.trunc;
    return best;
}

std::string expansion_str(const Center& center, const PuiseuxExpansion& exp) {
    std::ostringstream os;
    os << "X(T) = ";
    if (center.infinity) {
        os << exp.lambda.str() << "*T^-" << exp.e;
    } else {
        if (!center.x0.is_zero()) os << center.x0.str() << " + ";
        os << exp.lambda.str() << "*T^" << exp.e;
    }
    os << ", Y(T) = ";
    if (exp.terms.empty()) os << "0";
    for (std::size_t i = 0; i < exp.terms.size(); ++i) {
        if (i) os << " + ";
        os << exp.terms[i].second.str() << "*T^" << exp.terms[i].first;
    }
    os << " + O(T^" << exp.trunc << ")  [e=" << exp.e << ", f=" << exp.f << "]";
    return os.str();
}

}  // namespace puiseux

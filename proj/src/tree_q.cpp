#include <algorithm>
#include <deque>

#include "puiseux/tree.hpp"

namespace puiseux {

namespace {

using DF = DynField;
using DP = UniPoly<DF>;
using DB = BiPoly<DF>;

const QQ kQ{};

DynElem dyn_const(const DF& s, const Rational& r) {
    return DynElem(s.ctx, UniPoly<QQ>::constant(kQ, r));
}

DB refine_bipoly(const DB& f, const DynCtxPtr& finer) {
    DF k{finer};
    std::vector<DP> cy;
    cy.reserve(f.cy.size());
    for (const auto& col : f.cy) {
        std::vector<DynElem> c;
        c.reserve(col.c.size());
        for (const auto& e : col.c) c.push_back(e.refine(finer));
        cy.emplace_back(k, std::move(c));
    }
    return DB(k, std::move(cy));
}

DB lift_bipoly(const BiPoly<QQ>& f, const DF& s) {
    std::vector<DP> cy;
    cy.reserve(f.cy.size());
    for (const auto& col : f.cy) {
        std::vector<DynElem> c;
        c.reserve(col.c.size());
        for (const auto& e : col.c) c.push_back(dyn_const(s, e));
        cy.emplace_back(s, std::move(c));
    }
    return DB(s, std::move(cy));
}

// coefficient-wise a(z) -> a(z_image) into the collapsed ring
DB map_bipoly(const DB& f, const DF& s, const DynElem& z_image) {
    std::vector<DP> cy;
    cy.reserve(f.cy.size());
    for (const auto& col : f.cy) {
        std::vector<DynElem> c;
        c.reserve(col.c.size());
        for (const auto& e : col.c) {
            DynElem acc = s.zero();
            const auto& rep = e.rep();
            for (std::size_t i = rep.c.size(); i-- > 0;)
                acc = acc * z_image + dyn_const(s, rep.c[i]);
            c.push_back(acc);
        }
        cy.emplace_back(s, std::move(c));
    }
    return DB(s, std::move(cy));
}

// part(z, w - c z) as a bivariate polynomial with x = w and y = z.
BiPoly<QQ> substitute_shift(const UniPoly<DF>& part, long c) {
    const long n = part.deg();
    long zmax = n;
    for (const auto& el : part.c) zmax = std::max(zmax, n + el.rep().deg());
    std::vector<std::vector<Rational>> acc(static_cast<std::size_t>(zmax) + 1,
                                           std::vector<Rational>(static_cast<std::size_t>(n) + 1,
                                                                 Rational(0)));
    for (long t = 0; t <= n; ++t) {
        const UniPoly<QQ>& rep = part.c[static_cast<std::size_t>(t)].rep();
        if (rep.is_zero()) continue;
        // (w - cz)^t = sum_s C(t,s) w^{t-s} (-c)^s z^s
        Rational binom(1);
        Rational negc(-c);
        Rational pw(1);
        for (long s = 0; s <= t; ++s) {
            Rational coef = binom * pw;
            for (long a = 0; a <= rep.deg(); ++a) {
                const Rational& pa = rep.c[static_cast<std::size_t>(a)];
                if (pa.is_zero()) continue;
                auto& slot = acc[static_cast<std::size_t>(a + s)][static_cast<std::size_t>(t - s)];
                slot = slot + coef * pa;
            }
            binom = binom * Rational(t - s) / Rational(s + 1);
            pw = pw * negc;
        }
    }
    std::vector<UniPoly<QQ>> cy;
    cy.reserve(acc.size());
    for (auto& row : acc) cy.emplace_back(kQ, std::move(row));
    return BiPoly<QQ>(kQ, std::move(cy));
}

// Characteristic polynomial of an element over Q: Res_w(H(w), z - a(w)).
UniPoly<QQ> element_charpoly(const DF& s, const DynElem& a) {
    const UniPoly<QQ>& h = s.ctx->h;
    std::vector<UniPoly<QQ>> acy;
    for (long j = 0; j <= h.deg(); ++j) acy.push_back(UniPoly<QQ>::constant(kQ, h.at(j)));
    BiPoly<QQ> hw(kQ, std::move(acy));
    const UniPoly<QQ>& rep = a.rep();
    std::vector<UniPoly<QQ>> bcy;
    bcy.push_back(UniPoly<QQ>(kQ, {-rep.at(0), Rational(1)}));  // z - rep_0
    for (long j = 1; j <= rep.deg(); ++j)
        bcy.push_back(UniPoly<QQ>::constant(kQ, -rep.at(j)));
    BiPoly<QQ> zw(kQ, std::move(bcy));
    return monic(resultant_y(hw, zw));
}

// Ring of a descent branch plus what is needed to refine the parent when the
// branch turns out to cover only part of the parent ring.
struct BranchCtx {
    bool owns_ring;            // false when the branch lives in the parent ring itself
    std::uint64_t parent_id;
    const UniPoly<QQ>* parent_h;
    DynElem z_image;           // image of the parent generator (owns_ring only)
};

PolygonTree node_dyn(const DF& k, const DB& f, bool first, long depth, long bound);

// Transform + subtree for one descent branch, forking on splits of the branch
// ring; splits of the parent ring propagate upward.
void child_forked(const DF& s, const DB& fmap, const DynElem& xi, const Edge& e, long u, long v,
                  const BranchCtx& bc, long depth, long bound,
                  std::vector<std::pair<PolygonTree::Weight, PolygonTree>>& out) {
    try {
        const long parent_deg = bc.parent_h->deg();
        if (bc.owns_ring && parent_deg >= 2) {
            // The component must cover the whole parent ring; otherwise the
            // parent node itself has distinguishable components and is rerun.
            UniPoly<QQ> cp = element_charpoly(s, bc.z_image);
            UniPoly<QQ> support = div_exact(cp, gcd_monic(cp, derivative(cp)));
            if (support.deg() < parent_deg)
                throw DynSplit{bc.parent_id, support, div_exact(*bc.parent_h, support)};
        }
        DB fnext = detail::edge_transform_impl(fmap, e, xi, u, v, std::nullopt);
        PolygonTree sub = node_dyn(s, fnext, false, depth, bound);
        out.emplace_back(PolygonTree::Weight(s.ctx->h.deg(), parent_deg), std::move(sub));
    } catch (const DynSplit& sp) {
        if (sp.ctx_id != s.ctx->id) throw;
        if (!bc.owns_ring) throw;  // the branch ring is the parent ring
        for (const auto& h : {sp.h1, sp.h2}) {
            DynCtxPtr fi = dyn_context(h);
            BranchCtx bci{bc.owns_ring, bc.parent_id, bc.parent_h, bc.z_image.refine(fi)};
            child_forked(DF{fi}, refine_bipoly(fmap, fi), xi.refine(fi), e, u, v, bci, depth,
                         bound, out);
        }
    }
}

// Adjoin a root of `part` to the coefficient ring of g and recurse through the
// edge transform. Appends one weighted subtree per surviving component.
void descend(const DF& k, const DB& g, const UniPoly<DF>& part, const Edge& e, long depth,
             long bound, std::vector<std::pair<PolygonTree::Weight, PolygonTree>>& out) {
    auto [u, v] = bezout_uv(e.q, e.m);
    const long n = part.deg();
    const long kdeg = k.ctx->h.deg();

    if (n == 1) {
        // root lives in the parent ring; splits there rerun the parent node
        DynElem xi = k.neg(part.c[0]);
        BranchCtx bc{false, k.ctx->id, &k.ctx->h, k.zero()};
        child_forked(k, g, xi, e, u, v, bc, depth, bound, out);
        return;
    }

    if (kdeg == 1) {
        // the ring is Q itself: the part's coefficients are rational constants
        std::vector<Rational> hc;
        hc.reserve(part.c.size());
        for (const auto& el : part.c) hc.push_back(el.rep().at(0));
        DynCtxPtr s = dyn_context(UniPoly<QQ>(kQ, std::move(hc)));
        DF sf{s};
        DynElem xi(s, UniPoly<QQ>::xpow(kQ, 1));
        DB fmap = map_bipoly(g, sf, sf.zero());  // coefficients are constants here
        BranchCtx bc{true, k.ctx->id, &k.ctx->h, sf.zero()};
        child_forked(sf, fmap, xi, e, u, v, bc, depth, bound, out);
        return;
    }

    // General collapse: a separating shift w = T + c z turns K[T]/(part) =
    // Q[z,T]/(h, part) into a single quotient Q[w]/(H).
    const UniPoly<QQ>& h = k.ctx->h;
    BiPoly<QQ> hz(kQ);
    {
        std::vector<UniPoly<QQ>> cy;
        for (long j = 0; j <= h.deg(); ++j) cy.push_back(UniPoly<QQ>::constant(kQ, h.at(j)));
        hz = BiPoly<QQ>(kQ, std::move(cy));
    }
    UniPoly<QQ> bigh(kQ);
    BiPoly<QQ> b(kQ);
    long cshift = 0;
    const long budget = kdeg * n * kdeg * n + 16;
    for (long c = 1; c <= budget; ++c) {
        b = substitute_shift(part, c);
        bigh = resultant_y(hz, b);
        if (bigh.deg() != kdeg * n) continue;
        if (gcd_monic(bigh, derivative(bigh)).deg() != 0) continue;
        cshift = c;
        break;
    }
    if (cshift == 0) throw InternalError("descend: no separating shift found");

    std::deque<DynCtxPtr> work;
    work.push_back(dyn_context(bigh));
    while (!work.empty()) {
        DynCtxPtr sc = work.front();
        work.pop_front();
        try {
            DF sf{sc};
            DynElem wbar(sc, UniPoly<QQ>::xpow(kQ, 1));
            // h(z) and part(z, w - c z) as z-polynomials over S
            std::vector<DynElem> hlift;
            for (long j = 0; j <= h.deg(); ++j) hlift.push_back(dyn_const(sf, h.at(j)));
            UniPoly<DF> hs(sf, std::move(hlift));
            std::vector<DynElem> glift;
            for (const auto& col : b.cy) {
                DynElem accv = sf.zero();
                for (std::size_t i = col.c.size(); i-- > 0;)
                    accv = accv * wbar + dyn_const(sf, col.c[i]);
                glift.push_back(accv);
            }
            UniPoly<DF> gs(sf, std::move(glift));
            UniPoly<DF> gz = gcd_monic(hs, gs);
            if (gz.deg() != 1) throw InternalError("descend: embedding gcd is not linear");
            DynElem zim = sf.neg(gz.c[0]);
            DynElem xi = wbar - dyn_const(sf, Rational(cshift)) * zim;
            DB fmap = map_bipoly(g, sf, zim);
            BranchCtx bc{true, k.ctx->id, &k.ctx->h, zim};
            child_forked(sf, fmap, xi, e, u, v, bc, depth, bound, out);
        } catch (const DynSplit& sp) {
            if (sp.ctx_id != sc->id) throw;
            work.push_back(dyn_context(sp.h1));
            work.push_back(dyn_context(sp.h2));
        }
    }
}

PolygonTree node_dyn(const DF& k, const DB& f, bool first, long depth, long bound) {
    if (depth > bound)
        throw InternalError("polygon_tree: depth guard exceeded (non-terminating recursion?)");
    PolygonTree t;
    t.content = y_content(f);
    DB g = t.content ? divide_y_content(f, t.content) : f;
    if (g.degY() <= 0) return t;

    auto np = newton_polygon(g);
    for (const Edge& e : np.edges) {
        if (!first && e.m == 0) continue;
        auto phi = characteristic_poly(g, e);
        auto sfd = squarefree_decomposition(phi);
        PolygonTree::EdgeNode en{e.q, e.m, e.l, {}, {}};
        for (const auto& [part, mult] : sfd.parts) en.profile.push_back({part.deg(), mult});
        std::sort(en.profile.begin(), en.profile.end());

        for (const auto& [part, mult] : sfd.parts) {
            if (mult < 2) continue;
            PolygonTree::ChildGroup grp{mult, {}};
            descend(k, g, part, e, depth + 1, bound, grp.sub);
            detail::canonicalize_group(grp);
            en.children.push_back(std::move(grp));
        }
        t.edges.push_back(std::move(en));
    }
    detail::sort_node(t);
    return t;
}

}  // namespace

PolygonTree polygon_tree_q(const BiPoly<QQ>& f, const TreeOptions& opts) {
    if (f.is_zero()) throw ZeroPolynomial();
    long bound;
    if (opts.check_squarefree && f.degY() >= 1) {
        auto disc = discriminant_y(f);
        if (disc.is_zero()) throw NotSquarefree();
        bound = detail::depth_guard_from_disc(val_x(disc), f.degY());
    } else {
        bound = detail::depth_guard_fallback(f.degY(), f.degX());
    }
    DF root{dyn_trivial()};
    return node_dyn(root, lift_bipoly(f, root), true, 0, bound);
}

}  // namespace puiseux

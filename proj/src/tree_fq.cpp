#include <algorithm>

#include "puiseux/fq_factor.hpp"
#include "puiseux/tree.hpp"

namespace puiseux {

namespace {

PolygonTree node_fq(const BiPoly<FqField>& f, bool first, Rng& rng, long depth, long bound) {
    if (depth > bound)
        throw InternalError("polygon_tree: depth guard exceeded (non-terminating recursion?)");
    PolygonTree t;
    t.content = y_content(f);
    BiPoly<FqField> g = t.content ? divide_y_content(f, t.content) : f;
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
            auto fl = factor_fq(part, rng);
            auto [u, v] = bezout_uv(e.q, e.m);
            for (const auto& [irr, m1] : fl.factors) {
                (void)m1;  // part is squarefree
                auto ext = extend_by_irreducible(g.k.ctx, irr, rng);
                BiPoly<FqField> gm = ext.emb.apply(g);
                BiPoly<FqField> fnext = detail::edge_transform_impl(gm, e, ext.xi, u, v, std::nullopt);
                grp.sub.emplace_back(PolygonTree::Weight(irr.deg(), 1),
                                     node_fq(fnext, false, rng, depth + 1, bound));
            }
            detail::canonicalize_group(grp);
            en.children.push_back(std::move(grp));
        }
        t.edges.push_back(std::move(en));
    }
    detail::sort_node(t);
    return t;
}

}  // namespace

PolygonTree polygon_tree_fq(const BiPoly<FqField>& f, Rng& rng, const TreeOptions& opts) {
    if (f.is_zero()) throw ZeroPolynomial();
    long bound;
    if (opts.check_squarefree && f.degY() >= 1) {
        auto disc = discriminant_y(f);
        if (disc.is_zero()) throw NotSquarefree();
        bound = detail::depth_guard_from_disc(val_x(disc), f.degY());
    } else {
        bound = detail::depth_guard_fallback(f.degY(), f.degX());
    }
    return node_fq(f, true, rng, 0, bound);
}

}  // namespace puiseux

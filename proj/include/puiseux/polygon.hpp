#ifndef PUISEUX_POLYGON_HPP
#define PUISEUX_POLYGON_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/bpoly.hpp"

namespace puiseux {

// Lower convex hull of the support, slope <= 0 edges only (branches with
// valuation >= 0). Edges are ordered by increasing j; jmin is the minimal
// support index (y-content degree when positive).
struct NewtonPolygon {
    std::vector<Edge> edges;
    long jmin = 0;
    long degy = 0;
};

// Hull from the valuation profile (v[j] = x-adic valuation of the y^j
// coefficient, nullopt for zero coefficients).
NewtonPolygon newton_polygon_from_valuations(const std::vector<std::optional<long>>& v);

template <class F>
NewtonPolygon newton_polygon(const BiPoly<F>& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    return newton_polygon_from_valuations(support_valuations(f));
}

// phi(T) = sum over support points on the edge of coeff(x^i y^j) T^{(j - j0)/q}.
template <class F>
UniPoly<F> characteristic_poly(const BiPoly<F>& f, const Edge& e) {
    std::vector<typename F::Elem> c;
    for (long j = e.j0, t = 0; j <= e.j1; j += e.q, ++t) {
        long xexp = (e.l - e.m * j) / e.q;
        c.push_back(f.at(j).at(xexp));
    }
    return UniPoly<F>(f.k, std::move(c));
}

// Static SVG figure: support points, hull edges, (q, m, l) labels.
std::string polygon_svg(const NewtonPolygon& np, const std::vector<std::optional<long>>& support);

}  // namespace puiseux

#endif

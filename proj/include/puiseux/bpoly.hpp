#ifndef PUISEUX_BPOLY_HPP
#define PUISEUX_BPOLY_HPP

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/fq.hpp"
#include "puiseux/qq.hpp"
#include "puiseux/upoly.hpp"

namespace puiseux {

// One Newton-polygon edge: slope -m/q in lowest terms,支持 line q*v + m*j = l,
// spanning y-degrees [j0, j1].
struct Edge {
    long q = 1;
    long m = 0;
    long l = 0;
    long j0 = 0;
    long j1 = 0;

    long width() const { return j1 - j0; }
    bool operator==(const Edge& o) const = default;
};

// Canonical Bezout pair: u*q - v*m = 1 with 0 <= v < q.
std::pair<long, long> bezout_uv(long q, long m);

// F(x, y) = sum_j cy[j](x) * y^j over the field object F.
template <class F>
struct BiPoly {
    using Elem = typename F::Elem;

    F k;
    std::vector<UniPoly<F>> cy;

    explicit BiPoly(const F& field) : k(field) {}
    BiPoly(const F& field, std::vector<UniPoly<F>> coeffs) : k(field), cy(std::move(coeffs)) {
        trim();
    }

    static BiPoly zero(const F& field) { return BiPoly(field); }

    long degY() const { return static_cast<long>(cy.size()) - 1; }
    long degX() const {
        long d = -1;
        for (const auto& a : cy) d = std::max(d, a.deg());
        return d;
    }
    bool is_zero() const { return cy.empty(); }

    UniPoly<F> at(long j) const {
        if (j < 0 || j >= static_cast<long>(cy.size())) return UniPoly<F>::zero(k);
        return cy[static_cast<std::size_t>(j)];
    }

    void trim() {
        while (!cy.empty() && cy.back().is_zero()) cy.pop_back();
    }
};

// x-adic valuation of the y^j coefficient; nullopt encodes +infinity.
template <class F>
std::optional<long> x_valuation(const BiPoly<F>& f, long j) {
    if (j < 0 || j > f.degY()) throw InputError("x_valuation: index out of range");
    long v = val_x(f.cy[static_cast<std::size_t>(j)]);
    if (v < 0) return std::nullopt;
    return v;
}

template <class F>
std::vector<std::optional<long>> support_valuations(const BiPoly<F>& f) {
    std::vector<std::optional<long>> v;
    v.reserve(f.cy.size());
    for (long j = 0; j <= f.degY(); ++j) v.push_back(x_valuation(f, j));
    return v;
}

template <class F>
BiPoly<F> operator+(const BiPoly<F>& a, const BiPoly<F>& b) {
    std::vector<UniPoly<F>> r;
    long n = std::max(a.degY(), b.degY());
    for (long j = 0; j <= n; ++j) r.push_back(a.at(j) + b.at(j));
    return BiPoly<F>(a.k, std::move(r));
}

template <class F>
BiPoly<F> operator-(const BiPoly<F>& a, const BiPoly<F>& b) {
    std::vector<UniPoly<F>> r;
    long n = std::max(a.degY(), b.degY());
    for (long j = 0; j <= n; ++j) r.push_back(a.at(j) - b.at(j));
    return BiPoly<F>(a.k, std::move(r));
}

template <class F>
BiPoly<F> operator*(const BiPoly<F>& a, const BiPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly<F>::zero(a.k);
    std::vector<UniPoly<F>> r(a.cy.size() + b.cy.size() - 1, UniPoly<F>::zero(a.k));
    for (std::size_t i = 0; i < a.cy.size(); ++i) {
        if (a.cy[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.cy.size(); ++j)
            r[i + j] = r[i + j] + a.cy[i] * b.cy[j];
    }
    return BiPoly<F>(a.k, std::move(r));
}

template <class F>
bool operator==(const BiPoly<F>& a, const BiPoly<F>& b) {
    if (a.cy.size() != b.cy.size()) return false;
    for (std::size_t i = 0; i < a.cy.size(); ++i)
        if (!(a.cy[i] == b.cy[i])) return false;
    return true;
}

template <class F>
BiPoly<F> derivative_y(const BiPoly<F>& f) {
    std::vector<UniPoly<F>> r;
    for (long j = 1; j <= f.degY(); ++j)
        r.push_back(scale(f.cy[static_cast<std::size_t>(j)], f.k.from_long(j)));
    return BiPoly<F>(f.k, std::move(r));
}

// F(x + x0, y).
template <class F>
BiPoly<F> shift_x(const BiPoly<F>& f, const typename F::Elem& x0) {
    std::vector<UniPoly<F>> r;
    UniPoly<F> lin(f.k, {x0, f.k.one()});  // x + x0
    for (const auto& a : f.cy) {
        UniPoly<F> acc = UniPoly<F>::zero(f.k);
        for (std::size_t i = a.c.size(); i-- > 0;)
            acc = acc * lin + UniPoly<F>::constant(f.k, a.c[i]);
        r.push_back(std::move(acc));
    }
    return BiPoly<F>(f.k, std::move(r));
}

// x^degX * F(1/x, y).
template <class F>
BiPoly<F> invert_x(const BiPoly<F>& f) {
    long dx = f.degX();
    std::vector<UniPoly<F>> r;
    for (const auto& a : f.cy) {
        std::vector<typename F::Elem> rc(static_cast<std::size_t>(dx) + 1, f.k.zero());
        for (long i = 0; i <= a.deg(); ++i)
            rc[static_cast<std::size_t>(dx - i)] = a.c[static_cast<std::size_t>(i)];
        r.emplace_back(f.k, std::move(rc));
    }
    return BiPoly<F>(f.k, std::move(r));
}

// y^degY * F(x, 1/y).
template <class F>
BiPoly<F> invert_y(const BiPoly<F>& f) {
    std::vector<UniPoly<F>> r(f.cy.rbegin(), f.cy.rend());
    return BiPoly<F>(f.k, std::move(r));
}

// y-degree of the y-content (largest c with y^c | F).
template <class F>
long y_content(const BiPoly<F>& f) {
    for (long j = 0; j <= f.degY(); ++j)
        if (!f.cy[static_cast<std::size_t>(j)].is_zero()) return j;
    return 0;
}

template <class F>
BiPoly<F> divide_y_content(const BiPoly<F>& f, long c) {
    std::vector<UniPoly<F>> r(f.cy.begin() + c, f.cy.end());
    return BiPoly<F>(f.k, std::move(r));
}

// Evaluate F(x, s(x)) mod x^prec for a truncated series s.
template <class F>
UniPoly<F> eval_y_trunc(const BiPoly<F>& f, const UniPoly<F>& s, long prec) {
    UniPoly<F> acc = UniPoly<F>::zero(f.k);
    for (std::size_t j = f.cy.size(); j-- > 0;)
        acc = mul_trunc(acc, s, prec) + trunc(f.cy[j], prec);
    return acc;
}

namespace detail {

// Shared implementation; accepts slope-0 edges (m = 0) for the first-level
// constant shifts the recursion needs.
template <class F>
BiPoly<F> edge_transform_impl(const BiPoly<F>& f, const Edge& e, const typename F::Elem& xi,
                              long u, long v, std::optional<long> eta) {
    const F& k = f.k;
    if (e.q < 1 || e.m < 0 || std::gcd(e.q, e.m) != 1)
        throw InputError("edge_transform: invalid edge data");
    if (u * e.q - v * e.m != 1) throw InputError("edge_transform: (u, v) is not a Bezout pair");
    if (k.is_zero(xi)) throw InputError("edge_transform: xi must be nonzero");
    std::optional<long> cap;
    if (eta) cap = *eta + e.l;

    const typename F::Elem xi_u = [&] {
        typename F::Elem r = k.one();
        for (long i = 0; i < u; ++i) r = k.mul(r, xi);
        return r;
    }();
    const typename F::Elem xi_v = [&] {
        typename F::Elem r = k.one();
        for (long i = 0; i < v; ++i) r = k.mul(r, xi);
        return r;
    }();

    BiPoly<F> acc = BiPoly<F>::zero(k);
    for (long j = f.degY(); j >= 0; --j) {
        // acc <- acc * (xi^u + y)
        if (!acc.is_zero()) {
            std::vector<UniPoly<F>> next(acc.cy.size() + 1, UniPoly<F>::zero(k));
            for (std::size_t t = 0; t < acc.cy.size(); ++t) {
                next[t] = next[t] + scale(acc.cy[t], xi_u);
                next[t + 1] = acc.cy[t];
            }
            acc = BiPoly<F>(k, std::move(next));
        }
        // acc <- acc + a_j(xi^v x^q) x^{m j}
        const UniPoly<F>& aj = f.cy[static_cast<std::size_t>(j)];
        if (!aj.is_zero()) {
            std::vector<typename F::Elem> pc(
                static_cast<std::size_t>(e.q * aj.deg() + e.m * j) + 1, k.zero());
            typename F::Elem xp = k.one();  // (xi^v)^i
            for (long i = 0; i <= aj.deg(); ++i) {
                long ex = e.q * i + e.m * j;
                if (!cap || ex < *cap)
                    pc[static_cast<std::size_t>(ex)] =
                        k.mul(aj.c[static_cast<std::size_t>(i)], xp);
                xp = k.mul(xp, xi_v);
            }
            UniPoly<F> pj(k, std::move(pc));
            if (acc.is_zero()) acc = BiPoly<F>(k, {std::move(pj)});
            else acc.cy[0] = acc.cy[0] + pj;
        }
        if (cap)
            for (auto& col : acc.cy) col = trunc(col, *cap);
        acc.trim();
    }

    // exact division by x^l
    std::vector<UniPoly<F>> out;
    out.reserve(acc.cy.size());
    for (auto& col : acc.cy) {
        for (long i = 0; i < e.l && i <= col.deg(); ++i)
            if (!k.is_zero(col.c[static_cast<std::size_t>(i)]))
                throw NonExactDivision("edge_transform: x^l does not divide the substitution");
        std::vector<typename F::Elem> shifted;
        for (long i = e.l; i <= col.deg(); ++i)
            shifted.push_back(col.c[static_cast<std::size_t>(i)]);
        out.emplace_back(k, std::move(shifted));
    }
    return BiPoly<F>(k, std::move(out));
}

}  // namespace detail

// F(xi^v * x^q, x^m * (xi^u + y)) / x^l for an edge of negative slope. The
// division is exact for genuine polygon edges; anything else is an internal
// fault. x-degrees >= eta are dropped when eta is set (truncated benchmark
// mode). Slope-0 edges are outside the contract: the recursion handles those
// as plain shifts.
template <class F>
BiPoly<F> edge_transform(const BiPoly<F>& f, const Edge& e, const typename F::Elem& xi,
                         long u, long v, std::optional<long> eta = std::nullopt) {
    if (e.m < 1) throw InputError("edge_transform: slope-0 edge (m = 0) is not a recursion step");
    return detail::edge_transform_impl(f, e, xi, u, v, eta);
}

// ---------------------------------------------------------------------------
// Resultants in y by evaluation-interpolation.

namespace detail {

// Resultant of univariate polynomials over a field, by monic Euclid with the
// classical degree/sign corrections.
template <class F>
typename F::Elem resultant_univ(const F& k, UniPoly<F> a, UniPoly<F> b) {
    long n = a.deg(), m = b.deg();
    if (n < 0 || m < 0) return k.zero();
    if (n == 0 && m == 0) return k.one();
    typename F::Elem sign = k.one();
    if (n < m) {
        std::swap(a, b);
        std::swap(n, m);
        if ((n & 1L) && (m & 1L)) sign = k.neg(sign);
    }
    typename F::Elem acc = sign;
    while (true) {
        if (m == 0) {
            // Res(a, const) = const^deg a
            typename F::Elem c = b.c[0], p = k.one();
            for (long i = 0; i < n; ++i) p = k.mul(p, c);
            return k.mul(acc, p);
        }
        UniPoly<F> r = divrem(a, b).second;
        if (r.is_zero()) return k.zero();
        long rdeg = r.deg();
        // Res(a, b) = (-1)^{nm} lc(b)^{n - deg r} Res(b, r)
        if ((n & 1L) && (m & 1L)) acc = k.neg(acc);
        typename F::Elem cpow = k.one();
        for (long i = 0; i < n - rdeg; ++i) cpow = k.mul(cpow, b.lc());
        acc = k.mul(acc, cpow);
        a = std::move(b);
        b = std::move(r);
        n = m;
        m = rdeg;
    }
}

struct NodesExhausted {};

// Shared evaluation-interpolation core; Nodes() yields candidate evaluation
// points and throws NodesExhausted when the field is too small.
template <class F, class Nodes>
UniPoly<F> resultant_y_interp(const BiPoly<F>& a, const BiPoly<F>& b, Nodes&& next_node) {
    const F& k = a.k;
    const long bound = a.degX() * b.degY() + b.degX() * a.degY() + 1;
    const UniPoly<F>& lca = a.cy.back();
    const UniPoly<F>& lcb = b.cy.back();
    std::vector<typename F::Elem> xs, ys;
    while (static_cast<long>(xs.size()) < bound) {
        typename F::Elem x0 = next_node();
        if (k.is_zero(eval(lca, x0)) || k.is_zero(eval(lcb, x0))) continue;
        UniPoly<F> av(k), bv(k);
        for (const auto& col : a.cy) av.c.push_back(eval(col, x0));
        av.trim();
        for (const auto& col : b.cy) bv.c.push_back(eval(col, x0));
        bv.trim();
        xs.push_back(x0);
        ys.push_back(resultant_univ(k, av, bv));
    }
    // Newton divided differences, then expansion to the monomial basis. With
    // consecutively enumerated nodes the denominators repeat along a level, so
    // the last inverse is memoized.
    std::vector<typename F::Elem> dd = ys;
    for (std::size_t j = 1; j < dd.size(); ++j) {
        typename F::Elem last_d = k.zero();
        typename F::Elem last_inv = k.zero();
        bool have = false;
        for (std::size_t i = dd.size(); i-- > j;) {
            typename F::Elem d = k.sub(xs[i], xs[i - j]);
            if (!have || !k.eq(d, last_d)) {
                last_inv = k.inv(d);
                last_d = d;
                have = true;
            }
            dd[i] = k.mul(k.sub(dd[i], dd[i - 1]), last_inv);
        }
    }
    UniPoly<F> r = UniPoly<F>::zero(k);
    for (std::size_t i = dd.size(); i-- > 0;) {
        UniPoly<F> lin(k, {k.neg(xs[i]), k.one()});
        r = r * lin + UniPoly<F>::constant(k, dd[i]);
    }
    return r;
}

}  // namespace detail

// Res_y(A, B) over Q: integer evaluation nodes, always enough of them.
UniPoly<QQ> resultant_y(const BiPoly<QQ>& a, const BiPoly<QQ>& b);

// Res_y(A, B) over F_q; transparently moves to an extension field when q is
// smaller than the interpolation bound. Declared here, defined in fq_factor.
UniPoly<FqField> resultant_y(const BiPoly<FqField>& a, const BiPoly<FqField>& b);

// disc_y(F) = (-1)^{N(N-1)/2} Res_y(F, dF/dy) / lc_y(F).
template <class F>
UniPoly<F> discriminant_y(const BiPoly<F>& f) {
    if (f.degY() < 1) throw InputError("discriminant_y needs deg_y >= 1");
    if (f.degY() == 1) return UniPoly<F>::one(f.k);
    UniPoly<F> res = resultant_y(f, derivative_y(f));
    UniPoly<F> d = div_exact(res, f.cy.back());
    long n = f.degY();
    if (((n * (n - 1)) / 2) & 1L) d = -d;
    return d;
}

// ---------------------------------------------------------------------------
// Reduction mod p and denominator bookkeeping.

// Coefficient-wise num * den^{-1} mod p; throws BadPrimeDenominator when p
// divides a denominator.
BiPoly<FqField> reduce_mod_p(const BiPoly<QQ>& f, const FqCtxPtr& ctx);

// lcm of all coefficient denominators.
Integer denominator_lcm(const BiPoly<QQ>& f);

// f scaled by denominator_lcm: integer coefficients (denominator 1).
BiPoly<QQ> clear_denominators(const BiPoly<QQ>& f);

template <class F>
std::string bipoly_str(const BiPoly<F>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t j = f.cy.size(); j-- > 0;) {
        const auto& col = f.cy[j];
        for (std::size_t i = col.c.size(); i-- > 0;) {
            if (f.k.is_zero(col.c[i])) continue;
            std::string coef = f.k.str(col.c[i]);
            bool negative = !coef.empty() && coef[0] == '-';
            if (negative) coef = coef.substr(1);
            if (s.empty()) s += negative ? "-" : "";
            else s += negative ? " - " : " + ";
            if (coef.find('/') != std::string::npos) coef = "(" + coef + ")";
            bool unit_coef = coef == "1" && (i > 0 || j > 0);
            if (!unit_coef) s += coef;
            if (i > 0) {
                if (!unit_coef) s += "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
            if (j > 0) {
                if (i > 0 || !unit_coef) s += "*";
                s += "y";
                if (j > 1) s += "^" + std::to_string(j);
            }
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace puiseux

#endif

#ifndef PUISEUX_UPOLY_HPP
#define PUISEUX_UPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/errors.hpp"
#include "puiseux/integer.hpp"

namespace puiseux {

// Dense univariate polynomial over a field object F.
//
// F supplies: Elem, zero/one/from_long, add/sub/mul/neg/inv, is_zero/eq,
// characteristic, pth_root. Over dynamic-evaluation rings the zero test and
// inversion may throw a split; every routine here is written to be restartable
// (pure functions of immutable inputs), which is what makes that protocol
// sound.
template <class F>
struct UniPoly {
    using Elem = typename F::Elem;

    F k;
    std::vector<Elem> c;  // c[i] multiplies x^i; no zero leading coeff

    explicit UniPoly(const F& field) : k(field) {}
    UniPoly(const F& field, std::vector<Elem> coeffs) : k(field), c(std::move(coeffs)) { trim(); }

    static UniPoly zero(const F& field) { return UniPoly(field); }
    static UniPoly one(const F& field) { return UniPoly(field, {field.one()}); }
    static UniPoly xpow(const F& field, long n) {
        std::vector<Elem> v(static_cast<std::size_t>(n) + 1, field.zero());
        v.back() = field.one();
        return UniPoly(field, std::move(v));
    }
    static UniPoly constant(const F& field, const Elem& e) { return UniPoly(field, {e}); }

    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && k.eq(c[0], k.one()); }
    const Elem& lc() const { return c.back(); }
    Elem at(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return k.zero();
        return c[static_cast<std::size_t>(i)];
    }

    void trim() {
        while (!c.empty() && k.is_zero(c.back())) c.pop_back();
    }
};

template <class F>
UniPoly<F> operator+(const UniPoly<F>& a, const UniPoly<F>& b) {
    std::vector<typename F::Elem> r(std::max(a.c.size(), b.c.size()), a.k.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size() && i < b.c.size()) r[i] = a.k.add(a.c[i], b.c[i]);
        else if (i < a.c.size()) r[i] = a.c[i];
        else r[i] = b.c[i];
    }
    return UniPoly<F>(a.k, std::move(r));
}

template <class F>
UniPoly<F> operator-(const UniPoly<F>& a, const UniPoly<F>& b) {
    std::vector<typename F::Elem> r(std::max(a.c.size(), b.c.size()), a.k.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        typename F::Elem x = i < a.c.size() ? a.c[i] : a.k.zero();
        typename F::Elem y = i < b.c.size() ? b.c[i] : a.k.zero();
        r[i] = a.k.sub(x, y);
    }
    return UniPoly<F>(a.k, std::move(r));
}

template <class F>
UniPoly<F> operator-(const UniPoly<F>& a) {
    std::vector<typename F::Elem> r;
    r.reserve(a.c.size());
    for (const auto& x : a.c) r.push_back(a.k.neg(x));
    return UniPoly<F>(a.k, std::move(r));
}

template <class F>
UniPoly<F> operator*(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<F>::zero(a.k);
    std::vector<typename F::Elem> r(a.c.size() + b.c.size() - 1, a.k.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = a.k.add(r[i + j], a.k.mul(a.c[i], b.c[j]));
    return UniPoly<F>(a.k, std::move(r));
}

template <class F>
bool operator==(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!a.k.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class F>
UniPoly<F> scale(const UniPoly<F>& a, const typename F::Elem& s) {
    std::vector<typename F::Elem> r;
    r.reserve(a.c.size());
    for (const auto& x : a.c) r.push_back(a.k.mul(x, s));
    return UniPoly<F>(a.k, std::move(r));
}

template <class F>
UniPoly<F> shift_up(const UniPoly<F>& a, long n) {  // multiply by x^n
    if (a.is_zero()) return a;
    std::vector<typename F::Elem> r(static_cast<std::size_t>(n), a.k.zero());
    r.insert(r.end(), a.c.begin(), a.c.end());
    return UniPoly<F>(a.k, std::move(r));
}

// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divrem(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    const F& k = a.k;
    if (a.deg() < b.deg()) return {UniPoly<F>::zero(k), a};
    typename F::Elem lcinv = k.inv(b.lc());
    std::vector<typename F::Elem> rem = a.c;
    std::vector<typename F::Elem> quo(a.c.size() - b.c.size() + 1, k.zero());
    for (long i = a.deg(); i >= b.deg(); --i) {
        typename F::Elem coef = rem[static_cast<std::size_t>(i)];
        if (k.is_zero(coef)) continue;
        typename F::Elem q = k.mul(coef, lcinv);
        quo[static_cast<std::size_t>(i - b.deg())] = q;
        for (long j = 0; j <= b.deg(); ++j) {
            auto idx = static_cast<std::size_t>(i - b.deg() + j);
            rem[idx] = k.sub(rem[idx], k.mul(q, b.c[static_cast<std::size_t>(j)]));
        }
    }
    return {UniPoly<F>(k, std::move(quo)), UniPoly<F>(k, std::move(rem))};
}

// Exact quotient; throws InternalError when the division leaves a remainder.
template <class F>
UniPoly<F> div_exact(const UniPoly<F>& a, const UniPoly<F>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InternalError("div_exact: nonzero remainder");
    return q;
}

template <class F>
typename F::Elem eval(const UniPoly<F>& a, const typename F::Elem& x) {
    typename F::Elem acc = a.k.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = a.k.add(a.k.mul(acc, x), a.c[i]);
    return acc;
}

template <class F>
UniPoly<F> derivative(const UniPoly<F>& a) {
    if (a.c.size() <= 1) return UniPoly<F>::zero(a.k);
    std::vector<typename F::Elem> r(a.c.size() - 1, a.k.zero());
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r[i - 1] = a.k.mul(a.c[i], a.k.from_long(static_cast<long>(i)));
    return UniPoly<F>(a.k, std::move(r));
}

template <class F>
UniPoly<F> monic(const UniPoly<F>& a) {
    if (a.is_zero()) return a;
    if (a.k.eq(a.lc(), a.k.one())) return a;
    return scale(a, a.k.inv(a.lc()));
}

// Monic gcd; (0, 0) is rejected.
template <class F>
UniPoly<F> gcd_monic(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw InputError("gcd(0, 0) undefined");
    UniPoly<F> r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        (void)q;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return monic(r0);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
std::tuple<UniPoly<F>, UniPoly<F>, UniPoly<F>> ext_gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
    const F& k = a.k;
    UniPoly<F> r0 = a, r1 = b;
    UniPoly<F> s0 = UniPoly<F>::one(k), s1 = UniPoly<F>::zero(k);
    UniPoly<F> t0 = UniPoly<F>::zero(k), t1 = UniPoly<F>::one(k);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UniPoly<F> s2 = s0 - q * s1;
        UniPoly<F> t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) throw InputError("ext_gcd(0, 0) undefined");
    if (!k.eq(r0.lc(), k.one())) {
        typename F::Elem u = k.inv(r0.lc());
        r0 = scale(r0, u);
        s0 = scale(s0, u);
        t0 = scale(t0, u);
    }
    return {r0, s0, t0};
}

template <class F>
UniPoly<F> pow_ui(const UniPoly<F>& a, unsigned long e) {
    UniPoly<F> acc = UniPoly<F>::one(a.k);
    UniPoly<F> base = a;
    while (e) {
        if (e & 1UL) acc = acc * base;
        e >>= 1UL;
        if (e) base = base * base;
    }
    return acc;
}

// a^e mod m (m nonzero), exponent an arbitrary-precision integer.
template <class F>
UniPoly<F> powmod(const UniPoly<F>& a, const Integer& e, const UniPoly<F>& m) {
    UniPoly<F> acc = UniPoly<F>::one(a.k);
    UniPoly<F> base = divrem(a, m).second;
    Integer n = e;
    while (!n.is_zero()) {
        if (n.is_odd()) acc = divrem(acc * base, m).second;
        n = n / Integer(2);
        if (!n.is_zero()) base = divrem(base * base, m).second;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Truncated power-series helpers (used by the Newton lifting phase).

template <class F>
UniPoly<F> trunc(const UniPoly<F>& a, long n) {
    if (n <= 0) return UniPoly<F>::zero(a.k);
    if (a.deg() < n) return a;
    std::vector<typename F::Elem> r(a.c.begin(), a.c.begin() + n);
    return UniPoly<F>(a.k, std::move(r));
}

template <class F>
UniPoly<F> mul_trunc(const UniPoly<F>& a, const UniPoly<F>& b, long n) {
    if (a.is_zero() || b.is_zero() || n <= 0) return UniPoly<F>::zero(a.k);
    std::size_t bound = std::min<std::size_t>(a.c.size() + b.c.size() - 1, static_cast<std::size_t>(n));
    std::vector<typename F::Elem> r(bound, a.k.zero());
    for (std::size_t i = 0; i < a.c.size() && i < bound; ++i) {
        if (a.k.is_zero(a.c[i])) continue;
        std::size_t jmax = std::min(b.c.size(), bound - i);
        for (std::size_t j = 0; j < jmax; ++j)
            r[i + j] = a.k.add(r[i + j], a.k.mul(a.c[i], b.c[j]));
    }
    return UniPoly<F>(a.k, std::move(r));
}

// Inverse of a mod x^n; a(0) must be invertible.
template <class F>
UniPoly<F> inv_series(const UniPoly<F>& a, long n) {
    if (a.is_zero() || a.k.is_zero(a.c[0])) throw ZeroInversion();
    UniPoly<F> b = UniPoly<F>::constant(a.k, a.k.inv(a.c[0]));
    long prec = 1;
    const UniPoly<F> two = UniPoly<F>::constant(a.k, a.k.from_long(2));
    while (prec < n) {
        prec = std::min(2 * prec, n);
        UniPoly<F> t = mul_trunc(a, b, prec);
        b = trunc(two * b - mul_trunc(t, b, prec), prec);
    }
    return b;
}

// x-adic valuation; -1 encodes +infinity (zero polynomial).
template <class F>
long val_x(const UniPoly<F>& a) {
    if (a.is_zero()) return -1;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!a.k.is_zero(a.c[i])) return static_cast<long>(i);
    return -1;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition.

template <class F>
struct SquarefreeDecomposition {
    typename F::Elem unit;
    std::vector<std::pair<UniPoly<F>, long>> parts;  // (monic squarefree, multiplicity)
};

namespace detail {

template <class F>
void sfd_char0(const UniPoly<F>& f, std::vector<std::pair<UniPoly<F>, long>>& out) {
    // Yun's algorithm; f monic.
    UniPoly<F> fd = derivative(f);
    UniPoly<F> u = gcd_monic(f, fd);
    UniPoly<F> v = div_exact(f, u);
    UniPoly<F> w = div_exact(fd, u);
    long i = 1;
    while (v.deg() > 0) {
        UniPoly<F> h = gcd_monic(v, w - derivative(v));
        UniPoly<F> wnext = div_exact(w - derivative(v), h);
        v = div_exact(v, h);
        w = std::move(wnext);
        if (h.deg() > 0) out.emplace_back(std::move(h), i);
        ++i;
    }
}

template <class F>
UniPoly<F> pth_root_poly(const UniPoly<F>& f, long p) {
    std::vector<typename F::Elem> r;
    for (long i = 0; i <= f.deg(); i += p) r.push_back(f.k.pth_root(f.at(i)));
    return UniPoly<F>(f.k, std::move(r));
}

template <class F>
void sfd_charp(const UniPoly<F>& f, std::vector<std::pair<UniPoly<F>, long>>& out, long mult_scale) {
    // Musser's algorithm with p-th root descent; f monic, char p > 0.
    const Integer p = f.k.characteristic();
    UniPoly<F> fd = derivative(f);
    UniPoly<F> c = fd.is_zero() ? f : gcd_monic(f, fd);
    UniPoly<F> w = div_exact(f, c);
    long i = 1;
    while (w.deg() > 0) {
        UniPoly<F> y = gcd_monic(w, c);
        UniPoly<F> fac = div_exact(w, y);
        if (fac.deg() > 0) out.emplace_back(std::move(fac), i * mult_scale);
        c = div_exact(c, y);
        w = std::move(y);
        ++i;
    }
    if (c.deg() > 0) {
        // c is a p-th power: recurse on its p-th root.
        if (!p.fits_long() || c.deg() < p.to_long())
            throw InternalError("squarefree: residual not a p-th power");
        UniPoly<F> root = pth_root_poly(c, p.to_long());
        sfd_charp(root, out, mult_scale * p.to_long());
    }
}

}  // namespace detail

template <class F>
SquarefreeDecomposition<F> squarefree_decomposition(const UniPoly<F>& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    SquarefreeDecomposition<F> out{f.lc(), {}};
    if (f.deg() == 0) return out;
    UniPoly<F> g = monic(f);
    if (f.k.characteristic().is_zero()) detail::sfd_char0(g, out.parts);
    else detail::sfd_charp(g, out.parts, 1);
    std::sort(out.parts.begin(), out.parts.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

template <class F>
std::string poly_str(const UniPoly<F>& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.k.is_zero(a.c[i])) continue;
        if (!s.empty()) s += " + ";
        s += a.k.str(a.c[i]);
        if (i >= 1) s += "*" + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace puiseux

#endif

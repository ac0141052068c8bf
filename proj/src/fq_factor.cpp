#include "puiseux/fq_factor.hpp"

#include <algorithm>
#include <map>

namespace puiseux {

namespace {

using UP = UniPoly<FqField>;

Integer field_cardinality(const FqCtxPtr& ctx) { return ctx->cardinality(); }

// x^(q^j) mod f for j = 1.., advanced one Frobenius step at a time.
UP frobenius_step(const UP& h, const Integer& q, const UP& f) { return powmod(h, q, f); }

long mulcmp(const UP& a, const UP& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (long i = a.deg(); i >= 0; --i) {
        int c = FqElement::cmp(a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

// Equal-degree splitting: g monic squarefree, all factors of degree d.
void split_equal_degree(const UP& g, long d, Rng& rng, std::vector<UP>& out) {
    const FqField& k = g.k;
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    const Integer p = k.ctx->p;
    const Integer q = field_cardinality(k.ctx);
    const long budget = 64 * g.deg();
    for (long attempt = 0; attempt < budget; ++attempt) {
        std::vector<FqElement> rc;
        for (long i = 0; i < g.deg(); ++i) rc.push_back(fq_random(k.ctx, rng));
        UP a(k, std::move(rc));
        if (a.deg() < 1) continue;
        UP b(k);
        if (p == Integer(2)) {
            // trace map sum_{i<kd} a^{2^i} mod g
            long bits = k.ctx->k * d;
            UP t = divrem(a, g).second;
            UP acc = t;
            for (long i = 1; i < bits; ++i) {
                t = powmod(t, Integer(2), g);
                acc = acc + t;
            }
            b = acc;
        } else {
            // a^((q^d - 1)/2) - 1 mod g
            Integer e(1);
            for (long i = 0; i < d; ++i) e = e * q;
            e = (e - Integer(1)) / Integer(2);
            b = powmod(a, e, g) - UP::one(k);
        }
        if (b.is_zero()) continue;
        UP h = gcd_monic(b, g);
        if (h.deg() <= 0 || h.deg() >= g.deg()) continue;
        split_equal_degree(h, d, rng, out);
        split_equal_degree(div_exact(g, h), d, rng, out);
        return;
    }
    throw InternalError("equal-degree splitting: retry budget exhausted");
}

// Distinct-degree on monic squarefree input: pairs (product of factors, d).
std::vector<std::pair<UP, long>> distinct_degree(const UP& f) {
    const FqField& k = f.k;
    const Integer q = field_cardinality(k.ctx);
    std::vector<std::pair<UP, long>> out;
    UP rem = f;
    UP h = divrem(UP::xpow(k, 1), rem).second;
    long d = 0;
    while (rem.deg() > 0 && 2 * (d + 1) <= rem.deg()) {
        ++d;
        h = frobenius_step(h, q, rem);
        UP g = gcd_monic(h - UP::xpow(k, 1), rem);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            rem = div_exact(rem, g);
            h = divrem(h, rem).second;
        }
    }
    if (rem.deg() > 0) out.emplace_back(rem, rem.deg());
    return out;
}

}  // namespace

FactorList factor_fq(const UniPoly<FqField>& f, Rng& rng) {
    if (f.is_zero()) throw ZeroPolynomial();
    FactorList out{f.lc(), {}};
    if (f.deg() == 0) return out;
    auto sfd = squarefree_decomposition(f);
    for (const auto& [part, mult] : sfd.parts) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<UP> irr;
            split_equal_degree(prod, d, rng, irr);
            for (auto& g : irr) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return mulcmp(a.first, b.first) < 0;
    });
    return out;
}

std::vector<std::pair<FqElement, long>> roots_in_field(const UniPoly<FqField>& f, Rng& rng) {
    if (f.is_zero()) throw ZeroPolynomial();
    const FqField& k = f.k;
    std::vector<std::pair<FqElement, long>> out;
    if (f.deg() == 0) return out;
    // gcd with x^q - x isolates the linear part cheaply before full splitting.
    const Integer q = field_cardinality(k.ctx);
    UP xq = powmod(UP::xpow(k, 1), q, f);
    UP lin = gcd_monic(xq - UP::xpow(k, 1), f);
    if (lin.deg() <= 0) return out;
    std::vector<UP> irr;
    split_equal_degree(lin, 1, rng, irr);
    for (const auto& g : irr) {
        FqElement root = k.neg(g.c[0]);
        long mult = 0;
        UP rem = f;
        while (true) {
            auto [quo, r] = divrem(rem, g);
            if (!r.is_zero()) break;
            ++mult;
            rem = quo;
        }
        out.emplace_back(root, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return FqElement::cmp(a.first, b.first) < 0;
    });
    return out;
}

bool is_irreducible(const UniPoly<FqField>& f) {
    if (f.deg() < 1) return false;
    if (f.deg() == 1) return true;
    const FqField& k = f.k;
    const Integer q = field_cardinality(k.ctx);
    const long n = f.deg();
    UP x = UP::xpow(k, 1);
    // x^(q^n) = x mod f, and gcd(x^(q^(n/r)) - x, f) = 1 for prime r | n.
    std::vector<UP> frob;
    frob.push_back(divrem(x, f).second);
    for (long j = 1; j <= n; ++j) frob.push_back(frobenius_step(frob.back(), q, f));
    if (!(frob[static_cast<std::size_t>(n)] == frob[0])) return false;
    std::vector<long> primes;
    long m = n;
    for (long r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        primes.push_back(r);
        while (m % r == 0) m /= r;
    }
    if (m > 1) primes.push_back(m);
    for (long r : primes) {
        UP g = gcd_monic(frob[static_cast<std::size_t>(n / r)] - x, f);
        if (g.deg() != 0) return false;
    }
    return true;
}

UniPoly<FqField> random_irreducible(const FqCtxPtr& ctx, int degree, Rng& rng) {
    if (degree < 1) throw InputError("random_irreducible: degree must be >= 1");
    FqField k{ctx};
    const long budget = 400L * degree * std::max(1, ctx->k);
    for (long attempt = 0; attempt < budget; ++attempt) {
        std::vector<FqElement> c;
        for (int i = 0; i < degree; ++i) c.push_back(fq_random(ctx, rng));
        c.push_back(k.one());
        UP f(k, std::move(c));
        if (is_irreducible(f)) return f;
    }
    throw InternalError("random_irreducible: retry budget exhausted");
}

FqCtxPtr fq_make(const PrimeField& base, std::vector<Integer> modulus) {
    FqCtxPtr raw = fq_context_unchecked(base.p(), std::move(modulus));
    if (raw->k >= 2) {
        FqCtxPtr fp = fp_context(base);
        FqField k{fp};
        std::vector<FqElement> c;
        for (const auto& v : raw->modulus) c.push_back(fq_from_integer(fp, v));
        UP m(k, std::move(c));
        if (!is_irreducible(m))
            throw ReducibleModulus("modulus " + poly_str(m, "z") + " splits over F_" +
                                   base.p().str());
    }
    return raw;
}

FqElement FqEmbedding::apply(const FqElement& a) const {
    if (trivial()) return a;
    FqElement acc = fq_zero(to);
    for (std::size_t i = a.rep().size(); i-- > 0;)
        acc = acc * gen_image + fq_from_integer(to, a.rep()[i]);
    return acc;
}

UniPoly<FqField> FqEmbedding::apply(const UniPoly<FqField>& f) const {
    FqField k{to};
    std::vector<FqElement> c;
    c.reserve(f.c.size());
    for (const auto& e : f.c) c.push_back(apply(e));
    return UniPoly<FqField>(k, std::move(c));
}

BiPoly<FqField> FqEmbedding::apply(const BiPoly<FqField>& f) const {
    FqField k{to};
    std::vector<UniPoly<FqField>> cy;
    cy.reserve(f.cy.size());
    for (const auto& col : f.cy) cy.push_back(apply(col));
    return BiPoly<FqField>(k, std::move(cy));
}

FqElement FqEmbedding::project(const FqElement& a) const {
    if (trivial()) return a;
    // Solve sum_i x_i emb(z^i) = a over F_p by Gaussian elimination.
    const int kk = from->k;
    const int kn = to->k;
    const Integer& p = from->p;
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(kn),
                                        std::vector<Integer>(static_cast<std::size_t>(kk) + 1));
    FqElement pw = fq_one(to);
    for (int col = 0; col < kk; ++col) {
        for (int row = 0; row < kn; ++row) m[row][col] = pw.rep()[static_cast<std::size_t>(row)];
        pw = pw * gen_image;
    }
    for (int row = 0; row < kn; ++row) m[row][kk] = a.rep()[static_cast<std::size_t>(row)];

    std::vector<int> pivot_col(static_cast<std::size_t>(kn), -1);
    int row = 0;
    for (int col = 0; col < kk && row < kn; ++col) {
        int pr = -1;
        for (int r = row; r < kn; ++r)
            if (!m[r][col].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        Integer inv = Integer::invmod(m[row][col], p);
        for (int c = col; c <= kk; ++c) m[row][c] = (m[row][c] * inv).mod(p);
        for (int r = 0; r < kn; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Integer f = m[r][col];
            for (int c = col; c <= kk; ++c) m[r][c] = (m[r][c] - f * m[row][c]).mod(p);
        }
        pivot_col[static_cast<std::size_t>(row)] = col;
        ++row;
    }
    std::vector<Integer> x(static_cast<std::size_t>(kk), Integer(0));
    for (int r = 0; r < kn; ++r) {
        int pc = pivot_col[static_cast<std::size_t>(r)];
        if (pc >= 0) x[static_cast<std::size_t>(pc)] = m[r][kk];
        else if (!m[r][kk].is_zero())
            throw InternalError("FqEmbedding::project: element not in the embedded subfield");
    }
    return FqElement(from, std::move(x));
}

UniPoly<FqField> FqEmbedding::project(const UniPoly<FqField>& f) const {
    FqField k{from};
    std::vector<FqElement> c;
    c.reserve(f.c.size());
    for (const auto& e : f.c) c.push_back(project(e));
    return UniPoly<FqField>(k, std::move(c));
}

FqEmbedding identity_embedding(const FqCtxPtr& ctx) {
    return FqEmbedding{ctx, ctx, fq_gen_pow(ctx, std::min(1, ctx->k - 1))};
}

FqExtension extend_by_irreducible(const FqCtxPtr& ctx, const UniPoly<FqField>& g, Rng& rng) {
    if (g.deg() < 1) throw InputError("extend_by_irreducible: degree must be >= 1");
    FqField k{ctx};
    if (g.deg() == 1) {
        FqElement xi = k.neg(k.mul(g.c[0], k.inv(g.c[1])));
        return FqExtension{identity_embedding(ctx), xi};
    }
    const int knew = ctx->k * static_cast<int>(g.deg());
    FqCtxPtr fp = fp_context(ctx->p);
    UniPoly<FqField> m2 = random_irreducible(fp, knew, rng);
    std::vector<Integer> mod2;
    for (const auto& e : m2.c) mod2.push_back(e.scalar());
    FqCtxPtr to = fq_context_unchecked(ctx->p, std::move(mod2));

    FqEmbedding emb{ctx, to, fq_zero(to)};
    if (ctx->k == 1) {
        emb.gen_image = fq_zero(to);  // unused: source is the prime field
    } else {
        // image of old generator = a root of the old modulus in the new field
        FqField kn{to};
        std::vector<FqElement> mold;
        for (const auto& v : ctx->modulus) mold.push_back(fq_from_integer(to, v));
        auto roots = roots_in_field(UniPoly<FqField>(kn, std::move(mold)), rng);
        if (roots.empty())
            throw InternalError("extend_by_irreducible: old modulus has no root in extension");
        emb.gen_image = roots.front().first;
    }

    auto gm = emb.apply(g);
    auto roots = roots_in_field(gm, rng);
    if (roots.empty())
        throw InternalError("extend_by_irreducible: defining polynomial has no root in extension");
    return FqExtension{emb, roots.front().first};
}

FqEmbedding extend_by_degree(const FqCtxPtr& ctx, int s, Rng& rng) {
    if (s <= 1) return identity_embedding(ctx);
    FqField k{ctx};
    UniPoly<FqField> g = random_irreducible(ctx, s, rng);
    return extend_by_irreducible(ctx, g, rng).emb;
}

// Resultant over F_q: enumerate nodes, move to an extension when the field is
// too small for the interpolation bound.
UniPoly<FqField> resultant_y(const BiPoly<FqField>& a, const BiPoly<FqField>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<FqField>::zero(a.k);
    const FqCtxPtr& ctx = a.k.ctx;
    const long bound = a.degX() * b.degY() + b.degX() * a.degY() + 1;
    const long skip_allowance =
        a.cy.back().deg() + b.cy.back().deg() + 2;  // nodes lost to lc roots
    Integer need(bound + skip_allowance);
    if (ctx->cardinality() >= need) {
        auto pool = fq_enumerate(ctx, static_cast<std::size_t>(bound + skip_allowance));
        std::size_t at = 0;
        auto nodes = [&]() -> FqElement {
            if (at >= pool.size()) throw InternalError("resultant_y: node pool exhausted");
            return pool[at++];
        };
        return detail::resultant_y_interp(a, b, nodes);
    }
    // extension-field nodes, coefficients projected back afterwards
    int s = 1;
    Integer card = ctx->cardinality();
    while (card < need) {
        card = card * ctx->cardinality();
        ++s;
    }
    Rng rng(0x524553554c54ULL);  // local stream; the result is interpolation-unique
    FqEmbedding emb = extend_by_degree(ctx, s, rng);
    auto res_big = resultant_y(emb.apply(a), emb.apply(b));
    return emb.project(res_big);
}

}  // namespace puiseux

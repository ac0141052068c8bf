#include "puiseux/parse.hpp"

#include <cctype>
#include <map>

namespace puiseux {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("parse error at position " + std::to_string(i) + ": " + what);
    }
};

Integer parse_uint(Cursor& c) {
    c.skip_ws();
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits.push_back(c.s[c.i++]);
    if (digits.empty()) c.fail("expected a number");
    return Integer(digits);
}

Rational parse_rational(Cursor& c) {
    bool paren = c.eat('(');
    bool neg = false;
    if (c.eat('-')) neg = true;
    else c.eat('+');
    Integer num = parse_uint(c);
    Integer den(1);
    if (c.eat('/')) den = parse_uint(c);
    if (paren && !c.eat(')')) c.fail("unbalanced parenthesis");
    Rational r(num, den);
    return neg ? -r : r;
}

long parse_exponent(Cursor& c) {
    Integer e = parse_uint(c);
    if (!e.fits_long() || e.to_long() > 4096) c.fail("exponent too large");
    return e.to_long();
}

}  // namespace

BiPoly<QQ> parse_bipoly(const std::string& text) {
    QQ k;
    Cursor c{text};
    std::map<std::pair<long, long>, Rational> terms;  // (yexp, xexp) -> coeff
    bool first = true;
    while (!c.done()) {
        bool neg = false;
        if (c.eat('-')) neg = true;
        else if (!c.eat('+') && !first)
            c.fail("expected '+' or '-'");
        first = false;

        Rational coef = neg ? Rational(-1) : Rational(1);
        long xe = 0, ye = 0;
        bool any = false;
        while (true) {
            char ch = c.peek();
            if (ch == 'x' || ch == 'y') {
                ++c.i;
                long e = 1;
                if (c.eat('^')) e = parse_exponent(c);
                (ch == 'x' ? xe : ye) += e;
                any = true;
            } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '(') {
                coef = coef * parse_rational(c);
                any = true;
            } else if (ch == '*') {
                ++c.i;
                continue;
            } else {
                break;
            }
            c.skip_ws();
            if (c.eat('*')) continue;
            char nx = c.peek();
            if (nx == 'x' || nx == 'y' || nx == '(') continue;
            break;
        }
        if (!any) c.fail("empty term");
        if (!coef.is_zero()) {
            auto key = std::make_pair(ye, xe);
            auto it = terms.find(key);
            if (it == terms.end()) terms.emplace(key, coef);
            else it->second = it->second + coef;
        }
    }
    long degy = -1;
    for (const auto& [key, v] : terms)
        if (!v.is_zero()) degy = std::max(degy, key.first);
    std::vector<UniPoly<QQ>> cy;
    for (long j = 0; j <= degy; ++j) {
        std::vector<Rational> col;
        for (const auto& [key, v] : terms) {
            if (key.first != j || v.is_zero()) continue;
            if (static_cast<long>(col.size()) <= key.second) col.resize(key.second + 1, Rational(0));
            col[static_cast<std::size_t>(key.second)] = v;
        }
        cy.emplace_back(k, std::move(col));
    }
    return BiPoly<QQ>(k, std::move(cy));
}

BiPoly<FqField> parse_bipoly_fq(const std::string& text, const FqCtxPtr& ctx) {
    return reduce_mod_p(parse_bipoly(text), ctx);
}

}  // namespace puiseux

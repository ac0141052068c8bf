#ifndef PUISEUX_QQ_HPP
#define PUISEUX_QQ_HPP

#include <string>

#include "puiseux/integer.hpp"

namespace puiseux {

// Field object for Q.
struct QQ {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_long(long n) const { return Rational(n); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return a.inv(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool same(const QQ&) const { return true; }
    Integer characteristic() const { return Integer(0); }
    Elem pth_root(const Elem&) const { throw InternalError("pth_root in characteristic 0"); }
    std::string str(const Elem& a) const { return a.str(); }
};

}  // namespace puiseux

#endif

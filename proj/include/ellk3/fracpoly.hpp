#pragma once

#include <utility>

#include "ellk3/poly.hpp"

namespace ellk3 {

// Field of fractions of Poly<K>: reduced (gcd 1) with monic denominator.
// FracPoly<Rat> is Q(t); FracPoly<RatFun> gives rational functions in x over
// Q(t), which is what isogeny maps live in.
template <class K>
class FracPoly {
  public:
    FracPoly() : num_(), den_(Poly<K>(K(1))) {}
    FracPoly(int c) : num_(Poly<K>(K(c))), den_(Poly<K>(K(1))) {}
    FracPoly(const K& c) : num_(Poly<K>(c)), den_(Poly<K>(K(1))) {}
    FracPoly(const Poly<K>& p) : num_(p), den_(Poly<K>(K(1))) {}
    FracPoly(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw domain_error("zero denominator");
        normalize();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend bool operator==(const FracPoly& a, const FracPoly& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

    FracPoly operator-() const {
        FracPoly r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend FracPoly operator+(const FracPoly& a, const FracPoly& b) {
        return FracPoly(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FracPoly operator-(const FracPoly& a, const FracPoly& b) { return a + (-b); }
    friend FracPoly operator*(const FracPoly& a, const FracPoly& b) {
        return FracPoly(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FracPoly operator/(const FracPoly& a, const FracPoly& b) {
        if (b.is_zero()) throw domain_error("division by zero rational function");
        return FracPoly(a.num_ * b.den_, a.den_ * b.num_);
    }

    FracPoly& operator+=(const FracPoly& o) { return *this = *this + o; }
    FracPoly& operator-=(const FracPoly& o) { return *this = *this - o; }
    FracPoly& operator*=(const FracPoly& o) { return *this = *this * o; }
    FracPoly& operator/=(const FracPoly& o) { return *this = *this / o; }

    FracPoly inverse() const { return FracPoly(1) / *this; }

    // Order of vanishing at the monic irreducible place pi; throws on 0.
    int order_at(const Poly<K>& pi) const {
        if (is_zero()) throw domain_error("order of zero function");
        return valuation(num_, pi) - valuation(den_, pi);
    }

    // deg num - deg den: order of pole at infinity when positive.
    int degree_at_infinity() const {
        if (is_zero()) throw domain_error("degree of zero function");
        return num_.degree() - den_.degree();
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>(K(1));
            return;
        }
        Poly<K> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const K lead = den_.leading();
        if (!(lead == K(1))) {
            const K inv = K(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly<K> num_, den_;
};

using RatFun = FracPoly<Rat>;   // Q(t)
using XPoly = Poly<RatFun>;     // polynomials in x over Q(t)
using XFrac = FracPoly<RatFun>; // rational functions in x over Q(t)

inline RatFun ratfun_t() { return RatFun(QPoly::variable()); }

template <class K>
K eval_frac(const FracPoly<K>& f, const K& x) {
    K d = f.den().eval(x);
    if (d == K(0)) throw domain_error("evaluation at a pole");
    return f.num().eval(x) / d;
}

}  // namespace ellk3

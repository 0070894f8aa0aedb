#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ellk3/rational.hpp"

namespace ellk3 {

// Dense univariate polynomial over a field K.  Instantiated with Rat
// (polynomials in t over Q) and with RatFun (polynomials in x over Q(t)).
//
// Coefficients are stored ascending with no trailing zeros, so the zero
// polynomial has empty storage and degree() == -1.
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(const K& c) {
        if (!(c == K(0))) c_.push_back(c);
    }
    Poly(int c) : Poly(K(c)) {}
    explicit Poly(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly monomial(const K& c, std::size_t e) {
        Poly p;
        if (c == K(0)) return p;
        p.c_.assign(e + 1, K(0));
        p.c_[e] = c;
        return p;
    }
    static Poly variable() { return monomial(K(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(std::size_t e) const { return e < c_.size() ? c_[e] : K(0); }

    const K& leading() const {
        if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == K(1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const K& s, const Poly& p) {
        if (s == K(0)) return Poly();
        Poly r = p;
        for (auto& c : r.c_) c = s * c;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw domain_error("polynomial division by zero");
        Poly q, r = a;
        const int db = b.degree();
        const K inv_lead = K(1) / b.leading();
        while (!r.is_zero() && r.degree() >= db) {
            const int k = r.degree() - db;
            const K f = r.leading() * inv_lead;
            Poly term = monomial(f, static_cast<std::size_t>(k));
            q += term;
            r -= term * b;
        }
        return {q, r};
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw domain_error("inexact polynomial division");
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool divides(const Poly& a) const { return divmod(a, *this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return (K(1) / leading()) * *this;
    }

    friend Poly gcd(const Poly& a, const Poly& b) {
        Poly x = a, y = b;
        while (!y.is_zero()) {
            x = divmod(x, y).second;
            std::swap(x, y);
            if (!y.is_zero()) y = y.monic();  // keeps coefficient growth in check
        }
        return x.monic();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        Poly r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = K(static_cast<int>(i)) * c_[i];
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Substitution t -> q(t).
    Poly compose(const Poly& q) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r(K(1)), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    // Multiply by t^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + k, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // Exact valuation at the place t (largest k with t^k | p); -1 for p = 0.
    int valuation_at_zero() const {
        if (is_zero()) return -1;
        std::size_t k = 0;
        while (c_[k] == K(0)) ++k;
        return static_cast<int>(k);
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

using QPoly = Poly<Rat>;

// Valuation of p at the monic irreducible place pi (largest k with pi^k | p).
// Returns -1 to signal infinity for p = 0.
template <class K>
int valuation(const Poly<K>& p, const Poly<K>& pi) {
    if (p.is_zero()) return -1;
    int v = 0;
    Poly<K> r = p;
    for (;;) {
        auto [q, rem] = divmod(r, pi);
        if (!rem.is_zero()) return v;
        r = q;
        ++v;
    }
}

// Deterministic ordering: by degree, then coefficients from the top down.
inline int rat_cmp(const Rat& a, const Rat& b) { return cmp(a, b); }

inline bool poly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = rat_cmp(a.coeff(static_cast<std::size_t>(i)), b.coeff(static_cast<std::size_t>(i)));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace ellk3

#include "ellk3/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace ellk3 {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& s) : s_(s) {}

    QPoly parse_poly_all() {
        QPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

    RatFun parse_ratfun_all() {
        QPoly num = expr();
        skip_ws();
        RatFun f(num);
        if (peek() == '/') {
            ++pos_;
            QPoly den = expr();
            if (den.is_zero()) fail("zero denominator");
            f = RatFun(num, den);
        }
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return f;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool digits_ahead(std::size_t from) const {
        return from < s_.size() && std::isdigit(static_cast<unsigned char>(s_[from]));
    }

    QPoly expr() {
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = (c == '-');
            ++pos_;
        }
        QPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                QPoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    QPoly term() {
        QPoly acc = factor();
        while (peek() == '*') {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }

    QPoly factor() {
        QPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            unsigned e = uinteger();
            base = base.pow(e);
        }
        return base;
    }

    QPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            QPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 't') {
            ++pos_;
            return QPoly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return QPoly(rational());
        if (std::isalpha(static_cast<unsigned char>(c))) fail("unknown variable");
        fail("expected atom");
    }

    Rat rational() {
        Int num = integer();
        // '/' binds to the literal only when digits follow directly.
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            std::size_t probe = pos_ + 1;
            while (probe < s_.size() && std::isspace(static_cast<unsigned char>(s_[probe]))) ++probe;
            if (digits_ahead(probe)) {
                ++pos_;
                skip_ws();
                Int den(uinteger_str());
                if (den == 0) fail("zero denominator");
                return make_rat(num, den);
            }
        }
        return Rat(num);
    }

    Int integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
            skip_ws();
        }
        Int v(uinteger_str());
        return neg ? Int(-v) : v;
    }

    std::string uinteger_str() {
        if (!digits_ahead(pos_)) fail("expected integer");
        std::size_t start = pos_;
        while (digits_ahead(pos_)) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    unsigned uinteger() {
        std::string d = uinteger_str();
        if (d.size() > 6) fail("exponent too large");
        return static_cast<unsigned>(std::stoul(d));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void append_monomial(std::ostringstream& out, const Rat& c, int e, bool first) {
    Rat a = abs(c);
    if (first) {
        if (sgn(c) < 0) out << "-";
    } else {
        out << (sgn(c) < 0 ? " - " : " + ");
    }
    const bool unit = (a == 1);
    if (e == 0) {
        out << a.get_str();
        return;
    }
    if (!unit) out << a.get_str() << "*";
    out << "t";
    if (e > 1) out << "^" << e;
}

}  // namespace

QPoly parse_poly(const std::string& text) { return Parser(text).parse_poly_all(); }

RatFun parse_ratfun(const std::string& text) { return Parser(text).parse_ratfun_all(); }

std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = p.degree(); e >= 0; --e) {
        Rat c = p.coeff(static_cast<std::size_t>(e));
        if (c == 0) continue;
        append_monomial(out, c, e, first);
        first = false;
    }
    return out.str();
}

std::string to_string(const RatFun& f) {
    if (f.is_polynomial()) {
        Rat lead = f.den().coeff(0);
        if (lead == 1) return to_string(f.num());
        QPoly scaled = (Rat(1) / lead) * f.num();
        return to_string(scaled);
    }
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace ellk3

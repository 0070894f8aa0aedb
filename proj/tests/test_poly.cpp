#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellk3/fracpoly.hpp"
#include "ellk3/poly.hpp"
#include "ellk3/poly_io.hpp"

using namespace ellk3;

namespace {

QPoly random_poly(std::mt19937_64& rng, int max_deg, long coeff_bound) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> dn(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<long> du(1, coeff_bound);
    int deg = dd(rng);
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = make_rat(dn(rng), du(rng));
    return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
    QPoly t = QPoly::variable();
    QPoly p = t.pow(4) - QPoly(1);
    CHECK((p * p) == parse_poly("t^8 - 2*t^4 + 1"));
    auto [q, r] = divmod(t.pow(5), t.pow(2));
    CHECK(q == t.pow(3));
    CHECK(r.is_zero());
    CHECK(gcd(t * t - QPoly(1), t - QPoly(1)) == t - QPoly(1));
}

TEST_CASE("ring axioms on randomized inputs") {
    std::mt19937_64 rng(20240901);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly a = random_poly(rng, 8, 50);
        QPoly b = random_poly(rng, 8, 50);
        QPoly c = random_poly(rng, 8, 50);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + (b + c) == (a + b) + c);
    }
}

TEST_CASE("degree and gcd properties") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 100; ++iter) {
        QPoly a = random_poly(rng, 10, 20);
        QPoly b = random_poly(rng, 10, 20);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).degree() == a.degree() + b.degree());
        QPoly g = gcd(a, b);
        CHECK(g.divides(a));
        CHECK(g.divides(b));
    }
}

TEST_CASE("divmod with remainder") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 100; ++iter) {
        QPoly a = random_poly(rng, 12, 30);
        QPoly b = random_poly(rng, 6, 30);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("parser on the documented inputs") {
    CHECK(parse_poly("t^4 - 1") == QPoly::variable().pow(4) - QPoly(1));
    QPoly expect = QPoly::monomial(make_rat(3, 2), 2) + QPoly::variable();
    CHECK(parse_poly("3/2*t^2 + t") == expect);
    CHECK(parse_poly("t*(t-1)^2") == parse_poly("t^3 - 2*t^2 + t"));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("-t^2") == -QPoly::variable().pow(2));
}

TEST_CASE("parser rejects bad input with a position") {
    CHECK_THROWS_AS(parse_poly("t +"), parse_error);
    CHECK_THROWS_AS(parse_poly("x^2"), parse_error);
    CHECK_THROWS_AS(parse_poly("(t"), parse_error);
    try {
        parse_poly("t^2 + y");
    } catch (const parse_error& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 200; ++iter) {
        QPoly p = random_poly(rng, 30, 1000000);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("rational function round trips and arithmetic") {
    RatFun f = parse_ratfun("(t^2-1)/(t+2)");
    CHECK(f.num() == parse_poly("t^2-1"));
    CHECK(f.den() == parse_poly("t+2"));
    CHECK(parse_ratfun(to_string(f)) == f);
    RatFun g = parse_ratfun("1/(t-1)");
    CHECK((f * g) == parse_ratfun("(t+1)/(t+2)"));
    CHECK(parse_ratfun("3/2") == RatFun(make_rat(3, 2)));
    CHECK(parse_ratfun("t/2") == RatFun(QPoly::monomial(make_rat(1, 2), 1)));
    // reduction to lowest terms with monic denominator
    RatFun h(parse_poly("2*t^2-2"), parse_poly("2*t-2"));
    CHECK(h == parse_ratfun("t+1"));
}

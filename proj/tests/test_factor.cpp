#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellk3/factor.hpp"
#include "ellk3/poly_io.hpp"

using namespace ellk3;

namespace {

QPoly product_of(const Factorization& f) {
    QPoly p(f.unit);
    for (const auto& [fac, mult] : f.factors) p *= fac.pow(static_cast<unsigned>(mult));
    return p;
}

}  // namespace

TEST_CASE("documented factorizations") {
    QPoly p = parse_poly("(t^4-1)^6");
    Factorization f = factor_over_q(p);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].factor == parse_poly("t-1"));
    CHECK(f.factors[0].multiplicity == 6);
    CHECK(f.factors[1].factor == parse_poly("t+1"));
    CHECK(f.factors[1].multiplicity == 6);
    CHECK(f.factors[2].factor == parse_poly("t^2+1"));
    CHECK(f.factors[2].multiplicity == 6);

    Factorization cube = factor_over_q(parse_poly("t^3"));
    REQUIRE(cube.factors.size() == 1);
    CHECK(cube.factors[0].factor == parse_poly("t"));
    CHECK(cube.factors[0].multiplicity == 3);

    Factorization irr = factor_over_q(parse_poly("t^2-2"));
    REQUIRE(irr.factors.size() == 1);
    CHECK(irr.factors[0].factor == parse_poly("t^2-2"));
    CHECK(irr.factors[0].multiplicity == 1);
    CHECK(is_irreducible_over_q(parse_poly("t^2-2")));
}

TEST_CASE("squarefree decomposition") {
    auto parts = squarefree_decomposition(parse_poly("(t^4-1)^6"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].factor == parse_poly("t^4-1"));
    CHECK(parts[0].multiplicity == 6);

    auto mixed = squarefree_decomposition(parse_poly("t^2*(t-1)^3*(t^2+1)"));
    REQUIRE(mixed.size() == 3);
    CHECK(mixed[0].factor == parse_poly("t-1"));
    CHECK(mixed[0].multiplicity == 3);
    CHECK(mixed[1].factor == parse_poly("t"));
    CHECK(mixed[1].multiplicity == 2);
    CHECK(mixed[2].factor == parse_poly("t^2+1"));
    CHECK(mixed[2].multiplicity == 1);

    CHECK_THROWS_AS(squarefree_decomposition(QPoly()), domain_error);
}

TEST_CASE("pressure cases") {
    // many small factors, forces real recombination
    QPoly p = parse_poly("(t^2+1)*(t^2+t+1)*(t^4+1)*(t-3)^3*(2*t+5)");
    Factorization f = factor_over_q(p);
    CHECK(product_of(f) == p);
    REQUIRE(f.factors.size() == 5);
    for (const auto& part : f.factors) CHECK(is_irreducible_over_q(part.factor));

    // swinnerton-dyer style: irreducible of degree 4 whose reductions split
    QPoly sd = parse_poly("t^4 - 10*t^2 + 1");
    CHECK(is_irreducible_over_q(sd));

    // rational leading/trailing content
    QPoly q = parse_poly("3/4*t^2 - 3/4");
    Factorization fq = factor_over_q(q);
    CHECK(fq.unit == make_rat(3, 4));
    CHECK(product_of(fq) == q);
}

TEST_CASE("randomized product reconstruction") {
    std::mt19937_64 rng(987654);
    std::uniform_int_distribution<long> dc(-9, 9);
    std::uniform_int_distribution<int> dm(1, 3);
    for (int iter = 0; iter < 60; ++iter) {
        QPoly p(1);
        int pieces = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < pieces; ++k) {
            int deg = 1 + static_cast<int>(rng() % 4);
            std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
            for (auto& x : c) x = Rat(dc(rng));
            c.back() = Rat(1 + (rng() % 5));
            QPoly piece(std::move(c));
            p *= piece.pow(static_cast<unsigned>(dm(rng)));
        }
        Factorization f = factor_over_q(p);
        CHECK(product_of(f) == p);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            CHECK(f.factors[i].factor.is_monic());
            for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
                CHECK(gcd(f.factors[i].factor, f.factors[j].factor).degree() == 0);
            }
        }
    }
}

TEST_CASE("degree cap stays comfortable") {
    // degree 36 with repeated quartic content, the size reached by cleared
    // quotient-curve discriminants
    QPoly p = parse_poly("(t^4-1)^6*(t^4+t^3+t^2+t+1)*(t^8+t+7)");
    Factorization f = factor_over_q(p);
    CHECK(product_of(f) == p);
    REQUIRE(f.factors.size() == 5);
}

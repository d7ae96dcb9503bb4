#include "doctest.h"

#include "wildram/errors.hpp"
#include "wildram/parse.hpp"

using namespace wildram;

TEST_CASE("ring descriptors") {
    CHECK(parse_ring("F5")->name() == "F5");
    CHECK(parse_ring("Fp(5)")->name() == "F5");
    CHECK(parse_ring("Z/125")->name() == "Z/5^3");
    CHECK(parse_ring("Z/5^3")->name() == "Z/5^3");
    CHECK(parse_ring("Q")->name() == "Q");
    CHECK(parse_ring("F5[u]/(u^4)")->name() == "F5[u]/(u^4)");
    CHECK(parse_ring("Fp(5)[u]/(u^4)")->name() == "F5[u]/(u^4)");
    CHECK(parse_ring("F3[eps]/(eps^2)")->name() == "F3[eps]/(eps^2)");
    CHECK(parse_ring("Z/5^3[X]/(X^2+5*X+5)")->name() == "Z/5^3[X]/(X^2+5*X+5)");
    CHECK(parse_ring("F3[x,y]/(deg>=2)")->name() == "F3[x,y]/(deg>=2)");
    CHECK(parse_ring(" F5 [ u ] / ( u^4 ) ")->name() == "F5[u]/(u^4)");

    CHECK_THROWS_AS(parse_ring("F4"), input_error);
    CHECK_THROWS_AS(parse_ring("Z/12"), input_error);
    CHECK_THROWS_AS(parse_ring("F5[u"), input_error);
    CHECK_THROWS_AS(parse_ring("F5[u]/(v^2)"), input_error);
    CHECK_THROWS_AS(parse_ring("F5[u,v]/(u^2)"), input_error);
}

TEST_CASE("ring names round-trip through the parser") {
    for (const char* text : {"F5[u]/(u^4)", "Z/5^3[X]/(X^2+5*X+5)", "F3[x,y]/(deg>=2)", "Z/7^2"}) {
        auto r = parse_ring(text);
        CHECK(parse_ring(r->name())->name() == r->name());
    }
}

TEST_CASE("element literals") {
    auto r = parse_ring("F5[u]/(u^4)");
    CHECK(parse_element(r, "1+u") == r->one() + r->monomial(1));
    CHECK(parse_element(r, "2*u^3") == r->from_int(2) * r->monomial(3));
    CHECK(parse_element(r, "(1+u)^2") == (r->one() + r->monomial(1)).pow(2));
    CHECK(parse_element(r, "-1") == r->from_int(-1));
    CHECK(parse_element(r, "7/3") == r->from_int(7) * r->from_int(3).inverse());
    CHECK(parse_element(r, "0").is_zero());

    auto q = parse_ring("Q");
    CHECK(parse_element(q, "-3").rational_value() == -3);
    CHECK(parse_element(q, "7/2").rational_value() == Rational(7, 2));

    CHECK_THROWS_AS(parse_element(r, "1+v"), input_error);
    CHECK_THROWS_AS(parse_element(r, "T"), input_error);
    CHECK_THROWS_AS(parse_element(r, "1+"), input_error);
}

TEST_CASE("series literals") {
    auto k = parse_ring("F3");
    auto s = parse_series(k, "1*T^-3 + 2*T^-1", 5);
    CHECK(s.coeff(-3).is_one());
    CHECK(s.coeff(-1) == k->from_int(2));
    CHECK(s.valuation() == -3);

    auto r = parse_ring("F5[u]/(u^2)");
    auto t = parse_series(r, "T + (1+u)*T^2", 6);
    CHECK(t.coeff(1).is_one());
    CHECK(t.coeff(2) == r->one() + r->monomial(1));

    auto poly = parse_series(k, "1 - T^2");
    CHECK(poly.exact());
    CHECK(poly.coeff(2) == k->from_int(-1));
}

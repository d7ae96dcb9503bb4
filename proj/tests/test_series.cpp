#include "doctest.h"

#include "wildram/errors.hpp"
#include "wildram/series.hpp"

#include <random>

using namespace wildram;

namespace {

RingPtr F(std::int64_t p) { return mk_ring(RingDescriptor::prime_field(p)); }

Series poly(const RingPtr& r, std::initializer_list<std::pair<long, long>> terms,
            long prec = kPrecExact) {
    std::vector<std::pair<long, RingElement>> ts;
    for (auto [e, c] : terms) ts.emplace_back(e, r->from_int(c));
    return Series::from_terms(r, ts, prec);
}

Series random_series(const RingPtr& r, long lo, long prec, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, r->base_mod() - 1);
    std::vector<std::pair<long, RingElement>> ts;
    for (long e = lo; e < prec; ++e) ts.emplace_back(e, r->from_int(d(rng)));
    return Series::from_terms(r, ts, prec);
}

} // namespace

TEST_CASE("basic arithmetic and precision windows") {
    auto r = F(7);
    auto a = poly(r, {{0, 1}, {1, 1}}, 5);  // 1+T mod T^5
    auto b = poly(r, {{0, 1}, {1, -1}}, 5); // 1-T mod T^5
    CHECK((a * b) == poly(r, {{0, 1}, {2, -1}}, 5));
    CHECK((a * b).prec() == 5);

    auto r3 = F(3);
    auto inv = poly(r3, {{0, 1}, {1, 1}}, 4).inverse(); // 1/(1+T) mod T^4
    CHECK(inv == poly(r3, {{0, 1}, {1, 2}, {2, 1}, {3, 2}}, 4));

    // Laurent monomials multiply exactly
    auto t3 = Series::monomial(r->from_int(1), -3);
    auto t5 = Series::monomial(r->from_int(1), 5);
    auto prod = t3 * t5;
    CHECK(prod.exact());
    CHECK(prod.coeff(2).is_one());
    CHECK(prod.valuation() == 2);
}

TEST_CASE("precision propagation in Laurent multiplication") {
    auto r = F(5);
    auto a = poly(r, {{-2, 1}}, 3);  // T^-2 known mod T^3
    auto b = poly(r, {{4, 2}}, 9);   // 2T^4 known mod T^9
    auto ab = a * b;
    // unknown tail of a enters at 4, of b at -2
    CHECK(ab.prec() == std::min(3 + 4L, 9 - 2L));
    CHECK(ab.coeff(2) == r->from_int(2));
}

TEST_CASE("composition examples") {
    auto r = F(7);
    auto f = poly(r, {{2, 1}});                    // T^2
    auto g = poly(r, {{1, 1}, {2, 1}}, 5);         // T+T^2 mod T^5
    CHECK(compose(f, g) == poly(r, {{2, 1}, {3, 2}, {4, 1}}, 5));

    std::mt19937 rng(3);
    auto any = random_series(r, 0, 6, rng);
    auto idt = Series::identity(r, 6);
    CHECK(compose(any, idt) == any);

    auto r5u = mk_ring(RingDescriptor::artin_modulus(5, 1, "u", {0, 0, 1})); // F5[u]/(u^2)
    auto t = Series::identity(r5u, 8);
    auto tp = t + Series::constant(r5u->monomial(1), 8); // T + u
    CHECK(compose(t, tp) == tp);

    // unit constant terms leave the ring
    auto bad = poly(r, {{0, 1}, {1, 1}}, 5);
    CHECK_THROWS_AS(compose(f, bad), input_error);
}

TEST_CASE("reversion") {
    auto r = F(5);
    auto f = poly(r, {{1, 1}, {2, 1}}, 4); // T+T^2 mod T^4
    auto g = reversion(f);
    CHECK(equal_mod(compose(f, g), Series::identity(r, 4), 4)); // oracle first
    CHECK(g == poly(r, {{1, 1}, {2, -1}, {3, 2}}, 4));

    CHECK(reversion(Series::identity(r, kPrecExact)) == Series::identity(r, 6));
    CHECK(reversion(poly(r, {{1, 2}})) == poly(r, {{1, 3}}));
}

TEST_CASE("reversion roundtrip on random series") {
    std::mt19937 rng(17);
    for (auto p : {3, 5}) {
        auto r = F(p);
        for (int t = 0; t < 8; ++t) {
            auto tail = random_series(r, 2, 12, rng);
            auto f = (Series::identity(r, 12) + tail).truncated(12);
            auto g = reversion(f);
            CHECK(equal_mod(compose(f, g), Series::identity(r, 12), 12));
            CHECK(equal_mod(compose(g, f), Series::identity(r, 12), 12));
        }
    }
}

TEST_CASE("m-th roots of units") {
    auto r3 = F(3);
    auto s = poly(r3, {{0, 1}, {2, 1}}, 5); // 1+T^2 mod T^5
    auto rt = mth_root_unit(s, 2);
    CHECK(equal_mod(rt * rt, s, 5)); // oracle: square the output
    CHECK(rt == poly(r3, {{0, 1}, {2, 2}, {4, 1}}, 5));

    CHECK(mth_root_unit(Series::constant(r3->one(), kPrecExact), 7) ==
          Series::constant(r3->one(), kPrecExact));
    auto lin = poly(r3, {{0, 1}, {1, 1}});
    CHECK(mth_root_unit(lin, 1) == lin);

    auto r5 = F(5);
    CHECK_THROWS_AS(mth_root_unit(poly(r5, {{0, 1}, {1, 1}}, 6), 5), input_error);
}

TEST_CASE("m-th root property on random units") {
    std::mt19937 rng(23);
    for (auto [p, m] : {std::pair{3, 2}, {5, 2}, {5, 3}, {7, 4}}) {
        auto r = F(p);
        for (int t = 0; t < 6; ++t) {
            auto u = (Series::constant(r->one(), 10) + random_series(r, 1, 10, rng)).truncated(10);
            auto rt = mth_root_unit(u, m);
            CHECK(equal_mod(rt.pow(m), u, 10));
        }
    }
}

TEST_CASE("derivative") {
    auto r3 = F(3);
    CHECK(poly(r3, {{3, 1}}).derivative().valuation() == std::nullopt); // d(T^3)=0 in char 3
    auto r7 = F(7);
    CHECK(poly(r7, {{0, 1}, {1, 1}, {2, 1}}).derivative() == poly(r7, {{0, 1}, {1, 2}}));
    auto lm = Series::monomial(r7->from_int(1), -4);
    CHECK(lm.derivative() == Series::monomial(r7->from_int(-4), -5));
}

TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937 rng(31);
    auto r = F(5);
    for (int t = 0; t < 12; ++t) {
        auto f = random_series(r, -2, 9, rng);
        auto g = random_series(r, 0, 9, rng);
        auto lhs = (f * g).derivative();
        auto rhs = f.derivative() * g + f * g.derivative();
        long w = std::min(lhs.prec(), rhs.prec());
        CHECK(equal_mod(lhs, rhs, w));
    }
}

TEST_CASE("precision monotonicity: higher-precision recomputation agrees on the window") {
    std::mt19937 rng(41);
    auto r = F(7);
    for (int t = 0; t < 10; ++t) {
        auto a_hi = random_series(r, 0, 16, rng);
        auto b_hi = (Series::identity(r, 16) + random_series(r, 2, 16, rng)).truncated(16);
        auto a_lo = a_hi.truncated(8);
        auto b_lo = b_hi.truncated(8);
        CHECK(equal_mod(a_hi * b_hi, a_lo * b_lo, (a_lo * b_lo).prec()));
        CHECK(equal_mod(compose(a_hi, b_hi), compose(a_lo, b_lo), compose(a_lo, b_lo).prec()));
        CHECK(equal_mod(a_hi.inverse() * a_hi, Series::constant(r->one(), 8), 8));
    }
}

TEST_CASE("division requires a unit leading coefficient") {
    auto r = mk_ring(RingDescriptor::artin_modulus(5, 1, "u", {0, 0, 1}));
    auto s = Series::constant(r->monomial(1), 6) + Series::identity(r, 6); // u + T
    CHECK_THROWS_AS(s.inverse(), input_error);
    auto ok = Series::constant(r->one() + r->monomial(1), 6) + Series::identity(r, 6);
    CHECK((ok * ok.inverse()) == Series::constant(r->one(), ok.inverse().prec()));
}

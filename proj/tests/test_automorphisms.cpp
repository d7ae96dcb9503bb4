#include "doctest.h"

#include "wildram/automorphisms.hpp"
#include "wildram/errors.hpp"

using namespace wildram;

namespace {

RingPtr F(std::int64_t p) { return mk_ring(RingDescriptor::prime_field(p)); }

RingPtr Fu(std::int64_t p, long d, const char* var = "u") {
    std::vector<std::int64_t> f(d + 1, 0);
    f[d] = 1;
    return mk_ring(RingDescriptor::artin_modulus(p, 1, var, std::move(f)));
}

} // namespace

TEST_CASE("sigma_0 over F3 with m = 2 has order 3 and conductor 2") {
    auto k = F(3);
    auto s = standard_sigma(3, 2, k, k->one(), default_sigma_prec(3, 2));
    CHECK(aut_order(s, 10) == 3);
    CHECK(conductor(s) == 2);
    // sigma(T) = T + T^3 + ... : the expansion of T(1+T^2)^{-1/2} in F_3
    CHECK(s.image.coeff(1).is_one());
    CHECK(s.image.coeff(2).is_zero());
    CHECK(s.image.coeff(3).is_one());
}

TEST_CASE("identity has order 1") {
    auto k = F(5);
    CHECK(aut_order(identity_automorphism(k, 32), 5) == 1);
}

TEST_CASE("order over an Artin ring follows the geometric-sum criterion") {
    // over F5[u]/(u^4): sum_{i<5} (1+u)^i = ((1+u)^5 - 1)/u = u^4 = 0, so order 5
    auto r4 = Fu(5, 4);
    auto a4 = r4->one() + r4->monomial(1);
    auto s4 = standard_sigma(5, 2, r4, a4, 40);
    CHECK(aut_order(s4, 10) == 5);

    // over F5[u]/(u^5) the sum is u^4 != 0, so sigma_a^5 != Id
    auto r5 = Fu(5, 5);
    auto a5 = r5->one() + r5->monomial(1);
    auto s5 = standard_sigma(5, 2, r5, a5, 40);
    CHECK_FALSE(aut_order(s5, 6).has_value());
}

TEST_CASE("p-fold composite matches the closed form T(a^p + (1+...+a^{p-1})T^m)^{-1/m}") {
    auto r = Fu(5, 5);
    auto a = r->one() + r->monomial(1);
    const long m = 2, p = 5, prec = 40;
    auto s = standard_sigma(p, m, r, a, prec);
    auto sp = aut_power(s, p);

    RingElement ap = a.pow(p);
    RingElement sum = r->zero();
    for (long i = 0; i < p; ++i) sum = sum + a.pow(i);
    Series inner = Series::constant(ap, prec) + Series::monomial(sum, m, prec);
    Series closed =
        (Series::identity(r, prec + 1) * mth_root_unit(inner, m).inverse()).truncated(prec);
    CHECK(equal_mod(sp.image, closed, std::min(sp.image.prec(), closed.prec())));
}

TEST_CASE("conductor examples") {
    auto k5 = F(5);
    // sigma(T) = T + T^{m+1}
    for (long m : {1, 2, 3, 4, 6}) {
        auto img = Series::identity(k5, 30) + Series::monomial(k5->one(), m + 1, 30);
        CHECK(conductor(make_automorphism(img)) == m);
    }
    // Moebius at a = 0: T/(1+T) has conductor 1
    auto mob = standard_sigma(5, 1, k5, k5->zero(), 30);
    CHECK(conductor(mob) == 1);
    CHECK(aut_order(mob, 10) == 5);
    CHECK_THROWS_AS(conductor(identity_automorphism(k5, 30)), input_error);
}

TEST_CASE("ramification data: beta = (m+1)(p-1)") {
    struct Case {
        long p, m, beta;
    };
    for (auto [p, m, beta] : {Case{3, 2, 6}, Case{5, 2, 12}, Case{2, 5, 6}}) {
        auto k = F(p);
        auto s = standard_sigma(p, m, k, k->one(), default_sigma_prec(p, m));
        auto rd = ramification_data(s);
        CHECK(rd.order == p);
        CHECK(rd.conductor == m);
        CHECK(rd.beta == beta);
        CHECK(rd.conductor_prime_to_p);
        // single break at m+1 for the whole cyclic group
        for (long b : rd.breaks) CHECK(b == m + 1);
        CHECK(static_cast<long>(rd.filtration.size()) == m + 1);
    }
}

TEST_CASE("norm series") {
    auto k = F(3);
    auto s = standard_sigma(3, 2, k, k->one(), default_sigma_prec(3, 2));
    auto y = norm_series(s, 3);
    CHECK(y.valuation() == 3);

    CHECK(norm_series(identity_automorphism(k, 20), 1) == Series::identity(k, 20));

    auto k5 = F(5);
    auto mob = standard_sigma(5, 1, k5, k5->zero(), default_sigma_prec(5, 1));
    CHECK(norm_series(mob, 5).valuation() == 5);
}

TEST_CASE("standard_sigma preconditions") {
    auto k = F(5);
    CHECK_THROWS_AS(standard_sigma(5, 5, k, k->one(), 40), input_error);  // p | m
    CHECK_THROWS_AS(standard_sigma(5, 10, k, k->one(), 40), input_error); // p | m
    CHECK_THROWS_AS(standard_sigma(5, 2, k, k->zero(), 40), input_error); // a not in 1+M
    CHECK_THROWS_AS(standard_sigma(5, 1, k, k->one(), 40), input_error);  // a not in M
    CHECK_THROWS_AS(standard_sigma(4, 3, k, k->one(), 40), input_error);  // non-prime
}

TEST_CASE("family member over F5[u]/(u^4) with m = 2 keeps order 5") {
    auto r = Fu(5, 4);
    auto a = r->one() + r->monomial(1);
    auto builder = [&](long prec) { return standard_sigma(5, 2, r, a, prec); };
    CHECK(aut_order_certified(builder, 40, 8) == 5);
}

TEST_CASE("order stability under precision doubling for the base family") {
    for (long p : {3, 5, 7}) {
        for (long m : {1, 2, 3}) {
            if (m % p == 0) continue;
            auto k = F(p);
            auto a = m == 1 ? k->zero() : k->one();
            auto builder = [&](long prec) { return standard_sigma(p, m, k, a, prec); };
            CHECK(aut_order_certified(builder, default_sigma_prec(p, m), 2 * p) == p);
        }
    }
}

TEST_CASE("inverse and powers compose correctly") {
    auto k = F(7);
    auto s = standard_sigma(7, 2, k, k->one(), 64);
    auto inv = aut_inverse(s);
    auto idt = aut_compose(s, inv);
    CHECK(equal_mod(idt.image, Series::identity(k, idt.prec()), idt.prec()));
    auto s3 = aut_power(s, 3);
    auto s4 = aut_power(s, 4);
    auto s7 = aut_compose(s3, s4);
    CHECK(equal_mod(s7.image, Series::identity(k, s7.prec()), s7.prec()));
    auto back = aut_power(s, -3);
    auto idt2 = aut_compose(back, s3);
    CHECK(equal_mod(idt2.image, Series::identity(k, idt2.prec()), idt2.prec()));
}

TEST_CASE("aut_apply handles Laurent tails") {
    auto k = F(5);
    auto s = standard_sigma(5, 2, k, k->one(), 48);
    auto x = Series::monomial(k->one(), -3, 20) + Series::monomial(k->from_int(2), 4, 20);
    auto y = aut_apply(s, x);
    CHECK(y.valuation() == -3);
    auto z = aut_apply(aut_inverse(s), y);
    CHECK(equal_mod(z, x, std::min(z.prec(), 15L)));
}

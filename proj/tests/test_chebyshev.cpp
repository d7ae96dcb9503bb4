#include "doctest.h"

#include "wildram/chebyshev.hpp"
#include "wildram/errors.hpp"

#include <random>

using namespace wildram;

namespace {

QPoly qp(std::initializer_list<std::pair<long, long>> terms) {
    QPoly r;
    for (auto [e, c] : terms) r = r + QPoly::monomial(Rational(c), e);
    return r;
}

} // namespace

TEST_CASE("Chebyshev polynomials from the binomial sums") {
    auto c3 = cheb_polys(3);
    CHECK(c3.t == qp({{3, 4}, {1, -3}}));
    CHECK(c3.s == qp({{2, 4}, {0, -1}}));

    auto c5 = cheb_polys(5);
    CHECK(c5.t == qp({{5, 16}, {3, -20}, {1, 5}}));
    CHECK(c5.s == qp({{4, 16}, {2, -12}, {0, 1}}));

    for (long p : {3, 5, 7, 11, 13}) {
        auto c = cheb_polys(p);
        CHECK(c.t.degree() == p);
        CHECK(c.s.degree() == p - 1);
    }
    CHECK_THROWS_AS(cheb_polys(2), input_error);
    CHECK_THROWS_AS(cheb_polys(9), input_error);
}

TEST_CASE("psi polynomials") {
    auto d3 = psi_poly(3);
    CHECK(d3.psi == qp({{1, 1}, {0, 3}}));

    auto d5 = psi_poly(5);
    CHECK(d5.psi == qp({{2, 1}, {1, 5}, {0, 5}}));

    auto d7 = psi_poly(7);
    CHECK(d7.psi == qp({{3, 1}, {2, 7}, {1, 14}, {0, 7}}));
    CHECK(d7.psi.degree() == 3);

    for (long p : {3, 5, 7, 11, 13}) {
        auto d = psi_poly(p);
        CHECK(d.bezout_exact);
        CHECK(d.denominators_pow2);
        CHECK(d.psi_eisenstein);
        CHECK(d.psi.degree() == (p - 1) / 2);
        // psi == X^{(p-1)/2} mod p with unit 1 (psi is monic, middles divisible by p)
        for (long i = 0; i < d.psi.degree(); ++i)
            if (d.psi.coeff(i) != 0) CHECK(p_valuation(d.psi.coeff(i), p) >= 1);
    }
}

TEST_CASE("psi divides both Chebyshev conditions exactly") {
    QPoly half_shift = QPoly::monomial(Rational(1, 2), 1) + QPoly::constant(1);
    for (long p : {3, 5, 7, 11, 13}) {
        auto cheb = cheb_polys(p);
        auto d = psi_poly(p);
        QPoly tcond = cheb.t.substitute(half_shift) - QPoly::constant(1);
        QPoly scond = cheb.s.substitute(half_shift);
        CHECK(d.psi.divides(tcond));
        CHECK(d.psi.divides(scond));
    }
}

TEST_CASE("Moebius order test: identity case in char p") {
    for (long p : {3, 5, 7}) {
        auto k = mk_ring(RingDescriptor::prime_field(p));
        auto rep = mobius_order_test(p, k->zero());
        CHECK(rep.is_identity_power);
        CHECK(rep.t_eval.is_zero()); // T_p(1) - 1 = 0
        CHECK(rep.s_eval.is_zero()); // S_{p-1}(1) = p = 0
        CHECK(rep.via_series.has_value());
    }
}

TEST_CASE("M_{-3}^3 = Id over the rationals") {
    auto q = mk_ring(RingDescriptor::rationals());
    auto a = q->from_int(-3);
    auto m = Mat2::mobius(a);
    auto m3 = m.pow(3);
    CHECK(m3.is_identity());
    auto rep = mobius_order_test(3, a);
    CHECK(rep.is_identity_power);
    // consistent with psi_3(X) = X + 3: a = -3 is its root
    CHECK(psi_poly(3).psi.evaluate(Rational(-3)) == 0);
    CHECK_FALSE(rep.via_series.has_value()); // no series leg over Q
}

TEST_CASE("order over Artin rings matches psi vanishing") {
    // F5[u]/(u^2): psi(u) = u^2 + 5u + 5 = 0, so M_u^5 = Id
    auto r2 = mk_ring(RingDescriptor::artin_modulus(5, 1, "u", {0, 0, 1}));
    CHECK(mobius_order_test(5, r2->monomial(1)).is_identity_power);

    // F5[u]/(u^3): psi(u) = u^2 != 0, so M_u^5 != Id
    auto r3 = mk_ring(RingDescriptor::artin_modulus(5, 1, "u", {0, 0, 0, 1}));
    CHECK_FALSE(mobius_order_test(5, r3->monomial(1)).is_identity_power);
}

TEST_CASE("three-way agreement on random Artin inputs") {
    std::mt19937 rng(97);
    for (long p : {3, 5, 7}) {
        std::vector<RingPtr> menu = {
            mk_ring(RingDescriptor::artin_modulus(p, 1, "u", {0, 0, 1})),
            mk_ring(RingDescriptor::artin_modulus(p, 1, "u", {0, 0, 0, 1})),
            mk_ring(RingDescriptor::artin_modulus(p, 1, "u", {0, 0, 0, 0, 1})),
            mk_ring(RingDescriptor::integers_mod_pn(p, 2)),
            versal_m1_ring(p == 3 ? 5 : p, 2),
        };
        for (const auto& r : menu) {
            std::uniform_int_distribution<std::int64_t> d(0, r->base_mod() - 1);
            for (int t = 0; t < 6; ++t) {
                std::vector<std::int64_t> c(r->basis_size());
                for (auto& x : c) x = d(rng);
                auto e = r->element_from_coeffs(std::move(c));
                auto a = e.nilpotent_part(); // force a into the maximal ideal
                long pp = r->char_p();
                if (pp == 2) continue;
                // internal consistency asserted inside; cross-check against psi(a)
                auto rep = mobius_order_test(pp, a);
                auto psival = psi_poly(pp).psi.evaluate(a);
                CHECK(rep.is_identity_power == psival.is_zero());
            }
        }
    }
}

TEST_CASE("versal ring W(k)[[X]]/(psi) carries an order-p family member") {
    auto r5 = versal_m1_check(5, 3);
    CHECK(r5.ring_name == "Z/5^3[X]/(X^2+5*X+5)");
    CHECK(r5.psi_eisenstein);
    CHECK(r5.order_p_matrix);
    CHECK(r5.order_p_series);

    auto r7 = versal_m1_check(7, 3);
    CHECK(r7.psi.degree() == 3);
    CHECK(r7.order_p_matrix);

    CHECK_THROWS_AS(versal_m1_check(3, 3), input_error); // rigid
    CHECK_THROWS_AS(versal_m1_check(4, 3), input_error);
}

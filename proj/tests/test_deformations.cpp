#include "doctest.h"

#include "wildram/cohomology.hpp"
#include "wildram/deformations.hpp"
#include "wildram/errors.hpp"

#include <random>

using namespace wildram;

namespace {

RingPtr F(std::int64_t p) { return mk_ring(RingDescriptor::prime_field(p)); }

RingPtr Fu(std::int64_t p, long d, const char* var = "u") {
    std::vector<std::int64_t> f(d + 1, 0);
    f[d] = 1;
    return mk_ring(RingDescriptor::artin_modulus(p, 1, var, std::move(f)));
}

} // namespace

TEST_CASE("order condition: spec examples") {
    auto k5 = F(5);
    auto r1 = order_condition_check(5, 2, k5->one());
    CHECK(r1.series_order_p);
    CHECK(r1.sum_vanishes);

    auto r4 = Fu(5, 4);
    auto r2 = order_condition_check(5, 2, r4->one() + r4->monomial(1));
    CHECK(r2.series_order_p);
    CHECK(r2.sum_vanishes);
    CHECK(r2.geometric_sum.is_zero());

    auto r5 = Fu(5, 5);
    auto r3 = order_condition_check(5, 2, r5->one() + r5->monomial(1));
    CHECK_FALSE(r3.series_order_p);
    CHECK_FALSE(r3.sum_vanishes);
    CHECK(r3.geometric_sum == r5->monomial(4)); // ((1+u)^5 - 1)/u = u^4
}

TEST_CASE("order condition agreement on a randomized menu") {
    std::mt19937 rng(211);
    for (long p : {3, 5, 7}) {
        for (long m : {2, 3, 4, 6}) {
            if (m % p == 0) continue;
            std::vector<RingPtr> menu = {F(p), Fu(p, 2, "eps"), Fu(p, 3), Fu(p, 4),
                                         Fu(p, 5), Fu(p, 6),
                                         mk_ring(RingDescriptor::integers_mod_pn(p, 2)),
                                         mk_ring(RingDescriptor::artin_trunc(p, 1, {"x", "y"}, 3))};
            int instances = 0;
            for (const auto& r : menu) {
                std::uniform_int_distribution<std::int64_t> d(0, r->base_mod() - 1);
                for (int t = 0; t < 7; ++t) {
                    std::vector<std::int64_t> c(r->basis_size());
                    for (auto& x : c) x = d(rng);
                    auto a = r->one() + r->element_from_coeffs(std::move(c)).nilpotent_part();
                    CHECK_NOTHROW(order_condition_check(p, m, a));
                    ++instances;
                }
            }
            CHECK(instances >= 50);
        }
    }
}

TEST_CASE("obstruction across F5[u]/(u^5) -> F5[u]/(u^4) at a' = 1 + u, m = 2") {
    auto ap = Fu(5, 5);
    auto a = Fu(5, 4);
    auto ext = small_extension(ap, a);
    auto rep = obstruction_class(5, 2, ext, ap->one() + ap->monomial(1));

    // defect = -(1/2) u^4 T^3 exactly; -(1/2) = 2 in F_5
    CHECK(rep.defect_matches_formula);
    CHECK_FALSE(rep.class_vanishes);
    auto expected_coeff = -(ap->from_int(2).inverse()) * ap->monomial(4);
    CHECK(rep.defect.coeff(3) == expected_coeff);
    CHECK(rep.defect.coeff(3) == ap->from_int(2) * ap->monomial(4));
    CHECK(rep.geometric_sum == ap->monomial(4));
    CHECK(rep.nontriviality_inequality);
}

TEST_CASE("obstruction vanishes for the constant lift a' = 1") {
    auto ap = Fu(5, 5);
    auto a = Fu(5, 4);
    auto ext = small_extension(ap, a);
    auto rep = obstruction_class(5, 2, ext, ap->one());
    CHECK(rep.class_vanishes);
    CHECK(rep.defect_matches_formula);
    CHECK_FALSE(rep.defect.valuation().has_value()); // zero defect
}

TEST_CASE("non-triviality inequality is false exactly at (m,p) = (1,3)") {
    for (long p : {3, 5, 7}) {
        for (long m = 1; m <= 9; ++m) {
            if (m % p == 0) continue;
            bool ineq = (m + 1) * p < p * ((2 * (m + 1) * (p - 1)) / p);
            CHECK(ineq == !(m == 1 && p == 3));
        }
    }
}

TEST_CASE("m = 1 obstruction: matrix, Chebyshev and series routes agree") {
    // A' = F5[u]/(u^3) -> A = F5[u]/(u^2); a = u has psi(u) = u^2 = 0 in A
    auto ap = Fu(5, 3);
    auto a = Fu(5, 2);
    auto ext = small_extension(ap, a);
    auto rep = obstruction_class(5, 1, ext, ap->monomial(1));
    CHECK_FALSE(rep.class_vanishes); // psi(u) = u^2 + 5u + 5 = u^2 != 0 in A'
    CHECK(rep.c_p.has_value());
    CHECK(*rep.c_p != 0);
    CHECK(rep.defect_matches_formula);
    CHECK(rep.chebyshev_vanishes == false);

    // zero lift: sigma_0 lifts freely
    auto rep0 = obstruction_class(5, 1, ext, ap->zero());
    CHECK(rep0.class_vanishes);
    CHECK(*rep0.c_p == 0);
    CHECK(rep0.chebyshev_vanishes == true);
}

TEST_CASE("generic obstruction equivalence on a sweep") {
    std::mt19937 rng(31);
    for (long p : {3, 5}) {
        for (long m : {2, 4}) {
            if (m % p == 0) continue;
            for (long d : {2, 3, 4}) {
                auto ap = Fu(p, d + 1);
                auto a = Fu(p, d);
                auto ext = small_extension(ap, a);
                std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
                for (int t = 0; t < 5; ++t) {
                    // a' = 1 + (random nilpotent with sum vanishing in A)
                    std::vector<std::int64_t> c(ap->basis_size(), 0);
                    for (int i = 1; i < ap->basis_size(); ++i) c[i] = dist(rng);
                    auto aprime = ap->one() + ap->element_from_coeffs(std::move(c));
                    auto red = ext.reduce(aprime);
                    RingElement sum = a->zero(), pw = a->one();
                    for (long i = 0; i < p; ++i) {
                        sum = sum + pw;
                        pw = pw * red;
                    }
                    if (!sum.is_zero()) continue; // precondition fails: skip
                    auto rep = obstruction_class(p, m, ext, aprime);
                    CHECK(rep.defect_matches_formula);
                    CHECK(rep.class_vanishes == rep.geometric_sum.is_zero());
                    CHECK(rep.class_vanishes == !rep.defect.valuation().has_value());
                }
            }
        }
    }
}

TEST_CASE("Krull dimensions from thmGM") {
    auto r53 = krull_dim_local(5, 3);
    CHECK(r53.q == 1);
    CHECK(r53.l == 2);
    CHECK(r53.krull_absolute == 1);
    CHECK_FALSE(r53.chain_matches); // chain gives q + 1 = 2

    auto r54 = krull_dim_local(5, 4);
    CHECK(r54.q == 1);
    CHECK(r54.l == 1);
    CHECK(r54.krull_absolute == 2);
    CHECK(r54.chain_matches);

    auto r2 = krull_dim_local(2, 5);
    CHECK(r2.krull_relative == 3);
    CHECK(r2.krull_absolute == 4);
    CHECK(r2.chain_matches);

    CHECK(krull_dim_local(3, 1).rigid);
    CHECK_FALSE(krull_dim_local(3, 1).complete_intersection);
    CHECK(krull_dim_local(5, 2).complete_intersection); // m < p - 1
    CHECK(krull_dim_local(7, 2).complete_intersection);
    CHECK_FALSE(krull_dim_local(5, 6).complete_intersection);
    CHECK_THROWS_AS(krull_dim_local(5, 10), input_error);
}

TEST_CASE("the chain m + 2 - floor(beta/p) equals q + 1 for every l") {
    for (long p : {3, 5, 7}) {
        for (long m = 1; m <= 13; ++m) {
            if (m % p == 0) continue;
            auto kr = krull_dim_local(p, m);
            CHECK(kr.krull_chain == kr.q + 1);
            CHECK(kr.chain_matches == (kr.l == 1));
        }
    }
}

TEST_CASE("p = 2 is unobstructed: tangent dimension equals relative Krull dimension") {
    for (long m = 1; m <= 13; m += 2) {
        auto kr = krull_dim_local(2, m);
        auto [h1, h2] = h_dims_formula(2, (m + 1) * (2 - 1));
        CHECK(kr.krull_relative == h1);
        CHECK(h1 == h2);
    }
}

TEST_CASE("global dimension report: (5, {2}) raises flags") {
    auto rep = global_dim_report(5, {2}, 0);
    CHECK(rep.points.size() == 1);
    CHECK(rep.points[0].dim_local == 1);
    CHECK(rep.dim_h1_global_formula == 2); // -3 + ceil(24/5) = 2
    CHECK(rep.n_prime_formula == -1);
    CHECK(rep.n_prime_exact == 0);
    CHECK(rep.dim_h1_exact == 1);
    CHECK_FALSE(rep.flags.empty());
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "h1-global-formula-vs-exact") !=
          rep.flags.end());
    CHECK(std::find(rep.flags.begin(), rep.flags.end(), "nprime-formula-negative") !=
          rep.flags.end());
    // the exact chain is still consistent with the moduli dimension N - 2 = 1
    CHECK(rep.krull_global_exact == rep.moduli_dim);
}

TEST_CASE("global dimension report: (5, {4}) is consistent") {
    auto rep = global_dim_report(5, {4}, 0);
    CHECK(rep.points[0].krull_local == 2);
    CHECK(rep.n_prime_formula == 1);
    CHECK(rep.krull_global_exact == 3);
    CHECK(rep.moduli_dim == 3);
    CHECK(rep.dim_h1_exact == rep.dim_h1_global_formula);
    CHECK(rep.flags.empty());
}

TEST_CASE("global dimension report: rigid (3, {1})") {
    auto rep = global_dim_report(3, {1}, 0);
    CHECK(rep.points[0].dim_local == 0);
    CHECK(rep.points[0].beta == 4);
}

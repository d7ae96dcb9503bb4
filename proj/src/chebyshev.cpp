#include "wildram/chebyshev.hpp"
#include "wildram/automorphisms.hpp"
#include "wildram/errors.hpp"

namespace wildram {

namespace {

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace

ChebyshevPair cheb_polys(long p) {
    if (!is_prime(p) || p == 2) throw input_error("cheb_polys needs an odd prime");
    QPoly t, s;
    // T_p(X) = (1/2) sum_l C(p-l, l) p/(p-l) (-1)^l (2X)^{p-2l}
    for (long l = 0; l <= p / 2; ++l) {
        Rational c = Rational(binomial(p - l, l)) * Rational(p, p - l) * Rational(1, 2);
        if (l % 2) c = -c;
        c *= Rational(Integer(1) << (p - 2 * l));
        t = t + QPoly::monomial(c, p - 2 * l);
    }
    // S_{p-1}(X) = sum_l C(p-1-l, l) (-1)^l (2X)^{p-1-2l}
    for (long l = 0; l <= (p - 1) / 2; ++l) {
        Rational c = Rational(binomial(p - 1 - l, l));
        if (l % 2) c = -c;
        c *= Rational(Integer(1) << (p - 1 - 2 * l));
        s = s + QPoly::monomial(c, p - 1 - 2 * l);
    }

    // self-check against the defining identities in Z[Z, Z^{-1}]
    QLaurent half_x =
        QLaurent::monomial(Rational(1, 2), 1) + QLaurent::monomial(Rational(1, 2), -1);
    QLaurent lhs_t = QLaurent::substitute_poly(t, half_x) + QLaurent::substitute_poly(t, half_x);
    QLaurent rhs_t = QLaurent::monomial(1, p) + QLaurent::monomial(1, -p);
    if (!(lhs_t == rhs_t)) throw internal_error("T_p fails its defining identity");
    QLaurent zmz = QLaurent::monomial(1, 1) - QLaurent::monomial(1, -1);
    QLaurent lhs_s = zmz * QLaurent::substitute_poly(s, half_x);
    QLaurent rhs_s = QLaurent::monomial(1, p) - QLaurent::monomial(1, -p);
    if (!(lhs_s == rhs_s)) throw internal_error("S_{p-1} fails its defining identity");

    return ChebyshevPair{p, std::move(t), std::move(s)};
}

PsiData psi_poly(long p) {
    auto cheb = cheb_polys(p);
    PsiData d;
    d.p = p;

    // phi(X) = sum_l C(p-1-l, l) (-1)^l (2(X+1))^{(p-1)/2 - l}
    QPoly two_x1 = QPoly::monomial(2, 1) + QPoly::constant(2);
    for (long l = 0; l <= (p - 1) / 2; ++l) {
        Rational c = Rational(binomial(p - 1 - l, l));
        if (l % 2) c = -c;
        QPoly pw = QPoly::constant(1);
        for (long i = 0; i < (p - 1) / 2 - l; ++i) pw = pw * two_x1;
        d.phi = d.phi + pw.scaled(c);
    }
    // psi(X) = phi(X/2 + 1) = sum_l C(p-1-l, l) (-1)^l (X+4)^{(p-1)/2 - l}
    QPoly x4 = QPoly::x() + QPoly::constant(4);
    for (long l = 0; l <= (p - 1) / 2; ++l) {
        Rational c = Rational(binomial(p - 1 - l, l));
        if (l % 2) c = -c;
        QPoly pw = QPoly::constant(1);
        for (long i = 0; i < (p - 1) / 2 - l; ++i) pw = pw * x4;
        d.psi = d.psi + pw.scaled(c);
    }
    if (!(d.psi == d.phi.substitute(QPoly::monomial(Rational(1, 2), 1) + QPoly::constant(1))))
        throw internal_error("psi(X) != phi(X/2 + 1)");

    // U = -phi/2; V = (1/4) sum_l C(p-l, l) p/(p-l) (-1)^l (2(X+1))^{(p+1)/2 - l}
    d.bezout_u = d.phi.scaled(Rational(-1, 2));
    for (long l = 0; l <= p / 2; ++l) {
        Rational c = Rational(binomial(p - l, l)) * Rational(p, p - l) * Rational(1, 4);
        if (l % 2) c = -c;
        QPoly pw = QPoly::constant(1);
        for (long i = 0; i < (p + 1) / 2 - l; ++i) pw = pw * two_x1;
        d.bezout_v = d.bezout_v + pw.scaled(c);
    }

    QPoly lhs = d.bezout_u * (cheb.t - QPoly::constant(1)) + d.bezout_v * cheb.s;
    d.bezout_exact = lhs == d.phi;
    if (!d.bezout_exact) throw internal_error("Bezout identity U(T_p - 1) + V S_{p-1} = phi fails");

    d.denominators_pow2 = true;
    for (const QPoly* poly : {&d.bezout_u, &d.bezout_v}) {
        for (const auto& c : poly->coeffs()) {
            if (c == 0) continue;
            Integer den = denominator(c);
            while (den % 2 == 0) den /= 2;
            if (den != 1) d.denominators_pow2 = false;
        }
    }
    if (!d.bezout_u.p_integral(p) || !d.bezout_v.p_integral(p))
        throw internal_error("Bezout cofactors are not p-integral");

    // Eisenstein shape of psi at p
    const long deg = d.psi.degree();
    d.psi_eisenstein = deg == (p - 1) / 2 && d.psi.coeff(deg) == 1;
    for (long i = 0; i < deg && d.psi_eisenstein; ++i) {
        const Rational& c = d.psi.coeff(i);
        if (c == 0) continue;
        long v = p_valuation(c, p);
        if (v < 1) d.psi_eisenstein = false;
        if (i == 0 && v != 1) d.psi_eisenstein = false;
    }
    if (d.psi.coeff(0) == 0) d.psi_eisenstein = false;
    return d;
}

Mat2 Mat2::eye(const RingPtr& ring) {
    return Mat2{ring->one(), ring->zero(), ring->zero(), ring->one()};
}

Mat2 Mat2::mobius(const RingElement& param) {
    auto ring = param.ring();
    return Mat2{ring->one(), param, ring->one(), ring->one() + param};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::pow(long e) const {
    Mat2 r = eye(a.ring());
    Mat2 base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

bool Mat2::operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

RingElement Mat2::det() const { return a * d - b * c; }

bool Mat2::is_identity() const { return *this == eye(a.ring()); }

MobiusOrderReport mobius_order_test(long p, const RingElement& a) {
    if (!is_prime(p) || p == 2) throw input_error("mobius_order_test needs an odd prime");
    auto ring = a.ring();
    if (!ring->is_rationals() && ring->char_p() == 2)
        throw input_error("2 must be a unit for the Chebyshev evaluation");

    MobiusOrderReport rep;
    Mat2 m = Mat2::mobius(a);
    if (!m.det().is_one()) throw internal_error("det M_a != 1");
    rep.via_matrix = m.pow(p).is_identity();

    auto cheb = cheb_polys(p);
    RingElement x = a * ring->from_rational(Rational(1, 2)) + ring->one();
    rep.t_eval = cheb.t.evaluate(x) - ring->one();
    rep.s_eval = cheb.s.evaluate(x);
    rep.via_chebyshev = rep.t_eval.is_zero() && rep.s_eval.is_zero();

    if (!ring->is_rationals() && ring->char_p() == p && a.residue() == 0) {
        // composition through a nilpotent constant term costs (index - 1)
        // digits per step; size the window for p compositions
        long prec = 6 + p * (ring->length() + 2);
        auto sigma = standard_sigma(p, 1, ring, a, prec);
        auto ord = aut_order(sigma, p);
        rep.via_series = ord == 1 || ord == p;
    }

    if (rep.via_matrix != rep.via_chebyshev ||
        (rep.via_series && *rep.via_series != rep.via_matrix))
        throw verification_error("Moebius order verdicts disagree");
    rep.is_identity_power = rep.via_matrix;
    return rep;
}

RingPtr versal_m1_ring(long p, long n_precision) {
    auto data = psi_poly(p);
    std::int64_t mod = prime_power(p, n_precision);
    std::vector<std::int64_t> f;
    for (long i = 0; i <= data.psi.degree(); ++i) {
        const Rational& c = data.psi.coeff(i);
        if (denominator(c) != 1) throw internal_error("psi is not integral");
        Integer r = numerator(c) % mod;
        if (r < 0) r += mod;
        f.push_back(static_cast<std::int64_t>(r));
    }
    return mk_ring(RingDescriptor::artin_modulus(p, n_precision, "X", std::move(f)));
}

VersalM1Report versal_m1_check(long p, long n_precision) {
    if (!is_prime(p) || p <= 3)
        throw input_error("versal m = 1 check needs p > 3 (p = 3 is rigid)");
    if (n_precision < 1) throw input_error("n_precision must be >= 1");

    VersalM1Report rep;
    rep.p = p;
    rep.n_precision = n_precision;
    auto data = psi_poly(p);
    rep.psi = data.psi;
    rep.psi_eisenstein = data.psi_eisenstein;

    auto ring = versal_m1_ring(p, n_precision);
    rep.ring_name = ring->name();
    RingElement x = ring->monomial(1);
    rep.order_p_matrix = Mat2::mobius(x).pow(p).is_identity();
    long prec = 6 + p * (ring->length() + 2);
    auto sigma = standard_sigma(p, 1, ring, x, prec);
    rep.order_p_series = aut_order(sigma, p) == p;
    if (!rep.order_p_matrix || !rep.order_p_series)
        throw verification_error("sigma_X does not have order p over W(k)[[X]]/(psi)");
    return rep;
}

} // namespace wildram

#include "wildram/automorphisms.hpp"
#include "wildram/errors.hpp"

#include <algorithm>

namespace wildram {

Automorphism make_automorphism(Series image_of_T) {
    auto ring = image_of_T.ring();
    if (image_of_T.valuation().value_or(0) < 0)
        throw input_error("automorphism image must be a power series");
    RingElement c0 = image_of_T.low() > 0 ? ring->zero() : image_of_T.coeff(0);
    if (!c0.is_zero() && c0.is_unit())
        throw input_error("automorphism image has unit constant term: not continuous");
    RingElement c1 = image_of_T.prec() > 1 ? image_of_T.coeff(1) : ring->zero();
    if (!c1.is_unit())
        throw input_error("automorphism image needs a unit linear coefficient");
    return Automorphism{ring, std::move(image_of_T)};
}

Automorphism identity_automorphism(RingPtr ring, long prec) {
    return Automorphism{ring, Series::identity(ring, prec)};
}

Series aut_apply(const Automorphism& s, const Series& x) {
    if (x.valuation().value_or(0) >= 0) return compose(x, s.image);
    // split off the polar tail
    Series pos = x;
    Series inv = s.image.inverse();
    Series acc = Series::zero(x.ring(), x.prec());
    for (long e = x.low(); e < 0; ++e) {
        RingElement c = x.coeff(e);
        if (c.is_zero()) continue;
        pos = pos - Series::monomial(c, e, x.prec());
        acc = acc + inv.pow(-e).scaled(c);
    }
    return acc + compose(pos, s.image);
}

Automorphism aut_compose(const Automorphism& s, const Automorphism& t) {
    // (s o t)(T) = s(t(T)) = t_image evaluated along s_image
    return make_automorphism(compose(t.image, s.image));
}

Automorphism aut_inverse(const Automorphism& s) { return make_automorphism(reversion(s.image)); }

Automorphism aut_power(const Automorphism& s, long e) {
    if (e < 0) return aut_power(aut_inverse(s), -e);
    Automorphism acc = identity_automorphism(s.ring, s.prec());
    for (long i = 0; i < e; ++i) acc = aut_compose(acc, s);
    return acc;
}

std::optional<long> aut_order(const Automorphism& s, long cap) {
    const long window = s.prec();
    Automorphism pw = s;
    for (long e = 1; e <= cap; ++e) {
        if (equal_mod(pw.image, Series::identity(s.ring, window), std::min(window, pw.prec())))
            return e;
        pw = aut_compose(pw, s);
    }
    return std::nullopt;
}

std::optional<long> aut_order_certified(const std::function<Automorphism(long)>& builder,
                                        long prec, long cap) {
    auto lo = aut_order(builder(prec), cap);
    auto hi = aut_order(builder(2 * prec), cap);
    if (lo != hi)
        throw precision_error("order not stable under precision doubling");
    return lo;
}

long conductor(const Automorphism& s) {
    Series d = s.image - Series::identity(s.ring, s.prec());
    auto v = d.valuation();
    if (!v) throw input_error("conductor of the identity automorphism");
    return *v - 1;
}

RamificationData ramification_data(const Automorphism& s, long order_cap) {
    const std::int64_t p = s.ring->char_p();
    if (p == 0) throw input_error("ramification data needs positive residue characteristic");
    auto ord = aut_order(s, order_cap);
    if (!ord) throw input_error("automorphism order not established below the cap");
    long d = *ord;
    if (d != 1) {
        long q = d;
        while (q % p == 0) q /= p;
        if (q != 1) throw input_error("order is not a p-power within precision");
    }

    RamificationData r;
    r.order = d;
    Automorphism pw = s;
    for (long j = 1; j < d; ++j) {
        Series diff = pw.image - Series::identity(s.ring, pw.prec());
        auto v = diff.valuation();
        if (!v) throw internal_error("power collapsed to identity before the order");
        r.breaks.push_back(*v);
        pw = aut_compose(pw, s);
    }
    if (d > 1) {
        long max_break = *std::max_element(r.breaks.begin(), r.breaks.end());
        for (long i = 0; i + 1 <= max_break; ++i) {
            long size = 1;
            for (long b : r.breaks)
                if (b >= i + 1) ++size;
            r.filtration.push_back(size);
        }
        long beta_filtration = 0;
        for (long size : r.filtration) beta_filtration += size - 1;
        long beta_breaks = 0;
        for (long b : r.breaks) beta_breaks += b;
        if (beta_filtration != beta_breaks)
            throw internal_error("two different-exponent computations disagree");
        r.beta = beta_breaks;
        r.conductor = r.breaks.front() - 1;
        r.conductor_prime_to_p = r.conductor % p != 0;
        if (d == p && r.beta != (r.conductor + 1) * (p - 1))
            throw verification_error("beta != (m+1)(p-1) for an order-p automorphism");
    }
    return r;
}

Series norm_series(const Automorphism& s, long order) {
    Series y = Series::identity(s.ring, s.prec());
    Automorphism pw = s;
    for (long i = 1; i < order; ++i) {
        y = y * pw.image;
        pw = aut_compose(pw, s);
    }
    auto v = y.valuation();
    if (!v || *v != order) throw verification_error("norm series valuation differs from the order");
    Series moved = aut_apply(s, y);
    if (!equal_mod(moved, y, std::min(moved.prec(), y.prec())))
        throw verification_error("norm series is not fixed by the automorphism");
    return y;
}

long default_sigma_prec(long p, long m) {
    long beta = (m + 1) * (p - 1);
    return std::max<long>(2 * beta + 2 * p, 64);
}

Automorphism standard_sigma(long p, long m, const RingPtr& ring, const RingElement& a, long prec) {
    if (!is_prime(p)) throw input_error("non-prime p");
    if (ring->char_p() != p) throw input_error("ring residue characteristic differs from p");
    if (m < 1) throw input_error("conductor must be positive");
    if (m % p == 0) throw input_error("exceptional wild case p | m is not supported");
    if (prec < m + 2) throw input_error("precision too small to carry the conductor");

    if (m == 1) {
        if (a.residue() != 0) throw input_error("m = 1 family needs a in the maximal ideal");
        Series num = Series::monomial(a, 0, prec) + Series::identity(ring, prec);
        Series den =
            Series::constant(ring->one() + a, prec) + Series::identity(ring, prec);
        return make_automorphism((num * den.inverse()).truncated(prec));
    }
    if (a.residue() != 1) throw input_error("m > 1 family needs a in 1 + M_A");
    Series s = Series::constant(a, prec) + Series::monomial(ring->one(), m, prec);
    Series root = mth_root_unit(s, m);
    Series image = (Series::identity(ring, prec + 1) * root.inverse()).truncated(prec);
    return make_automorphism(std::move(image));
}

} // namespace wildram

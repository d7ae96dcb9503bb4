#include "wildram/artin_schreier.hpp"
#include "wildram/cohomology.hpp"
#include "wildram/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wildram {

std::string PolarPart::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long j = 1; j <= length(); ++j) {
        if (alpha[j - 1] == 0) continue;
        if (!first) os << " + ";
        os << alpha[j - 1] << "*T^-" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ASClass ASClass::from_series(long p, const Series& s) {
    if (s.ring()->kind() != RingKind::PrimeField || s.ring()->char_p() != p)
        throw input_error("Artin-Schreier classes live over F_p");
    ASClass c;
    c.p = p;
    for (long e = s.low(); e < 0; ++e) {
        auto coeff = s.coeff(e);
        if (!coeff.is_zero()) c.tail[-e] = coeff.residue();
    }
    return c;
}

std::string ASClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
        if (it->second == 0) continue;
        if (!first) os << " + ";
        os << it->second << "*T^-" << it->first;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

void normalize_tail(std::map<long, std::int64_t>& tail, long p) {
    for (auto it = tail.begin(); it != tail.end();) {
        it->second = ((it->second % p) + p) % p;
        if (it->second == 0 || it->first < 1)
            it = tail.erase(it);
        else
            ++it;
    }
}

} // namespace

PolarReduction polar_reduce(const ASClass& c) {
    const long p = c.p;
    if (!is_prime(p)) throw input_error("non-prime p");
    auto tail = c.tail;
    normalize_tail(tail, p);

    PolarReduction out;
    out.witness.p = p;
    while (true) {
        // largest index j with p | j and alpha_j != 0
        long j = -1;
        for (auto it = tail.rbegin(); it != tail.rend(); ++it)
            if (it->first % p == 0) {
                j = it->first;
                break;
            }
        if (j < 0) break;
        long level = j / p;
        // beta^p = alpha_j; Frobenius is the identity on F_p
        std::int64_t beta = tail[j];
        // subtract p(beta / t'^level) = beta / t'^{p*level} - beta / t'^{level}
        tail[j] = 0;
        tail[level] = ((tail[level] + beta) % p + p) % p;
        out.witness.tail[level] = ((out.witness.tail[level] + beta) % p + p) % p;
        normalize_tail(tail, p);
        ++out.steps;
    }

    out.polar.p = p;
    long m = tail.empty() ? 0 : tail.rbegin()->first;
    out.polar.alpha.assign(m, 0);
    for (const auto& [j, a] : tail) out.polar.alpha[j - 1] = a;
    normalize_tail(out.witness.tail, p);

    // verify c - polar - (w^p - w) has no negative exponents
    std::map<long, std::int64_t> resid = c.tail;
    for (const auto& [j, a] : tail) resid[j] -= a;
    for (const auto& [l, b] : out.witness.tail) {
        resid[l * p] -= b; // beta^p / t'^{pl}
        resid[l] += b;
    }
    normalize_tail(resid, p);
    out.witness_verified = resid.empty();
    if (!out.witness_verified) throw internal_error("polar reduction witness failed");
    return out;
}

HarbaterCensus harbater_census(long p, const std::vector<long>& conductors) {
    if (!is_prime(p)) throw input_error("non-prime p");
    HarbaterCensus hc;
    for (long m : conductors) {
        if (m < 1) throw input_error("conductors must be >= 1");
        if (m % p == 0) throw input_error("conductor divisible by p");
        // free polar coefficient indices: j in [1, m] with p not dividing j
        long free_count = 0;
        for (long j = 1; j <= m; ++j)
            if (j % p != 0) ++free_count;
        if (free_count != m - m / p) throw internal_error("census disagrees with the formula");
        hc.r += 1;                    // the top coefficient is constrained nonzero
        hc.r_prime += free_count - 1; // the rest are free
        hc.dim += free_count;
    }
    return hc;
}

long harbater_dim(long p, const std::vector<long>& conductors) {
    return harbater_census(p, conductors).dim;
}

long genus_rh(long p, const std::vector<long>& conductors, long g_quotient) {
    if (!is_prime(p)) throw input_error("non-prime p");
    if (g_quotient < 0) throw input_error("negative quotient genus");
    long sum_beta = 0;
    for (long m : conductors) {
        if (m < 1 || m % p == 0) throw input_error("conductors must be >= 1 and prime to p");
        sum_beta += (m + 1) * (p - 1);
    }
    long rhs = p * (2 * g_quotient - 2) + sum_beta; // = 2g - 2
    if ((rhs + 2) % 2 != 0) throw input_error("Riemann-Hurwitz parity violated");
    long g = (rhs + 2) / 2;
    if (g < 0) throw input_error("input combination yields negative genus");
    return g;
}

namespace {

// a(t) = t^q + x_1 t^{q-1} + ... evaluated at a series
Series eval_deformation(const std::vector<RingElement>& coeffs, const Series& t, long prec) {
    auto ring = t.ring();
    Series acc = Series::zero(ring, prec);
    for (const auto& c : coeffs) {
        acc = ((acc * t) + Series::constant(c, prec)).truncated(prec);
    }
    return acc;
}

} // namespace

DeformedCover build_deformed_cover(long p, long m, const RingPtr& ring,
                                   const std::vector<RingElement>& xs, long prec) {
    if (!is_prime(p)) throw input_error("non-prime p");
    if (m < 1 || m % p == 0) throw input_error("conductor must be >= 1 and prime to p");
    if (ring->is_rationals() || ring->char_p() != p)
        throw input_error("deformed covers live over Artin rings of characteristic p");
    const long q = (m + p - 1) / p;
    const long l = q * p - m;
    const long n_params = l == 1 ? q : q - 1;
    if (static_cast<long>(xs.size()) != n_params)
        throw input_error("expected " + std::to_string(n_params) + " deformation parameters");
    for (const auto& x : xs)
        if (x.is_unit()) throw input_error("deformation parameters must be nilpotent");
    if (prec == 0) prec = default_sigma_prec(p, m) + m + 8;
    const long work = prec + l * (p - 1) + p + 2;

    // a(t) coefficients by descending degree: t^q + x_1 t^{q-1} + ...
    std::vector<RingElement> acoeffs;
    acoeffs.push_back(ring->one());
    for (const auto& x : xs) acoeffs.push_back(x);
    if (l != 1) acoeffs.push_back(ring->zero()); // no constant term when l != 1

    DeformedCover cov;
    cov.p = p;
    cov.m = m;
    cov.q = q;
    cov.l = l;
    cov.ring = ring;
    cov.xs = xs;

    const Series eta = Series::identity(ring, work);
    const long cap = 64 + ring->length();

    Series t = Series::zero(ring, work);
    if (l == 1) {
        // t = xi^p - xi a(t)^{p-1}, Newton on F(t) = xi^p - xi a(t)^{p-1} - t
        t = eta.pow(p).truncated(work);
        long it = 0;
        while (true) {
            Series a_t = eval_deformation(acoeffs, t, work);
            Series f = (eta.pow(p) - eta * a_t.pow(p - 1) - t).truncated(work);
            if (!f.valuation().has_value()) break;
            // F'(t) = -1 - xi (p-1) a^{p-2} a'
            Series aprime = Series::zero(ring, work);
            for (size_t i = 0; i + 1 < acoeffs.size(); ++i) {
                long deg = static_cast<long>(acoeffs.size()) - 1 - static_cast<long>(i);
                aprime = aprime + Series::constant(acoeffs[i] * ring->from_int(deg), work) *
                                      t.pow(deg - 1);
            }
            Series fprime = (-Series::constant(ring->one(), work) -
                             eta * a_t.pow(p - 2).scaled(ring->from_int(p - 1)) * aprime)
                                .truncated(work);
            t = (t - f * fprime.inverse()).truncated(work);
            if (++it > cap) throw precision_error("implicit solve did not converge (l = 1)");
        }
    } else {
        // t = eta^p s with s^l = 1 - eta^{l(1-p)} a(t)^{p-1}; Newton on
        // H(s) = s^l - 1 + eta^{l(1-p)} a(eta^p s)^{p-1}
        Series s = Series::constant(ring->one(), work);
        long it = 0;
        while (true) {
            t = (eta.pow(p) * s).truncated(work);
            Series a_t = eval_deformation(acoeffs, t, work);
            Series tail = (Series::monomial(ring->one(), l * (1 - p), kPrecExact) *
                           a_t.pow(p - 1)).truncated(work - l * (p - 1));
            Series h = (s.pow(l) - Series::constant(ring->one(), work) + tail)
                           .truncated(work - l * (p - 1));
            if (!h.valuation().has_value()) break;
            Series aprime = Series::zero(ring, work);
            for (size_t i = 0; i + 1 < acoeffs.size(); ++i) {
                long deg = static_cast<long>(acoeffs.size()) - 1 - static_cast<long>(i);
                aprime = aprime + Series::constant(acoeffs[i] * ring->from_int(deg), work) *
                                      t.pow(deg - 1);
            }
            Series hprime = (s.pow(l - 1).scaled(ring->from_int(l)) +
                             Series::monomial(ring->one(), l * (1 - p) + p, kPrecExact) *
                                 a_t.pow(p - 2).scaled(ring->from_int(p - 1)) * aprime)
                                .truncated(work - l * (p - 1));
            s = (s - h * hprime.inverse()).truncated(work);
            if (++it > cap) throw precision_error("implicit solve did not converge (l != 1)");
        }
        t = (eta.pow(p) * s).truncated(work);
    }
    cov.t_of_uniformizer = t.truncated(prec);

    // defining identity check: t^l = eta^{pl} - eta^l a(t)^{p-1}
    {
        Series a_t = eval_deformation(acoeffs, t, work);
        Series lhs = t.pow(l);
        Series rhs = eta.pow(p * l) - eta.pow(l) * a_t.pow(p - 1);
        long wdw = std::min({lhs.prec(), rhs.prec(), prec + l});
        if (!equal_mod(lhs, rhs, wdw))
            throw internal_error("implicit solution violates the defining equation");
    }

    // sigma(eta) = (eta^l + a(t))^{1/l}; for l = 1 this is xi + a(t)
    Series a_t = eval_deformation(acoeffs, t, work);
    Series sig_img;
    if (l == 1) {
        sig_img = (eta + a_t).truncated(prec);
    } else {
        sig_img = mth_root_unit((eta.pow(l) + a_t).truncated(prec + l - 1), l).truncated(prec);
    }
    cov.sigma = make_automorphism(sig_img);

    // the xs = 0 member over the same ring
    std::vector<RingElement> zero_xs(xs.size(), ring->zero());
    bool all_zero = true;
    for (const auto& x : xs) all_zero &= x.is_zero();
    if (all_zero) {
        cov.sigma0 = cov.sigma;
    } else {
        cov.sigma0 = build_deformed_cover(p, m, ring, zero_xs, prec).sigma;
    }

    auto ord = aut_order(cov.sigma, p);
    if (ord != p) throw verification_error("deformed automorphism does not have order p");
    return cov;
}

DirectionValuation deformation_direction_valuation(long p, long m, long j, long prec) {
    const long q = (m + p - 1) / p;
    const long l = q * p - m;
    const long n_params = l == 1 ? q : q - 1;
    if (j < 1 || j > n_params)
        throw input_error("direction index out of range [1, " + std::to_string(n_params) + "]");

    auto ring = mk_ring(RingDescriptor::artin_trunc(p, 1, {"eps"}, 2));
    std::vector<RingElement> xs(n_params, ring->zero());
    xs[j - 1] = ring->monomial(1);
    auto cov = build_deformed_cover(p, m, ring, xs, prec);

    Series diff = cov.sigma.image - cov.sigma0.image;
    // sigma and sigma_0 agree mod eps; phi_j is the eps-component
    long observed = -1;
    for (long e = std::max<long>(diff.low(), 0); e < diff.prec(); ++e) {
        auto c = diff.coeff(e);
        if (c.is_zero()) continue;
        if (c.coeffs()[0] != 0) throw internal_error("sigma - sigma_0 is not divisible by eps");
        if (observed < 0) observed = e;
    }
    if (observed < 0) throw precision_error("phi_j vanishes to precision");
    DirectionValuation dv{p, m, q, l, j, observed, p * (q - j) - (l - 1)};
    return dv;
}

IndependenceReport independence_check(long p, long m) {
    const long q = (m + p - 1) / p;
    const long l = q * p - m;
    const long n = l == 1 ? q : q - 1;
    IndependenceReport rep;
    rep.p = p;
    rep.m = m;
    rep.q = q;
    rep.l = l;
    rep.n_directions = n;
    if (n == 0) {
        rep.independent = true;
        return rep;
    }

    const long beta = (m + 1) * (p - 1);
    long M = 2 * beta + 2 * p;
    const long prec = beta + M + m + 8;

    // undeformed automorphism over F_p, from the same cover model
    auto fp = mk_ring(RingDescriptor::prime_field(p));
    auto cov0 = build_deformed_cover(p, m, fp, std::vector<RingElement>(n, fp->zero()), prec);
    Automorphism s0 = cov0.sigma;
    Series s0_inv = reversion(s0.image);
    Series y = norm_series(s0, p);
    ThetaWindow w = build_theta_window(s0, p, beta, M);

    auto eps_ring = mk_ring(RingDescriptor::artin_trunc(p, 1, {"eps"}, 2));
    std::vector<std::vector<std::int64_t>> cols;
    for (long j = 1; j <= n; ++j) {
        std::vector<RingElement> xs(n, eps_ring->zero());
        xs[j - 1] = eps_ring->monomial(1);
        auto cov = build_deformed_cover(p, m, eps_ring, xs, prec);
        Series diff = cov.sigma.image - cov.sigma0.image;
        // phi_j over F_p: the eps-component of the difference
        std::vector<std::pair<long, RingElement>> terms;
        long hi = std::min<long>(diff.prec(), prec);
        for (long e = std::max<long>(diff.low(), 0); e < hi; ++e) {
            auto c = diff.coeff(e);
            if (!c.is_zero()) terms.emplace_back(e, fp->from_int(c.coeffs()[1]));
        }
        Series phi = Series::from_terms(fp, terms, hi);
        auto pv = phi.valuation();
        if (!pv) throw precision_error("phi_j vanishes to precision");
        rep.valuations.push_back(*pv);

        // canonical deformation cocycle h = phi o sigma_0^{-1}, transported by dY/deta
        Series h = compose(phi, s0_inv);
        Series moved = transport_to_different(y, ThetaElement{h});
        if (moved.prec() < beta + M)
            throw precision_error("transported class does not cover the window");
        std::vector<std::int64_t> vec(M, 0);
        for (long i = 0; i < M; ++i) {
            const auto* b = moved.block(beta + i);
            vec[i] = b ? ((*b % p) + p) % p : 0;
        }
        // certified cocycle: N kills the class on the window
        auto nimg = w.norm_mat.apply(vec);
        if (std::any_of(nimg.begin(), nimg.end(), [](std::int64_t v) { return v != 0; }))
            throw verification_error("deformation direction is not an N-cocycle");
        cols.push_back(std::move(vec));
    }

    FpMat extra = FpMat::from_columns(cols, p);
    rep.rank = rank_increase(w.delta_mat, extra);
    rep.independent = rep.rank == n;
    return rep;
}

} // namespace wildram

#include "wildram/cohomology.hpp"
#include "wildram/errors.hpp"

#include <algorithm>
#include <map>

namespace wildram {

ThetaElement theta_action(const Automorphism& s, long i, const ThetaElement& x) {
    if (i == 0) return x;
    Automorphism si = aut_power(s, i);
    Series moved = compose(x.h, si.image);
    Series jac = si.image.derivative();
    return ThetaElement{moved * jac.inverse()};
}

std::pair<ThetaElement, ThetaElement> delta_and_norm(const Automorphism& s, long order,
                                                     const ThetaElement& x) {
    Series acc = x.h;
    Series first_moved;
    Automorphism pw = s;
    for (long i = 1; i < order; ++i) {
        Series moved = compose(x.h, pw.image) * pw.image.derivative().inverse();
        if (i == 1) first_moved = moved;
        acc = acc + moved;
        if (i + 1 < order) pw = aut_compose(pw, s);
    }
    if (order == 1) return {ThetaElement{x.h - x.h}, ThetaElement{acc}};
    return {ThetaElement{first_moved - x.h}, ThetaElement{acc}};
}

Series transport_to_different(const Series& norm_y, const ThetaElement& x) {
    return x.h * norm_y.derivative();
}

std::pair<long, long> h_dims_formula(long p_power, long beta) {
    if (beta < 0) throw input_error("negative different exponent");
    long d = (2 * beta) / p_power - (beta + p_power - 1) / p_power;
    return {d, d};
}

ThetaWindow build_theta_window(const Automorphism& s, long p_power, long beta, long M) {
    const auto ring = s.ring;
    if (ring->kind() != RingKind::PrimeField)
        throw input_error("window cohomology is computed over a prime field");
    const std::int64_t p = ring->char_p();
    if (s.prec() < beta + M)
        throw precision_error("automorphism precision below the requested window");

    Series u = s.image.truncated(beta + M);
    FpMat sigma(M, M, p);
    Series pw = u.pow(beta).truncated(beta + M);
    for (long j = 0; j < M; ++j) {
        for (long i = 0; i < M; ++i) {
            const auto* b = pw.block(beta + i);
            sigma.at(i, j) = b ? ((*b % p) + p) % p : 0;
        }
        if (j + 1 < M) pw = (pw * u).truncated(beta + M);
    }
    if (!(sigma.pow(p_power) == FpMat::eye(M, p)))
        throw precision_error("sigma^order is not the identity on the window");

    ThetaWindow w;
    w.beta = beta;
    w.window = M;
    w.p_power = p_power;
    w.delta_mat = sigma - FpMat::eye(M, p);
    FpMat norm(M, M, p);
    FpMat acc = FpMat::eye(M, p);
    for (long i = 0; i < p_power; ++i) {
        norm = norm + acc;
        acc = acc * sigma;
    }
    w.norm_mat = norm;
    w.sigma_mat = std::move(sigma);
    return w;
}

namespace {

struct OrderData {
    long p_power;
    long beta;
    long conductor;
};

OrderData order_data(const Automorphism& s, long p_power) {
    auto rd = ramification_data(s, p_power + 1);
    if (rd.order != p_power) throw input_error("automorphism order differs from the stated p-power");
    return {rd.order, rd.beta, rd.conductor};
}

} // namespace

namespace {

struct ModuleDims {
    std::vector<long> divisors; // finite elementary divisors of E/delta(E)
    long norm_level = -1;       // c with N(E) = Y^c k[[Y]]; -1 when not visible
    bool complete = false;      // rank p^n - 1 reached and norm level visible
};

// E = T^beta k[[T]] is free over k[[Y]] with basis T^{beta+i}, i < p^n.
// Expand delta and N on that basis over k[[Y]]/(Y^K) and reduce.
ModuleDims module_dims_at(const Automorphism& s, long p_power, long beta, long K) {
    const std::int64_t p = s.ring->char_p();
    const long d = p_power;
    const long W = d * K + d;
    ThetaWindow w = build_theta_window(s, d, beta, W);
    Series y = norm_series(s, d).truncated(beta + W);

    auto col_series = [&](const FpMat& mat, long i) {
        std::vector<std::pair<long, RingElement>> terms;
        for (long r = 0; r < W; ++r)
            if (mat.at(r, i) != 0) terms.emplace_back(beta + r, s.ring->from_int(mat.at(r, i)));
        return Series::from_terms(s.ring, terms, beta + W);
    };

    // greedy expansion over the free basis: v_T(Y^e T^{beta+i}) = de + beta + i
    auto expand = [&](Series g, std::vector<std::vector<std::int64_t>>& out) {
        while (true) {
            auto v = g.valuation();
            if (!v || *v >= beta + d * K) break;
            long idx = (*v - beta) % d;
            long e = (*v - beta - idx) / d;
            RingElement c = g.coeff(*v);
            out[idx][e] = ((out[idx][e] + c.residue()) % p + p) % p;
            g = g - (y.pow(e) * Series::monomial(c, beta + idx, g.prec()));
        }
    };

    ModuleDims md;
    std::vector<std::vector<std::int64_t>> entries(static_cast<size_t>(d) * d,
                                                   std::vector<std::int64_t>(K, 0));
    long norm_vt = -1;
    for (long i = 0; i < d; ++i) {
        std::vector<std::vector<std::int64_t>> col(d, std::vector<std::int64_t>(K, 0));
        expand(col_series(w.delta_mat, i), col);
        for (long j = 0; j < d; ++j) entries[j * d + i] = col[j];

        Series nb = col_series(w.norm_mat, i);
        auto nv = nb.valuation();
        if (nv && (norm_vt < 0 || *nv < norm_vt)) norm_vt = *nv;
    }
    md.divisors = smith_divisors_truncated(std::move(entries), d, d, p, K);
    if (norm_vt >= 0) {
        if (norm_vt % d != 0) throw internal_error("norm image is not a Y-series");
        md.norm_level = norm_vt / d;
    }
    md.complete = static_cast<long>(md.divisors.size()) == d - 1 && md.norm_level >= 0 &&
                  (md.divisors.empty() || md.divisors.back() < K - 1);
    return md;
}

} // namespace

CohomologyReport h_dims_bruteforce(const std::function<Automorphism(long)>& builder, long p_power,
                                   const PrecisionPolicy& policy) {
    Automorphism probe = builder(default_sigma_prec(p_power, 2));
    OrderData od = order_data(probe, p_power);
    const long beta = od.beta;
    const long d = p_power;

    CohomologyReport rep;
    rep.p = probe.ring->char_p();
    rep.m = od.conductor;
    rep.p_power = p_power;
    rep.beta = beta;
    std::tie(rep.dim_h1_formula, rep.dim_h2_formula) = h_dims_formula(p_power, beta);

    long K = (2 * beta) / d + 3;
    if (policy.min_series_prec > 64) K = std::max(K, policy.min_series_prec / d);
    const long maxK = std::max((policy.max_window(beta) + d - 1) / d, K + 4);
    while (true) {
        Automorphism s = builder(beta + d * (K + 2) + d + 2);
        ModuleDims a = module_dims_at(s, d, beta, K);
        ModuleDims b = module_dims_at(s, d, beta, K + 2);
        rep.window_used = K;
        rep.series_prec_used = s.prec();
        bool agree = a.complete && b.complete && a.divisors == b.divisors &&
                     a.norm_level == b.norm_level;
        long h1 = 0;
        for (long dv : b.divisors) h1 += dv;
        long h2 = b.norm_level < 0 ? -1 : b.norm_level - (beta + d - 1) / d;
        if (agree) {
            rep.dim_h1_brute = h1;
            rep.dim_h2_brute = h2;
            rep.stabilized = true;
            break;
        }
        if (2 * K > maxK) {
            rep.dim_h1_brute = h1;
            rep.dim_h2_brute = h2;
            rep.stabilized = false;
            break;
        }
        K = 2 * K;
    }

    long reading_ky = rep.dim_h2_formula;
    long reading_kt = p_power * rep.dim_h2_formula;
    bool ky = rep.dim_h2_brute == reading_ky;
    bool kt = rep.dim_h2_brute == reading_kt;
    rep.h2_ideal_reading = ky && kt ? "both" : ky ? "kY" : kt ? "kT" : "none";
    return rep;
}

CohomologyReport cohomology_report(long p, long m, const PrecisionPolicy& policy) {
    if (!is_prime(p)) throw input_error("non-prime p");
    if (m < 1 || m % p == 0) throw input_error("conductor must be positive and prime to p");
    auto ring = mk_ring(RingDescriptor::prime_field(p));
    RingElement a = m == 1 ? ring->zero() : ring->one();
    auto builder = [=](long prec) { return standard_sigma(p, m, ring, a, prec); };
    auto rep = h_dims_bruteforce(builder, p, policy);
    rep.q = (m + p - 1) / p; // q with m = pq - l, l in [1, p-1]
    rep.l = rep.q * p - m;
    return rep;
}

namespace {

// valuation of an F_p coefficient vector (index of first nonzero), or K if zero
long vec_valuation(const std::vector<std::int64_t>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<long>(i);
    return static_cast<long>(v.size());
}

} // namespace

std::vector<long> smith_divisors_truncated(std::vector<std::vector<std::int64_t>> e, long rows,
                                           long cols, std::int64_t p, long K) {
    auto at = [&](long i, long j) -> std::vector<std::int64_t>& { return e[i * cols + j]; };
    auto mul_trunc = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::vector<std::int64_t> r(K, 0);
        for (long i = 0; i < K; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; i + j < K; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
        return r;
    };
    auto unit_inverse = [&](const std::vector<std::int64_t>& u) {
        // inverse of a unit power series mod Y^K
        std::vector<std::int64_t> inv(K, 0);
        std::int64_t u0 = inv_mod(u[0], p);
        inv[0] = u0;
        for (long k = 1; k < K; ++k) {
            std::int64_t acc = 0;
            for (long i = 1; i <= k; ++i) acc = (acc + u[i] * inv[k - i]) % p;
            inv[k] = (p - acc * u0 % p) % p;
        }
        return inv;
    };

    std::vector<long> divisors;
    long t = 0;
    const long nmin = std::min(rows, cols);
    while (t < nmin) {
        long best_v = K, bi = -1, bj = -1;
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j) {
                long v = vec_valuation(at(i, j));
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0 || best_v >= K) break; // all remaining entries vanish mod Y^K
        if (bi != t)
            for (long j = 0; j < cols; ++j) std::swap(at(bi, j), at(t, j));
        if (bj != t)
            for (long i = 0; i < rows; ++i) std::swap(at(i, bj), at(i, t));
        // normalize the pivot to Y^v (monic) by a unit row scaling
        std::vector<std::int64_t> unit(K, 0);
        for (long i = best_v; i < K; ++i) unit[i - best_v] = at(t, t)[i];
        auto uinv = unit_inverse(unit);
        for (long j = t; j < cols; ++j) at(t, j) = mul_trunc(at(t, j), uinv);
        // eliminate the rest of the pivot column and row
        for (long i = t + 1; i < rows; ++i) {
            long v = vec_valuation(at(i, t));
            if (v >= K) continue;
            // quotient = entry / Y^{best_v} (exact since v >= best_v after pivoting)
            std::vector<std::int64_t> q(K, 0);
            for (long x = best_v; x < K; ++x) q[x - best_v] = at(i, t)[x];
            for (long j = t; j < cols; ++j) {
                auto sub = mul_trunc(q, at(t, j));
                for (long x = 0; x < K; ++x) at(i, j)[x] = ((at(i, j)[x] - sub[x]) % p + p) % p;
            }
        }
        for (long j = t + 1; j < cols; ++j) {
            long v = vec_valuation(at(t, j));
            if (v >= K) continue;
            std::vector<std::int64_t> q(K, 0);
            for (long x = best_v; x < K; ++x) q[x - best_v] = at(t, j)[x];
            for (long i = t; i < rows; ++i) {
                auto sub = mul_trunc(q, at(i, t));
                for (long x = 0; x < K; ++x) at(i, j)[x] = ((at(i, j)[x] - sub[x]) % p + p) % p;
            }
        }
        divisors.push_back(best_v);
        ++t;
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

namespace {

// echelonize vectors by valuation: returns basis with strictly increasing
// leading indices (each normalized to leading coefficient 1)
std::vector<std::vector<std::int64_t>> valuation_echelon(std::vector<std::vector<std::int64_t>> vs,
                                                         std::int64_t p) {
    std::vector<std::vector<std::int64_t>> out;
    std::map<long, std::vector<std::int64_t>> by_lead;
    for (auto& v : vs) {
        std::vector<std::int64_t> cur = std::move(v);
        while (true) {
            long lead = vec_valuation(cur);
            if (lead >= static_cast<long>(cur.size())) break;
            auto it = by_lead.find(lead);
            if (it == by_lead.end()) {
                std::int64_t inv = inv_mod(cur[lead], p);
                for (auto& x : cur) x = x * inv % p;
                by_lead.emplace(lead, cur);
                break;
            }
            std::int64_t f = cur[lead] % p;
            const auto& w = it->second;
            for (size_t i = 0; i < cur.size(); ++i) cur[i] = ((cur[i] - f * w[i]) % p + p) % p;
        }
    }
    for (auto& [lead, v] : by_lead) out.push_back(std::move(v));
    return out;
}

} // namespace

CohomologyReport h1_module_structure(long p, long m, const PrecisionPolicy& policy) {
    if (!is_prime(p)) throw input_error("non-prime p");
    if (m < 1 || m % p == 0) throw input_error("conductor must be positive and prime to p");
    auto ring = mk_ring(RingDescriptor::prime_field(p));
    const long beta = (m + 1) * (p - 1);
    const long q = (m + p - 1) / p;
    const long l = q * p - m; // m = pq - l with l in [1, p-1]

    CohomologyReport rep = cohomology_report(p, m, policy);
    rep.q = q;
    rep.l = l;

    // gamma(j) = floor((jpq + l(p-1-j))/p) = jq + floor(l(p-1-j)/p)
    std::vector<long> gamma(p, 0);
    for (long j = 0; j < p; ++j) {
        long g1 = (j * p * q + l * (p - 1 - j)) / p;
        long g2 = j * q + (l * (p - 1 - j)) / p;
        if (g1 != g2) throw internal_error("gamma formula mismatch");
        gamma[j] = g1;
    }

    const long P = std::max(2 * beta + 4 * p + 2 * m + 8, policy.min_series_prec);
    RingElement a = m == 1 ? ring->zero() : ring->one();
    Automorphism s = standard_sigma(p, m, ring, a, P);

    // delta as a matrix on k[[T]]/T^{Pv}
    const long Pv = P;
    FpMat delta(Pv, Pv, p);
    {
        Series u = s.image.truncated(Pv);
        Series pw = Series::constant(ring->one(), Pv);
        for (long j = 0; j < Pv; ++j) {
            for (long i = 0; i < Pv; ++i) {
                const auto* b = pw.block(i);
                std::int64_t val = b ? *b : 0;
                if (i == j) val -= 1;
                delta.at(i, j) = ((val % p) + p) % p;
            }
            if (j + 1 < Pv) pw = (pw * u).truncated(Pv);
        }
    }

    // xi generates E_2/E_1: minimal-valuation element of ker(delta^2) - ker(delta)
    FpMat delta2 = delta * delta;
    FpMat ker = delta2.kernel_basis();
    std::vector<std::vector<std::int64_t>> kvecs;
    for (long j = 0; j < ker.cols(); ++j) {
        std::vector<std::int64_t> v(Pv);
        for (long i = 0; i < Pv; ++i) v[i] = ker.at(i, j);
        kvecs.push_back(std::move(v));
    }
    auto ech = valuation_echelon(std::move(kvecs), p);
    std::vector<std::int64_t> xi_vec;
    for (const auto& v : ech) {
        long val = vec_valuation(v);
        if (val < 1) continue;
        auto dv = delta.apply(v);
        if (vec_valuation(dv) >= Pv - m) continue; // in ker(delta) up to the window
        xi_vec = v;
        break;
    }
    if (xi_vec.empty()) throw precision_error("no xi in E_2 - E_1 found within the window");
    if (vec_valuation(xi_vec) != l)
        throw verification_error("xi valuation differs from l = pq - m");

    Series xi = Series::zero(ring, Pv);
    for (long i = 0; i < Pv; ++i)
        if (xi_vec[i] != 0) xi = xi + Series::monomial(ring->from_int(xi_vec[i]), i, Pv);
    {
        Series dxi = aut_apply(s, xi) - xi;
        auto v = dxi.valuation();
        if (!v || *v != l + m)
            throw verification_error("v(delta xi) != pq");
    }

    Series y = norm_series(s, p);

    // d_j = delta^j(xi^{p-1}) via the window matrix
    std::vector<std::vector<std::int64_t>> dj(p);
    {
        Series xp = xi.pow(p - 1).truncated(Pv);
        std::vector<std::int64_t> cur(Pv, 0);
        for (long i = 0; i < Pv; ++i) {
            const auto* b = xp.block(i);
            cur[i] = b ? *b : 0;
        }
        for (long j = 0; j < p; ++j) {
            dj[j] = cur;
            cur = delta.apply(cur);
        }
    }

    auto to_series = [&](const std::vector<std::int64_t>& v, long prec) {
        Series r = Series::zero(ring, prec);
        for (long i = 0; i < std::min<long>(prec, Pv); ++i)
            if (v[i] != 0) r = r + Series::monomial(ring->from_int(v[i]), i, prec);
        return r;
    };

    // z_j = Y^{-gamma(j)} d_j, w_j = Y^{alpha_j} z_j
    std::vector<long> rj(p), spr(p), alpha(p);
    for (long j = 0; j < p; ++j) {
        rj[j] = (l * (p - 1 - j)) % p;
        spr[j] = rj[j] < l - 1 ? 1 : 0;
        alpha[j] = p * q - (l - 1) - q + spr[j];
    }
    for (long j = 0; j < p; ++j)
        for (long jj = j + 1; jj < p; ++jj)
            if (rj[j] == rj[jj]) throw internal_error("residues r_j are not distinct");

    // the effective precision of d_j in the window quotient model:
    // delta is exact on polynomials of degree < Pv below degree Pv
    std::vector<Series> w(p);
    long w_prec = Pv;
    for (long j = 0; j < p; ++j) {
        Series djs = to_series(dj[j], Pv);
        w[j] = (djs * y.pow(alpha[j] - gamma[j])).truncated(Pv);
        auto v = w[j].valuation();
        if (!v || *v != p * alpha[j] + rj[j])
            throw verification_error("w_j valuation differs from p*alpha_j + r_j");
        if (*v < beta) throw verification_error("w_j escapes the different ideal");
        w_prec = std::min(w_prec, w[j].prec());
    }
    {
        std::vector<long> vals;
        for (long j = 0; j < p; ++j) vals.push_back(p * alpha[j] + rj[j]);
        std::sort(vals.begin(), vals.end());
        for (long i = 0; i < p; ++i)
            if (vals[i] != beta + i)
                throw verification_error("w-basis valuations do not tile [beta, beta+p)");
    }

    // closed-form s_j and elementary divisors
    std::vector<long> s_vals(p, 0); // s_vals[j] = s_j for j = 1..p-1
    for (long j = 0; j + 1 < p; ++j) {
        long spp = gamma[j + 1] - gamma[j] - q;
        s_vals[j + 1] = spr[j] + spp - spr[j + 1];
    }
    for (long j = 1; j < p; ++j) {
        rep.s_values.push_back(s_vals[j]);
        rep.elementary_divisors.push_back(q + s_vals[j]);
    }

    // expand delta(w_j) over the w-basis with k[[Y]] coefficients
    long K = (w_prec - (beta + p)) / p;
    if (K < q + 2) throw precision_error("Y-window too small for the structure matrix");
    K = std::min(K, q + 4);
    std::vector<std::vector<std::int64_t>> entries(static_cast<size_t>(p) * p,
                                                   std::vector<std::int64_t>(K, 0));
    for (long j = 0; j < p; ++j) {
        Series g = aut_apply(s, w[j]) - w[j];
        long budget = std::min<long>(g.prec(), beta + p * K);
        while (true) {
            auto v = g.valuation();
            if (!v || *v >= budget) break;
            long target = -1;
            for (long i = 0; i < p; ++i)
                if ((*v - rj[i]) % p == 0 && *v >= p * alpha[i] + rj[i]) {
                    target = i;
                    break;
                }
            if (target < 0) throw internal_error("stray valuation in the w-expansion");
            long e = (*v - (p * alpha[target] + rj[target])) / p;
            RingElement c = g.coeff(*v) * w[target].coeff(p * alpha[target] + rj[target]).inverse();
            if (e < K) entries[j * p + target][e] =
                ((entries[j * p + target][e] + c.residue()) % p + p) % p;
            g = g - (w[target] * y.pow(e)).scaled(c);
        }
    }
    // entries are indexed (source j, target i) -> transpose to matrix rows=target
    std::vector<std::vector<std::int64_t>> mat(static_cast<size_t>(p) * p,
                                               std::vector<std::int64_t>(K, 0));
    for (long j = 0; j < p; ++j)
        for (long i = 0; i < p; ++i) mat[i * p + j] = entries[j * p + i];

    // the matrix of delta must be the exact superdiagonal Y^{q+s_{j+1}}
    for (long j = 0; j + 1 < p; ++j) {
        long v = vec_valuation(mat[(j + 1) * p + j]);
        if (v != q + s_vals[j + 1])
            throw verification_error("structure matrix valuation differs from q + s_{j+1}");
    }

    rep.smith_divisors = smith_divisors_truncated(std::move(mat), p, p, p, K);
    {
        auto sorted = rep.elementary_divisors;
        std::sort(sorted.begin(), sorted.end());
        if (rep.smith_divisors != sorted)
            throw verification_error("Smith divisors differ from the closed-form q + s_j");
    }
    long total = 0;
    for (long d : rep.elementary_divisors) total += d;
    if (rep.stabilized && total != rep.dim_h1_brute)
        throw verification_error("elementary divisors do not sum to dim H^1");
    return rep;
}

CocycleClass cocycle_class_check(const Automorphism& s, const ThetaElement& x,
                                 const PrecisionPolicy& policy) {
    auto rd = ramification_data(s, 64);
    const long p_power = rd.order;
    const long beta = rd.beta;
    const std::int64_t p = s.ring->char_p();

    auto [dx, nx] = delta_and_norm(s, p_power, x);
    (void)dx;
    auto nv = nx.h.valuation();
    long check_window = std::min<long>(nx.h.prec(), 2 * beta);
    if (nv.has_value() && *nv < check_window) return CocycleClass::not_cocycle;

    Series y = norm_series(s, p_power);
    Series moved = transport_to_different(y, x);
    auto mv = moved.valuation();
    if (mv && *mv < beta) throw internal_error("transport left the different ideal");

    long M = std::min(policy.start_window(p_power, beta), s.prec() - beta - p_power);
    M = std::min(M, moved.prec() - beta);
    if (M <= rd.conductor) throw precision_error("no window available for the class check");

    // valuation certificate: coboundaries have valuation >= beta + m
    if (mv && *mv < beta + rd.conductor) return CocycleClass::nonzero;

    ThetaWindow w = build_theta_window(s, p_power, beta, M);
    std::vector<std::int64_t> vec(M, 0);
    for (long i = 0; i < M; ++i) {
        const auto* b = moved.block(beta + i);
        vec[i] = b ? ((*b % p) + p) % p : 0;
    }
    FpMat target = FpMat::from_columns({vec}, p);
    if (rank_increase(w.delta_mat, target) == 0) return CocycleClass::zero;
    return CocycleClass::nonzero;
}

} // namespace wildram

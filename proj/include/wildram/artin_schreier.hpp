#pragma once

#include "wildram/automorphisms.hpp"

#include <map>
#include <string>
#include <vector>

namespace wildram {

/// Canonical Artin-Schreier representative at a branch point: a Laurent tail
/// sum_{j=1}^m alpha_j / t'^j over F_p with alpha_j = 0 whenever p | j and
/// alpha_m != 0.
struct PolarPart {
    long p = 0;
    std::vector<std::int64_t> alpha; // alpha[j-1] is the coefficient of t'^{-j}

    long length() const { return static_cast<long>(alpha.size()); } // the conductor m
    std::string to_string() const;
};

/// Class of a in k((t')) modulo k[[t']] + p(k((t'))): only the polar tail of a
/// representative is stored.
struct ASClass {
    long p = 0;
    std::map<long, std::int64_t> tail; // j -> coefficient of t'^{-j}, j >= 1

    static ASClass from_series(long p, const Series& s); // keeps the polar tail
    std::string to_string() const;
};

struct PolarReduction {
    PolarPart polar;
    ASClass witness; // w with  c = polar + (w^p - w) + integral part
    long steps = 0;
    bool witness_verified = false;
};

/// Unique polar part in the class of c: repeatedly subtracts p(beta/t'^l) at
/// the largest p-divisible index. p-th roots in F_p are the identity map.
PolarReduction polar_reduce(const ASClass& c);

/// dim H(U, {m_i}) = sum (m_i - floor(m_i/p)), cross-checked against the count
/// of free polar coefficients.
struct HarbaterCensus {
    long dim = 0;
    long r = 0;       // punctured-line factors (top coefficients)
    long r_prime = 0; // affine-line factors
};
HarbaterCensus harbater_census(long p, const std::vector<long>& conductors);
long harbater_dim(long p, const std::vector<long>& conductors);

/// Genus of a Z/p-cover from Riemann-Hurwitz:
/// 2g - 2 = p(2 g_Sigma - 2) + sum (m_i + 1)(p - 1).
long genus_rh(long p, const std::vector<long>& conductors, long g_quotient);

/// Characteristic-p deformation of the Artin-Schreier cover with conductor
/// m = pq - l: solves the deformed equation for t as a series in the
/// normalized uniformizer (xi when l = 1, eta with eta^l = xi otherwise) and
/// carries sigma with sigma(xi) = xi + a(t).
struct DeformedCover {
    long p = 0, m = 0, q = 0, l = 0;
    RingPtr ring;
    std::vector<RingElement> xs; // q parameters when l = 1, q-1 otherwise
    Series t_of_uniformizer;
    Automorphism sigma;  // deformed automorphism on A[[eta]]
    Automorphism sigma0; // the xs = 0 member over the same ring
};

DeformedCover build_deformed_cover(long p, long m, const RingPtr& ring,
                                   const std::vector<RingElement>& xs, long prec = 0);

/// v_eta(phi_j) for the infinitesimal direction x_j = eps: writes
/// sigma(eta) = sigma_0(eta) + eps phi_j(eta) and checks the valuation against
/// p(q - j) - (l - 1).
struct DirectionValuation {
    long p, m, q, l, j;
    long observed;
    long formula;
};
DirectionValuation deformation_direction_valuation(long p, long m, long j, long prec = 0);

/// Rank of the classes of all infinitesimal directions in the H^1 window of
/// the undeformed automorphism.
struct IndependenceReport {
    long p = 0, m = 0, q = 0, l = 0;
    long n_directions = 0;
    long rank = 0;
    bool independent = false;
    std::vector<long> valuations; // v_eta(phi_j) per direction
};
IndependenceReport independence_check(long p, long m);

} // namespace wildram

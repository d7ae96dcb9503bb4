#pragma once

#include "wildram/qpoly.hpp"
#include "wildram/series.hpp"

#include <optional>

namespace wildram {

/// T_p and S_{p-1}: Chebyshev polynomials of the first and second kind,
/// with exact integer coefficients from the closed binomial sums. The
/// constructor verifies the defining Laurent identities
///   2 T_p((Z+Z^{-1})/2) = Z^p + Z^{-p}
///   (Z - Z^{-1}) S_{p-1}((Z+Z^{-1})/2) = Z^p - Z^{-p}
struct ChebyshevPair {
    long p = 0;
    QPoly t;        // T_p
    QPoly s;        // S_{p-1}
};

ChebyshevPair cheb_polys(long p);

/// The gcd polynomial phi = (T_p - 1, S_{p-1}), its shift psi(X) = phi(X/2+1),
/// and the Bezout certificate U (T_p - 1) + V S_{p-1} = phi, verified exactly
/// over the rationals.
struct PsiData {
    long p = 0;
    QPoly phi;
    QPoly psi;
    QPoly bezout_u; // -phi/2
    QPoly bezout_v;
    bool bezout_exact = false;
    bool denominators_pow2 = false; // all U, V denominators are powers of 2
    bool psi_eisenstein = false;    // monic, middles divisible by p, constant exactly once
};

PsiData psi_poly(long p);

/// 2x2 matrix over a ring handle; the homography convention is
/// (a x + b)/(c x + d).
struct Mat2 {
    RingElement a, b, c, d;

    static Mat2 eye(const RingPtr& ring);
    static Mat2 mobius(const RingElement& param); // M_a = [[1, a], [1, 1+a]]
    Mat2 operator*(const Mat2& o) const;
    Mat2 pow(long e) const;
    bool operator==(const Mat2& o) const;
    RingElement det() const;
    bool is_identity() const;
};

struct MobiusOrderReport {
    bool is_identity_power = false;
    bool via_matrix = false;
    bool via_chebyshev = false;
    std::optional<bool> via_series; // only when a is nilpotent
    RingElement t_eval;             // T_p(a/2 + 1) - 1
    RingElement s_eval;             // S_{p-1}(a/2 + 1)
};

/// Tests M_a^p = Id three ways (matrix power, Chebyshev evaluation, series
/// composition of (T+a)/(1+T+a) when a is nilpotent) and requires agreement.
MobiusOrderReport mobius_order_test(long p, const RingElement& a);

struct VersalM1Report {
    long p = 0;
    long n_precision = 0;
    QPoly psi;
    std::string ring_name;
    bool psi_eisenstein = false;
    bool order_p_matrix = false;
    bool order_p_series = false;
};

/// Builds Z/p^n[X]/(psi(X)) and verifies that sigma_X(T) = (T+X)/(1+T+X)
/// has order p there. Requires p > 3 (the p = 3 problem is rigid).
VersalM1Report versal_m1_check(long p, long n_precision);

/// The ring Z/p^n[X]/(psi_p(X)) itself.
RingPtr versal_m1_ring(long p, long n_precision);

} // namespace wildram

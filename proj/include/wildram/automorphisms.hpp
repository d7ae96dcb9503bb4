#pragma once

#include "wildram/series.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wildram {

/// Continuous automorphism of A[[T]], given by the image of T.
/// s(0) must be nilpotent and s'(0) a unit.
struct Automorphism {
    RingPtr ring;
    Series image;

    long prec() const { return image.prec(); }
};

Automorphism make_automorphism(Series image_of_T);
Automorphism identity_automorphism(RingPtr ring, long prec);

/// Image of a (possibly Laurent) series under the automorphism.
Series aut_apply(const Automorphism& s, const Series& x);

Automorphism aut_compose(const Automorphism& s, const Automorphism& t); // s after t
Automorphism aut_inverse(const Automorphism& s);
Automorphism aut_power(const Automorphism& s, long e);

/// Least e in [1, cap] with sigma^e(T) = T to the working precision;
/// nullopt when no such e exists below the cap. Precision-relative.
std::optional<long> aut_order(const Automorphism& s, long cap);

/// Order confirmed at two precisions: the builder is invoked at prec and at
/// 2*prec and the two answers must agree.
std::optional<long> aut_order_certified(const std::function<Automorphism(long)>& builder,
                                        long prec, long cap);

struct RamificationData {
    long order = 1;                    // p^n
    std::vector<long> breaks;          // i(sigma^j) = v(sigma^j T - T), j = 1..order-1
    std::vector<long> filtration;      // |G_i| for i = 0..last jump
    long conductor = 0;                // order-p case: m = v(sigma T - T) - 1
    long beta = 0;                     // sum over i >= 0 of (|G_i| - 1)
    bool conductor_prime_to_p = true;
};

/// Hasse conductor of a non-identity automorphism: v(sigma T - T) - 1.
long conductor(const Automorphism& s);

/// Breaks, filtration sizes and the different exponent of <sigma>.
/// The order must be a power of the residue characteristic within precision.
RamificationData ramification_data(const Automorphism& s, long order_cap = 64);

/// Y = prod_{i<d} sigma^i(T); checks v(Y) = d and sigma(Y) = Y.
Series norm_series(const Automorphism& s, long order);

/// The order-p families:
///   m > 1: sigma_a(T) = T * (a + T^m)^{-1/m},   a in 1 + M_A
///   m = 1: sigma_a(T) = (T + a)/(1 + T + a),    a in M_A
/// The p-fold composite is T * (a^p + (1+a+...+a^{p-1}) T^m)^{-1/m}, so
/// sigma_a^p = Id exactly when 1 + a + ... + a^{p-1} = 0.
Automorphism standard_sigma(long p, long m, const RingPtr& ring, const RingElement& a, long prec);

/// Default working precision for order-p computations: max(2*beta + 2p, 64).
long default_sigma_prec(long p, long m);

} // namespace wildram

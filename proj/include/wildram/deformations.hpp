#pragma once

#include "wildram/automorphisms.hpp"
#include "wildram/chebyshev.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wildram {

/// Both sides of the order criterion for sigma_a with m > 1:
/// sigma_a^p = Id by composition, and 1 + a + ... + a^{p-1} = 0 by ring
/// arithmetic. Disagreement is a hard error.
struct OrderConditionReport {
    bool series_order_p = false;
    bool sum_vanishes = false;
    RingElement geometric_sum; // 1 + a + ... + a^{p-1}
};
OrderConditionReport order_condition_check(long p, long m, const RingElement& a);

/// Obstruction to lifting sigma_a across the small extension A' -> A, probed
/// with the lift a'. For m > 1 the defect sigma_{a'}^p(T) - T equals
/// -(1/m)(1 + a' + ... + a'^{p-1}) T^{m+1} exactly; for m = 1 it equals
/// (-c_p T^2) t with C_p = c_p t read off the matrix power M_{a'}^p.
struct ObstructionReport {
    long p = 0, m = 0;
    RingElement a;        // in A, with sigma_a^p = Id
    RingElement a_prime;  // the chosen lift in A'
    RingElement geometric_sum; // 1 + a' + ... + a'^{p-1}, lies in t A'
    Series defect;        // sigma_{a'}^p(T) - T over A'
    Series predicted;
    bool defect_matches_formula = false;
    bool class_vanishes = false;
    bool nontriviality_inequality = false; // (m+1)p < p floor(2(m+1)(p-1)/p)
    std::optional<std::int64_t> c_p;       // m = 1 only
    std::optional<std::int64_t> a_p;       // m = 1 only
    std::optional<bool> chebyshev_vanishes;
};
ObstructionReport obstruction_class(long p, long m, const SmallExtension& ext,
                                    const RingElement& a_prime);

/// Krull dimension of the local versal ring, both conventions, plus the
/// m + 2 - floor(beta/p) chain value which disagrees with the theorem when
/// l != 1 (reported, not adjudicated).
struct KrullReport {
    long p = 0, m = 0, q = 0, l = 0;
    long beta = 0;
    long krull_absolute = 0; // q (l != 1) or q+1 (l = 1); (m+1)/2 + 1 for p = 2
    long krull_relative = 0;
    long krull_chain = 0;    // m + 2 - floor(beta/p)
    bool chain_matches = false;
    bool rigid = false;               // (m, p) = (1, 3)
    bool complete_intersection = false; // p > 2, m < p-1, not rigid
};
KrullReport krull_dim_local(long p, long m);

/// Global/local dimension bookkeeping for a cover with the given conductors.
struct DimensionReport {
    long p = 0;
    long g_quotient = 0;
    struct Point {
        long m, q, l, beta;
        long dim_local;    // floor(2 beta/p) - ceil(beta/p)
        long krull_local;  // thmGM value (absolute)
        long krull_chain;  // m + 2 - floor(beta/p)
    };
    std::vector<Point> points;
    long dim_h1_global_formula = 0; // 3g - 3 + sum ceil(2 beta_i / p)
    long n_prime_formula = 0;       // 3g - 3 + sum floor(beta_i / p)
    long n_prime_exact = -1;        // g = 0: max(0, n_prime_formula)
    long dim_h1_exact = -1;         // g = 0: sum of local dims + n_prime_exact
    long krull_global_exact = -1;   // sum(krull_local - 1) + 1 + n_prime_exact
    long krull_global_formula = 0;  // same with n_prime_formula
    long n_moduli = 0;              // N = sum (m_i + 1)
    long moduli_dim = 0;            // N - 2
    std::vector<std::string> flags;
};
DimensionReport global_dim_report(long p, const std::vector<long>& conductors, long g_quotient);

} // namespace wildram

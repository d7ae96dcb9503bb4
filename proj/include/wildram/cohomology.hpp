#pragma once

#include "wildram/automorphisms.hpp"
#include "wildram/fp_linalg.hpp"

#include <string>
#include <vector>

namespace wildram {

/// Element h(T) d/dT of Theta = k[[T]] d/dT.
struct ThetaElement {
    Series h;
};

struct PrecisionPolicy {
    long min_series_prec = 64;
    long window_start_factor = 2; // M_0 = 2*beta + 2*p^n
    long window_max_factor = 8;   // give up past M = 8*beta

    long start_window(long p_power, long beta) const {
        return window_start_factor * beta + 2 * p_power;
    }
    long max_window(long beta) const { return window_max_factor * beta; }
};

/// Twisted action on Theta: sigma^i . (h d/dT) = h(sigma^i T) * (d sigma^i T / dT)^{-1} d/dT.
ThetaElement theta_action(const Automorphism& s, long i, const ThetaElement& x);

/// delta x = sigma.x - x and N x = sum_{i<order} sigma^i.x.
std::pair<ThetaElement, ThetaElement> delta_and_norm(const Automorphism& s, long order,
                                                     const ThetaElement& x);

/// Transport Theta -> T^beta k[[T]]: h d/dT maps to h * dY/dT, where Y is the
/// norm series. The standard action on k[[T]] intertwines the twisted one.
Series transport_to_different(const Series& norm_y, const ThetaElement& x);

/// dim H^1 = dim H^2 = floor(2 beta / p^n) - ceil(beta / p^n).
std::pair<long, long> h_dims_formula(long p_power, long beta);

struct CohomologyReport {
    long p = 0;
    long m = 0;
    long p_power = 0;
    long beta = 0;
    long q = 0, l = 0; // m = pq - l for the order-p structure report
    long dim_h1_formula = -1, dim_h2_formula = -1;
    long dim_h1_brute = -1, dim_h2_brute = -1;
    std::vector<long> elementary_divisors; // q + s_j in basis order, j = 1..p-1
    std::vector<long> smith_divisors;      // from valuation-pivot reduction, sorted
    std::vector<long> s_values;            // s_1..s_{p-1}
    long window_used = 0;
    long series_prec_used = 0;
    bool stabilized = false;
    std::string h2_ideal_reading; // which ideal reading matches: "kY", "kT", "both", "none"
};

/// The standard sigma-action on the window T^beta k[[T]] / T^{beta+M},
/// with the delta and norm operators as F_p matrices.
struct ThetaWindow {
    long beta = 0;
    long window = 0;
    long p_power = 0;
    FpMat sigma_mat, delta_mat, norm_mat;
};

/// Requires s.image known modulo T^{beta+M}; the action is exact on the window.
ThetaWindow build_theta_window(const Automorphism& s, long p_power, long beta, long M);

/// Brute-force window dimensions with stabilization at M and M + p^n.
/// The builder must produce the automorphism at any requested precision.
CohomologyReport h_dims_bruteforce(const std::function<Automorphism(long)>& builder, long p_power,
                                   const PrecisionPolicy& policy = {});

/// Convenience wrapper for the standard order-p model of conductor m over F_p.
CohomologyReport cohomology_report(long p, long m, const PrecisionPolicy& policy = {});

/// k[[Y]]-module structure of H^1 for the order-p model: constructs xi, the
/// z_j / w_j bases, the matrix of delta over truncated k[[Y]], and its
/// elementary divisors by valuation-pivot Smith reduction.
CohomologyReport h1_module_structure(long p, long m, const PrecisionPolicy& policy = {});

enum class CocycleClass { zero, nonzero, not_cocycle };

CocycleClass cocycle_class_check(const Automorphism& s, const ThetaElement& x,
                                 const PrecisionPolicy& policy = {});

/// Valuation-pivot Smith reduction over F_p[[Y]]/(Y^K). Entries are coefficient
/// vectors of length K. Returns the pivot valuations (finite divisors only),
/// sorted ascending.
std::vector<long> smith_divisors_truncated(std::vector<std::vector<std::int64_t>> entries,
                                           long rows, long cols, std::int64_t p, long K);

} // namespace wildram

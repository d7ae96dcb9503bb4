#pragma once

#include "wildram/rings.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wildram {

/// Sentinel precision for exactly-known (polynomial) series.
inline constexpr long kPrecExact = 1L << 40;

/// Saturating precision shift.
long prec_add(long prec, long delta);

/// Truncated power/Laurent series over a finite coefficient ring.
///
/// Coefficients are stored densely for exponents [low, low+len); exponents in
/// [low+len, prec) are exactly zero; nothing is known at or beyond T^prec.
/// Arithmetic never extends precision: every operation computes the window it
/// can guarantee. Laurent tails (low < 0) are supported with finitely many
/// negative exponents.
class Series {
public:
    Series() = default;

    static Series zero(RingPtr ring, long prec = kPrecExact);
    static Series constant(const RingElement& c, long prec = kPrecExact);
    static Series monomial(const RingElement& c, long exp, long prec = kPrecExact);
    static Series identity(RingPtr ring, long prec); // the series T
    static Series from_terms(RingPtr ring, const std::vector<std::pair<long, RingElement>>& terms,
                             long prec = kPrecExact);

    const RingPtr& ring() const { return ring_; }
    long low() const { return low_; }
    long prec() const { return prec_; }
    bool exact() const { return prec_ >= kPrecExact; }

    /// Least exponent with nonzero coefficient; nullopt when zero to precision.
    std::optional<long> valuation() const;

    /// Number of stored coefficient blocks (exponents [low, low+len)).
    long len() const;

    RingElement coeff(long e) const; // throws beyond precision
    const std::int64_t* block(long e) const; // raw coefficient block; nullptr outside storage

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    bool operator==(const Series& o) const; // equality on the shared known window

    Series scaled(const RingElement& c) const;
    Series shifted(long k) const;       // multiply by T^k
    Series truncated(long prec) const;  // forget knowledge at and beyond T^prec
    /// Reinterprets the stored coefficients as a guess valid to the given
    /// window. Only meaningful inside Newton-style iterations that correct
    /// the extended part on the next step.
    Series assuming_prec(long prec) const;

    /// Multiplicative inverse; requires a unit coefficient at the valuation.
    Series inverse() const;
    Series div(const Series& o) const;

    Series pow(long e) const; // e >= 0, or any e when invertible

    Series derivative() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    long low_ = 0;
    long prec_ = kPrecExact;
    std::vector<std::int64_t> c_; // len * basis_size coefficients

    void normalize();
    friend Series compose(const Series& f, const Series& g);
    friend Series series_add_impl(const Series& a, const Series& b, bool sub);
};

/// f(g) for a power series f (low >= 0) and g with nilpotent constant term.
Series compose(const Series& f, const Series& g);

/// Compositional inverse: g with f(g) = g(f) = T to the guaranteed window.
/// Requires f(0) nilpotent and f'(0) a unit.
Series reversion(const Series& f);

/// r with r^m = s, for s = c * (unit series) where c has an m-th root in the
/// ring and gcd(m, char) = 1. The leading coefficient of r is the designated
/// root of c (smallest residue root, Hensel-lifted).
Series mth_root_unit(const Series& s, long m);

/// Designated m-th root of a unit ring element (smallest residue root,
/// Newton-lifted); throws input_error when no root exists.
RingElement ring_mth_root(const RingElement& c, long m);

bool equal_mod(const Series& a, const Series& b, long prec);

} // namespace wildram

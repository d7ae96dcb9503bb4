#pragma once

#include "wildram/numeric.hpp"
#include "wildram/rings.hpp"

#include <map>
#include <string>
#include <vector>

namespace wildram {

/// Exact polynomial over Q, coefficients indexed by degree.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, long deg);
    static QPoly x();

    long degree() const; // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(long deg) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const Rational& c) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<QPoly, QPoly> divrem(const QPoly& d) const;
    bool divides(const QPoly& d) const; // this | d

    QPoly substitute(const QPoly& g) const; // this(g(X))
    Rational evaluate(const Rational& x) const;

    /// Evaluate in a finite ring; every coefficient denominator must be
    /// invertible there.
    RingElement evaluate(const RingElement& x) const;

    bool p_integral(std::int64_t p) const; // all denominators prime to p
    std::string to_string(const std::string& var = "X") const;

private:
    std::vector<Rational> c_; // ascending degree, normalized (no zero lead)
    void normalize();
};

/// Exact Laurent polynomial over Q in one variable Z.
class QLaurent {
public:
    QLaurent() = default;
    static QLaurent monomial(const Rational& c, long e);

    QLaurent operator+(const QLaurent& o) const;
    QLaurent operator-(const QLaurent& o) const;
    QLaurent operator*(const QLaurent& o) const;
    bool operator==(const QLaurent& o) const { return c_ == o.c_; }
    bool is_zero() const { return c_.empty(); }

    /// Substitute a QLaurent for the variable of a QPoly (degrees >= 0 only).
    static QLaurent substitute_poly(const QPoly& f, const QLaurent& g);

    std::string to_string(const std::string& var = "Z") const;

private:
    std::map<long, Rational> c_;
    void normalize();
};

} // namespace wildram

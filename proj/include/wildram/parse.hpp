#pragma once

#include "wildram/series.hpp"

#include <string>

namespace wildram {

/// Ring descriptor grammar:
///   "F5" | "Fp(5)" | "Z/125" | "Z/5^3" | "Q"
/// optionally followed by variables and a relation:
///   "F5[u]/(u^4)"  "Z/5^3[X]/(X^2+5*X+5)"  "F3[x,y]/(deg>=2)"
RingPtr parse_ring(const std::string& text);

/// Element literal: integers, ring variables, + - * / ^ and parentheses.
/// Division only by invertible constants.
RingElement parse_element(const RingPtr& ring, const std::string& text);

/// Sparse series literal over the ring: `coeff*T^exp` sums with optional
/// parenthesized ring-element coefficients and negative exponents, e.g.
///   "1*T^-3 + 2*T^-1"   "T + (1+u)*T^2"
Series parse_series(const RingPtr& ring, const std::string& text, long prec = kPrecExact);

} // namespace wildram

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>

namespace wildram {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

// Largest e with p^e | n, for n != 0.
long p_valuation(const Integer& n, std::int64_t p);

// p-adic valuation of a nonzero rational (may be negative).
long p_valuation(const Rational& q, std::int64_t p);

// x^e mod m for m > 1, e >= 0.
std::int64_t pow_mod(std::int64_t x, std::int64_t e, std::int64_t m);

// Inverse of x modulo m; throws input_error when gcd(x, m) != 1.
std::int64_t inv_mod(std::int64_t x, std::int64_t m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// p^n as int64; throws input_error on overflow past 2^28 (ring modulus cap).
std::int64_t prime_power(std::int64_t p, long n);

} // namespace wildram

#include "wildram/numeric.hpp"
#include "wildram/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace wildram {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long p_valuation(const Integer& n, std::int64_t p) {
    if (n == 0) throw input_error("p_valuation of zero");
    Integer m = abs(n);
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long p_valuation(const Rational& q, std::int64_t p) {
    if (q == 0) throw input_error("p_valuation of zero");
    return p_valuation(numerator(q), p) - p_valuation(denominator(q), p);
}

std::int64_t pow_mod(std::int64_t x, std::int64_t e, std::int64_t m) {
    if (m <= 1) return 0;
    std::int64_t r = 1 % m;
    x %= m;
    if (x < 0) x += m;
    while (e > 0) {
        if (e & 1) r = (r * x) % m;
        x = (x * x) % m;
        e >>= 1;
    }
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t inv_mod(std::int64_t x, std::int64_t m) {
    x %= m;
    if (x < 0) x += m;
    std::int64_t a = x, b = m, u = 1, v = 0;
    while (b) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = u - q * v;
        u = v;
        v = t;
    }
    if (a != 1) throw input_error("element not invertible modulo " + std::to_string(m));
    u %= m;
    if (u < 0) u += m;
    return u;
}

std::int64_t prime_power(std::int64_t p, long n) {
    std::int64_t r = 1;
    for (long i = 0; i < n; ++i) {
        r *= p;
        if (r > (std::int64_t{1} << 28))
            throw input_error("ring modulus p^n exceeds supported bound 2^28");
    }
    return r;
}

} // namespace wildram

#include "wildram/qpoly.hpp"
#include "wildram/errors.hpp"

#include <sstream>

namespace wildram {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, long deg) {
    std::vector<Rational> v(deg + 1, Rational(0));
    v[deg] = c;
    return QPoly(std::move(v));
}

QPoly QPoly::x() { return monomial(1, 1); }

long QPoly::degree() const { return static_cast<long>(c_.size()) - 1; }

const Rational& QPoly::coeff(long deg) const {
    static const Rational zero(0);
    if (deg < 0 || deg >= static_cast<long>(c_.size())) return zero;
    return c_[deg];
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    auto v = c_;
    for (auto& x : v) x = -x;
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rational& c) const {
    auto v = c_;
    for (auto& x : v) x *= c;
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero()) throw input_error("polynomial division by zero");
    QPoly r = *this;
    std::vector<Rational> q(std::max<long>(degree() - d.degree() + 1, 0), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        long k = r.degree() - d.degree();
        Rational f = r.c_.back() / d.c_.back();
        q[k] = f;
        r = r - d * monomial(f, k);
    }
    return {QPoly(std::move(q)), r};
}

bool QPoly::divides(const QPoly& o) const { return o.divrem(*this).second.is_zero(); }

QPoly QPoly::substitute(const QPoly& g) const {
    QPoly acc;
    for (long e = degree(); e >= 0; --e) {
        acc = acc * g + constant(c_[e]);
    }
    return acc;
}

Rational QPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (long e = degree(); e >= 0; --e) acc = acc * x + c_[e];
    return acc;
}

RingElement QPoly::evaluate(const RingElement& x) const {
    auto ring = x.ring();
    RingElement acc = ring->zero();
    for (long e = degree(); e >= 0; --e) acc = acc * x + ring->from_rational(c_[e]);
    return acc;
}

bool QPoly::p_integral(std::int64_t p) const {
    for (const auto& c : c_)
        if (c != 0 && p_valuation(c, p) < 0) return false;
    return true;
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = degree(); e >= 0; --e) {
        const Rational& c = c_[e];
        if (c == 0) continue;
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << var;
            if (e > 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

void QLaurent::normalize() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0)
            it = c_.erase(it);
        else
            ++it;
    }
}

QLaurent QLaurent::monomial(const Rational& c, long e) {
    QLaurent r;
    r.c_[e] = c;
    r.normalize();
    return r;
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
    QLaurent r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] += c;
    r.normalize();
    return r;
}

QLaurent QLaurent::operator-(const QLaurent& o) const {
    QLaurent r = *this;
    for (const auto& [e, c] : o.c_) r.c_[e] -= c;
    r.normalize();
    return r;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
    QLaurent r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r.c_[e1 + e2] += c1 * c2;
    r.normalize();
    return r;
}

QLaurent QLaurent::substitute_poly(const QPoly& f, const QLaurent& g) {
    QLaurent acc;
    for (long e = f.degree(); e >= 0; --e) {
        acc = acc * g + monomial(f.coeff(e), 0);
    }
    return acc;
}

std::string QLaurent::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << " + ";
        if (e == 0) {
            os << c.str();
        } else {
            if (c != 1) os << c.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

} // namespace wildram

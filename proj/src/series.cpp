#include "wildram/series.hpp"
#include "wildram/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wildram {

long prec_add(long prec, long delta) {
    if (prec >= kPrecExact) return kPrecExact;
    long r = prec + delta;
    if (r >= kPrecExact) return kPrecExact;
    return r;
}

long Series::len() const {
    if (!ring_ || ring_->basis_size() == 0) return 0;
    return static_cast<long>(c_.size()) / ring_->basis_size();
}

void Series::normalize() {
    const int B = ring_->basis_size();
    long l = len();
    // clamp storage to the precision window
    if (low_ + l > prec_) {
        l = std::max<long>(0, prec_ - low_);
        c_.resize(static_cast<size_t>(l) * B);
    }
    long lead = 0;
    while (lead < l && ring_->k_is_zero(c_.data() + lead * B)) ++lead;
    if (lead == l) {
        c_.clear();
        low_ = std::min(low_, prec_);
        return;
    }
    long tail = l;
    while (tail > lead && ring_->k_is_zero(c_.data() + (tail - 1) * B)) --tail;
    if (lead > 0) c_.erase(c_.begin(), c_.begin() + lead * B);
    c_.resize(static_cast<size_t>(tail - lead) * B);
    low_ += lead;
}

Series Series::zero(RingPtr ring, long prec) {
    if (ring->is_rationals()) throw input_error("series over Q are not supported; use QPoly");
    Series s;
    s.ring_ = std::move(ring);
    s.low_ = std::min<long>(0, prec);
    s.prec_ = prec;
    return s;
}

Series Series::constant(const RingElement& c, long prec) {
    Series s = zero(c.ring(), prec);
    if (prec <= 0) return s;
    s.c_ = c.coeffs();
    s.low_ = 0;
    s.normalize();
    return s;
}

Series Series::monomial(const RingElement& c, long exp, long prec) {
    Series s = zero(c.ring(), prec);
    if (exp >= prec) return s;
    s.c_ = c.coeffs();
    s.low_ = exp;
    s.normalize();
    return s;
}

Series Series::identity(RingPtr ring, long prec) {
    auto one = ring->one();
    return monomial(one, 1, prec);
}

Series Series::from_terms(RingPtr ring, const std::vector<std::pair<long, RingElement>>& terms,
                          long prec) {
    Series s = zero(ring, prec);
    for (const auto& [e, c] : terms) s = s + monomial(c, e, prec);
    return s;
}

std::optional<long> Series::valuation() const {
    const int B = ring_->basis_size();
    for (long i = 0; i < len(); ++i)
        if (!ring_->k_is_zero(c_.data() + i * B)) return low_ + i;
    return std::nullopt;
}

RingElement Series::coeff(long e) const {
    if (e >= prec_) throw input_error("coefficient query beyond series precision");
    const int B = ring_->basis_size();
    if (e < low_ || e >= low_ + len()) return ring_->zero();
    std::vector<std::int64_t> v(c_.begin() + (e - low_) * B, c_.begin() + (e - low_ + 1) * B);
    return RingElement(ring_, std::move(v));
}

const std::int64_t* Series::block(long e) const {
    if (e < low_ || e >= low_ + len()) return nullptr;
    return c_.data() + (e - low_) * ring_->basis_size();
}

Series Series::assuming_prec(long prec) const {
    Series r = *this;
    r.prec_ = prec;
    r.normalize();
    return r;
}

Series series_add_impl(const Series& a, const Series& b, bool sub) {
    if (!a.ring_->same_ring(*b.ring_)) throw input_error("series over different rings");
    const int B = a.ring_->basis_size();
    Series r;
    r.ring_ = a.ring_;
    r.prec_ = std::min(a.prec_, b.prec_);
    long lo = std::min(a.low_, b.low_);
    long hi = std::min(std::max(a.low_ + a.len(), b.low_ + b.len()), r.prec_);
    if (hi <= lo) {
        r.low_ = std::min(lo, r.prec_);
        return r;
    }
    r.low_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo) * B, 0);
    for (long e = lo; e < hi; ++e) {
        auto* dst = r.c_.data() + (e - lo) * B;
        if (const auto* pa = a.block(e)) a.ring_->k_add(dst, pa);
        if (const auto* pb = b.block(e)) {
            if (sub)
                a.ring_->k_sub(dst, pb);
            else
                a.ring_->k_add(dst, pb);
        }
    }
    r.normalize();
    return r;
}

Series Series::operator+(const Series& o) const { return series_add_impl(*this, o, false); }
Series Series::operator-(const Series& o) const { return series_add_impl(*this, o, true); }

Series Series::operator-() const {
    Series r = *this;
    const int B = ring_->basis_size();
    for (long i = 0; i < r.len(); ++i) ring_->k_neg(r.c_.data() + i * B);
    return r;
}

Series Series::operator*(const Series& o) const {
    if (!ring_->same_ring(*o.ring_)) throw input_error("series over different rings");
    const int B = ring_->basis_size();
    Series r;
    r.ring_ = ring_;
    const long va = valuation().value_or(prec_);
    const long vb = o.valuation().value_or(o.prec_);
    // the unknown tail of one factor enters the product at the partner's valuation
    r.prec_ = std::min(prec_add(prec_, vb), prec_add(o.prec_, va));
    if (len() == 0 || o.len() == 0) {
        r.low_ = std::min(low_ + o.low_, r.prec_);
        return r;
    }
    long lo = low_ + o.low_;
    long hi = std::min(low_ + len() + o.low_ + o.len() - 1, r.prec_);
    if (hi <= lo) {
        r.low_ = std::min(lo, r.prec_);
        return r;
    }
    r.low_ = lo;
    r.c_.assign(static_cast<size_t>(hi - lo) * B, 0);
    for (long i = 0; i < len(); ++i) {
        const auto* pa = c_.data() + i * B;
        if (ring_->k_is_zero(pa)) continue;
        for (long j = 0; j < o.len(); ++j) {
            long e = low_ + i + o.low_ + j;
            if (e >= hi) break;
            const auto* pb = o.c_.data() + j * B;
            ring_->k_mul_acc(r.c_.data() + (e - lo) * B, pa, pb);
        }
    }
    r.normalize();
    return r;
}

bool Series::operator==(const Series& o) const {
    if (!ring_->same_ring(*o.ring_)) return false;
    long p = std::min(prec_, o.prec_);
    return equal_mod(*this, o, p);
}

bool equal_mod(const Series& a, const Series& b, long prec) {
    Series d = a - b;
    if (d.prec() < prec) throw input_error("precision too low for requested comparison window");
    auto v = d.valuation();
    return !v.has_value() || *v >= prec;
}

Series Series::scaled(const RingElement& c) const {
    return *this * Series::constant(c, kPrecExact);
}

Series Series::shifted(long k) const {
    Series r = *this;
    r.low_ += k;
    r.prec_ = prec_add(r.prec_, k);
    return r;
}

Series Series::truncated(long prec) const {
    Series r = *this;
    r.prec_ = std::min(r.prec_, prec);
    r.normalize();
    return r;
}

Series Series::inverse() const {
    auto v = valuation();
    if (!v) throw input_error("inverse of a series that vanishes to precision");
    RingElement lead = coeff(*v);
    if (!lead.is_unit()) throw input_error("division requires a unit leading coefficient");
    if (exact()) {
        if (len() == 1) // an exact monomial inverts exactly
            return Series::monomial(lead.inverse(), -*v, kPrecExact);
        throw input_error("inverse of an exact non-monomial series: truncate to a window first");
    }
    const long uprec = prec_ - *v; // window of the unit part
    if (uprec <= 0) throw precision_error("no window left to invert");
    const int B = ring_->basis_size();
    Series u = shifted(-*v);
    RingElement l0inv = lead.inverse();
    std::vector<std::int64_t> inv(static_cast<size_t>(uprec) * B, 0);
    std::vector<std::int64_t> acc(B);
    // c_0 = u_0^{-1}; c_k = -u_0^{-1} * sum_{i=1..k} u_i c_{k-i}
    ring_->k_copy(inv.data(), l0inv.coeffs().data());
    for (long k = 1; k < uprec; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        for (long i = 1; i <= k; ++i) {
            const auto* ui = u.block(i);
            if (!ui) continue;
            ring_->k_mul_acc(acc.data(), ui, inv.data() + (k - i) * B);
        }
        auto* dst = inv.data() + k * B;
        ring_->k_mul_acc(dst, acc.data(), l0inv.coeffs().data());
        ring_->k_neg(dst);
    }
    Series r;
    r.ring_ = ring_;
    r.low_ = 0;
    r.prec_ = uprec;
    r.c_ = std::move(inv);
    r.normalize();
    return r.shifted(-*v);
}

Series Series::div(const Series& o) const { return *this * o.inverse(); }

Series Series::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return Series::constant(ring_->one(), prec_add(prec_, -valuation().value_or(0)));
    Series r = *this;
    Series b = *this;
    e -= 1;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

Series Series::derivative() const {
    const int B = ring_->basis_size();
    Series r;
    r.ring_ = ring_;
    r.prec_ = prec_add(prec_, -1);
    if (len() == 0) {
        r.low_ = std::min(low_ - 1, r.prec_);
        return r;
    }
    r.low_ = low_ - 1;
    r.c_.assign(c_.size(), 0);
    for (long i = 0; i < len(); ++i) {
        long e = low_ + i;
        if (e == 0) continue;
        ring_->k_scal_acc(r.c_.data() + i * B, e % ring_->base_mod(), c_.data() + i * B);
    }
    r.normalize();
    return r;
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    const int B = ring_->basis_size();
    for (long i = 0; i < len(); ++i) {
        if (ring_->k_is_zero(c_.data() + i * B)) continue;
        long e = low_ + i;
        RingElement c = coeff(e);
        if (!first) os << " + ";
        std::string cs = c.to_string();
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (e == 0) {
            os << cs;
        } else {
            if (c.is_one()) {
                // bare power
            } else if (needs_parens) {
                os << "(" << cs << ")*";
            } else {
                os << cs << "*";
            }
            os << "T";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    if (first) os << "0";
    if (!exact()) os << " + O(T^" << prec_ << ")";
    return os.str();
}

namespace {

// nilpotency index of the constant coefficient, with 0 counted as index 1
long const_nilpotency(const Series& g) {
    RingElement c0 = g.low() > 0 ? g.ring()->zero() : g.coeff(0);
    if (c0.is_zero()) return 1;
    auto idx = c0.nilpotency_index();
    if (!idx) throw input_error("composition with a unit constant term leaves the ring");
    return *idx;
}

// Horner evaluation of the stored polynomial window at a ring element
RingElement eval_poly(const Series& f, const RingElement& x) {
    if (f.low() < 0) throw input_error("polynomial evaluation of a Laurent series");
    long hi = f.low();
    while (f.block(hi) != nullptr) ++hi;
    RingElement acc = f.ring()->zero();
    for (long e = hi - 1; e >= 0; --e) {
        acc = acc * x;
        if (const auto* b = f.block(e)) {
            std::vector<std::int64_t> v(b, b + f.ring()->basis_size());
            acc = acc + RingElement(f.ring(), std::move(v));
        }
    }
    return acc;
}

} // namespace

Series compose(const Series& f, const Series& g) {
    if (!f.ring()->same_ring(*g.ring())) throw input_error("series over different rings");
    if (f.valuation().value_or(0) < 0)
        throw input_error("compose requires a power series outer factor");
    if (g.valuation().value_or(0) < 0) throw input_error("compose with a Laurent inner factor");
    const long e = const_nilpotency(g);
    const long rprec = std::min(g.prec(), prec_add(f.prec(), 1 - e));
    Series r = Series::zero(f.ring(), rprec);
    if (f.len() == 0) return r;
    Series gt = g.truncated(rprec);
    const long hi = f.low() + f.len(); // one past top stored exponent
    for (long i = hi - 1; i >= 0; --i) {
        r = (r * gt).truncated(rprec);
        if (const auto* b = f.block(i)) {
            std::vector<std::int64_t> v(b, b + f.ring()->basis_size());
            r = r + Series::constant(RingElement(f.ring(), std::move(v)), rprec);
        }
    }
    return r;
}

namespace {

// solve f(x) = 0 for nilpotent x by Newton iteration in the coefficient ring
RingElement nilpotent_root(const Series& f) {
    auto ring = f.ring();
    RingElement x = ring->zero();
    Series fd = f.derivative();
    const long cap = ring->length() + 4;
    for (long it = 0; it < cap; ++it) {
        RingElement val = eval_poly(f, x);
        if (val.is_zero()) return x;
        RingElement der = eval_poly(fd, x);
        x = x - val * der.inverse();
    }
    if (eval_poly(f, x).is_zero()) return x;
    throw input_error("no nilpotent root: constant term is not resolvable");
}

} // namespace

Series reversion(const Series& f) {
    auto ring = f.ring();
    RingElement c0 = f.low() > 0 ? ring->zero() : f.coeff(0);
    if (!c0.is_zero() && c0.is_unit())
        throw input_error("reversion requires a nilpotent constant term");
    RingElement f1 = (f.low() > 1 || f.prec() <= 1) ? ring->zero() : f.coeff(1);
    if (!f1.is_unit()) throw input_error("reversion requires a unit linear coefficient");

    const long e = c0.is_zero() ? 1 : *c0.nilpotency_index();
    if (f.exact()) {
        if (f.len() == 1 && c0.is_zero()) // c*T inverts exactly
            return Series::monomial(f1.inverse(), 1, kPrecExact);
        throw input_error("reversion of an exact series: truncate to a window first");
    }
    const long target = prec_add(f.prec(), 1 - e);
    if (target < 2) throw precision_error("no window left for reversion");

    RingElement a = c0.is_zero() ? ring->zero() : nilpotent_root(f);
    RingElement slope = eval_poly(f.derivative(), a).inverse();
    // correct mod T^2: g = a + T / f'(a)
    Series g = Series::constant(a, 2) + Series::monomial(slope, 1, 2);
    Series fd = f.derivative();
    long k = 2;
    while (k < target) {
        long k2 = std::min(2 * k, target);
        Series gk = g.assuming_prec(k2);
        Series err = compose(f, gk).truncated(k2) - Series::identity(ring, k2);
        Series der = compose(fd, gk).truncated(k2);
        g = (gk - err.div(der)).truncated(k2);
        k = k2;
    }
    if (!equal_mod(compose(f, g), Series::identity(ring, target), target))
        throw internal_error("reversion did not converge");
    return g;
}

RingElement ring_mth_root(const RingElement& c, long m) {
    auto ring = c.ring();
    if (m < 1) throw input_error("m-th root with m < 1");
    if (!c.is_unit()) throw input_error("m-th root of a non-unit");
    if (m == 1) return c;
    const std::int64_t p = ring->char_p();
    if (p != 0 && m % p == 0) throw input_error("m divisible by the characteristic");
    const std::int64_t c0 = c.residue();
    std::int64_t r0 = -1;
    for (std::int64_t x = 1; x < p; ++x)
        if (pow_mod(x, m, p) == (c0 % p + p) % p) {
            r0 = x;
            break;
        }
    if (r0 < 0) throw input_error("constant term is not an m-th power in the residue field");
    RingElement x = ring->from_int(r0);
    RingElement me = ring->from_int(m);
    const long cap = ring->length() + 6;
    for (long it = 0; it < cap; ++it) {
        RingElement val = x.pow(m) - c;
        if (val.is_zero()) return x;
        RingElement der = me * x.pow(m - 1);
        x = x - val * der.inverse();
    }
    if ((x.pow(m) - c).is_zero()) return x;
    throw internal_error("ring m-th root iteration did not converge");
}

Series mth_root_unit(const Series& s, long m) {
    auto ring = s.ring();
    if (m < 1) throw input_error("m-th root with m < 1");
    const std::int64_t p = ring->char_p();
    if (p != 0 && m % p == 0) throw input_error("m divisible by the characteristic");
    auto v = s.valuation();
    if (!v) throw input_error("m-th root of a series that vanishes to precision");
    if (*v % m != 0) throw input_error("series valuation not divisible by m");
    if (m == 1) return s;
    Series u = s.shifted(-*v);
    RingElement lead = ring_mth_root(u.coeff(0), m);
    if (u.exact()) {
        if (u.len() == 1) return Series::monomial(lead, *v / m, kPrecExact);
        throw input_error("m-th root of an exact non-monomial series: truncate to a window first");
    }
    const long target = u.prec();

    // Newton: r <- r - (r^m - u) / (m r^{m-1}), starting from the exact constant root
    Series r = Series::constant(lead, 1);
    long k = 1;
    while (k < target) {
        long k2 = std::min(2 * k, target);
        Series rk = r.assuming_prec(k2);
        Series err = (rk.pow(m) - u.truncated(k2)).truncated(k2);
        Series der = rk.pow(m - 1).scaled(ring->from_int(m));
        r = (rk - err.div(der)).truncated(k2);
        k = k2;
    }
    if (!equal_mod(r.pow(m), u, target)) throw internal_error("series m-th root did not converge");
    return r.shifted(*v / m);
}

} // namespace wildram

#include "wildram/rings.hpp"
#include "wildram/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wildram {

namespace {

bool valid_var_name(const std::string& s) {
    if (s.empty() || s == "T") return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

// descending-degree polynomial string, coefficients as canonical residues
std::string poly_to_string(const std::vector<std::int64_t>& coeffs, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (long d = static_cast<long>(coeffs.size()) - 1; d >= 0; --d) {
        std::int64_t c = coeffs[d];
        if (c == 0) continue;
        if (!first) os << "+";
        if (d == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

RingDescriptor RingDescriptor::prime_field(std::int64_t p) {
    RingDescriptor d;
    d.kind = RingKind::PrimeField;
    d.p = p;
    d.n = 1;
    return d;
}

RingDescriptor RingDescriptor::integers_mod_pn(std::int64_t p, long n) {
    RingDescriptor d;
    d.kind = n == 1 ? RingKind::PrimeField : RingKind::IntegersModPn;
    d.p = p;
    d.n = n;
    return d;
}

RingDescriptor RingDescriptor::rationals() {
    RingDescriptor d;
    d.kind = RingKind::Rationals;
    return d;
}

RingDescriptor RingDescriptor::artin_trunc(std::int64_t p, long n, std::vector<std::string> vars,
                                           long trunc_degree) {
    RingDescriptor d;
    d.kind = RingKind::ArtinLocal;
    d.p = p;
    d.n = n;
    d.vars = std::move(vars);
    d.trunc_degree = trunc_degree;
    return d;
}

RingDescriptor RingDescriptor::artin_modulus(std::int64_t p, long n, std::string var,
                                             std::vector<std::int64_t> modulus) {
    RingDescriptor d;
    d.kind = RingKind::ArtinLocal;
    d.p = p;
    d.n = n;
    d.vars = {std::move(var)};
    d.modulus = std::move(modulus);
    return d;
}

Ring::Ring(RingDescriptor desc) : desc_(std::move(desc)) {
    if (desc_.kind == RingKind::Rationals) {
        B_ = 0;
        name_ = "Q";
        return;
    }
    if (!is_prime(desc_.p)) throw input_error("non-prime p in ring descriptor");
    if (desc_.n < 1) throw input_error("witt precision n must be >= 1");
    mod_ = prime_power(desc_.p, desc_.n);

    std::ostringstream base;
    if (desc_.n == 1)
        base << "F" << desc_.p;
    else
        base << "Z/" << desc_.p << "^" << desc_.n;

    if (desc_.kind != RingKind::ArtinLocal) {
        if (!desc_.vars.empty()) throw input_error("modular ring with variables");
        B_ = 1;
        basis_ = {std::vector<int>{}};
        table_ = {{{0, 1}}};
        name_ = base.str();
        return;
    }

    if (desc_.vars.empty()) throw input_error("ArtinLocal ring needs at least one variable");
    for (const auto& v : desc_.vars)
        if (!valid_var_name(v)) throw input_error("invalid variable name '" + v + "'");
    for (size_t i = 0; i < desc_.vars.size(); ++i)
        for (size_t j = i + 1; j < desc_.vars.size(); ++j)
            if (desc_.vars[i] == desc_.vars[j]) throw input_error("duplicate variable name");

    build_basis_and_table();

    std::ostringstream nm;
    nm << base.str() << "[";
    for (size_t i = 0; i < desc_.vars.size(); ++i) {
        if (i) nm << ",";
        nm << desc_.vars[i];
    }
    nm << "]/(";
    if (!desc_.modulus.empty())
        nm << poly_to_string(desc_.modulus, desc_.vars[0]);
    else
        nm << "deg>=" << desc_.trunc_degree;
    nm << ")";
    name_ = nm.str();
}

void Ring::build_basis_and_table() {
    const int nv = static_cast<int>(desc_.vars.size());
    if (!desc_.modulus.empty()) {
        if (nv != 1) throw input_error("univariate modulus requires exactly one variable");
        auto& f = desc_.modulus;
        // normalize coefficients into [0, p^n)
        for (auto& c : f) {
            c %= mod_;
            if (c < 0) c += mod_;
        }
        while (!f.empty() && f.back() == 0) f.pop_back();
        const long d = static_cast<long>(f.size()) - 1;
        if (d < 1) throw input_error("zero truncation degree / trivial modulus");
        if (f[d] != 1) throw input_error("non-monic modulus");
        for (long i = 0; i < d; ++i)
            if (f[i] % desc_.p != 0)
                throw input_error("modulus coefficients must be nilpotent: ring would not be "
                                  "local with nilpotent generator");
        for (long e = 0; e < d; ++e) basis_.push_back({static_cast<int>(e)});
        B_ = static_cast<int>(d);
        if (B_ > 64) throw input_error("monomial basis larger than supported bound 64");

        // powers of the generator reduced mod f, up to degree 2(d-1)
        std::vector<std::vector<std::int64_t>> pw(2 * d - 1, std::vector<std::int64_t>(d, 0));
        pw[0][0] = 1;
        for (long k = 1; k <= 2 * d - 2; ++k) {
            std::vector<std::int64_t> cur(d + 1, 0);
            for (long i = 0; i < d; ++i) cur[i + 1] = pw[k - 1][i];
            if (cur[d] != 0) {
                std::int64_t lead = cur[d];
                for (long i = 0; i < d; ++i) cur[i] = (cur[i] - lead % mod_ * f[i]) % mod_;
            }
            for (long i = 0; i < d; ++i) {
                std::int64_t c = cur[i] % mod_;
                if (c < 0) c += mod_;
                pw[k][i] = c;
            }
        }
        table_.assign(static_cast<size_t>(B_) * B_, {});
        for (int i = 0; i < B_; ++i)
            for (int j = 0; j < B_; ++j) {
                auto& entry = table_[static_cast<size_t>(i) * B_ + j];
                for (int k = 0; k < B_; ++k)
                    if (pw[i + j][k] != 0) entry.emplace_back(k, pw[i + j][k]);
            }
        return;
    }

    const long d = desc_.trunc_degree;
    if (d < 1) throw input_error("zero truncation degree");
    // graded-lex monomials of total degree < d
    std::vector<std::vector<int>> all;
    std::vector<int> cur(nv, 0);
    auto enumerate = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nv) {
            all.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur[pos] = 0;
    };
    enumerate(enumerate, 0, static_cast<int>(d) - 1);
    auto total = [](const std::vector<int>& e) {
        int t = 0;
        for (int x : e) t += x;
        return t;
    };
    std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
        int ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    basis_ = std::move(all);
    B_ = static_cast<int>(basis_.size());
    if (B_ > 64) throw input_error("monomial basis larger than supported bound 64");

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < B_; ++i) index[basis_[i]] = i;
    table_.assign(static_cast<size_t>(B_) * B_, {});
    for (int i = 0; i < B_; ++i)
        for (int j = 0; j < B_; ++j) {
            std::vector<int> e(nv);
            int t = 0;
            for (int k = 0; k < nv; ++k) {
                e[k] = basis_[i][k] + basis_[j][k];
                t += e[k];
            }
            if (t < d) table_[static_cast<size_t>(i) * B_ + j].emplace_back(index.at(e), 1);
        }
}

long Ring::length() const {
    if (is_rationals()) throw input_error("length of a non-finite ring");
    return static_cast<long>(B_) * desc_.n;
}

std::string Ring::monomial_name(int idx) const {
    if (idx < 0 || idx >= B_) throw input_error("monomial index out of range");
    const auto& e = basis_[idx];
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << desc_.vars[i];
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

RingElement Ring::monomial(int idx) const {
    if (idx < 0 || idx >= B_) throw input_error("monomial index out of range");
    std::vector<std::int64_t> c(B_, 0);
    c[idx] = 1;
    return RingElement(shared_from_this(), std::move(c));
}

void Ring::k_zero(std::int64_t* dst) const { std::fill(dst, dst + B_, 0); }
void Ring::k_copy(std::int64_t* dst, const std::int64_t* a) const { std::copy(a, a + B_, dst); }

void Ring::k_add(std::int64_t* dst, const std::int64_t* a) const {
    for (int i = 0; i < B_; ++i) {
        dst[i] += a[i];
        if (dst[i] >= mod_) dst[i] -= mod_;
    }
}

void Ring::k_sub(std::int64_t* dst, const std::int64_t* a) const {
    for (int i = 0; i < B_; ++i) {
        dst[i] -= a[i];
        if (dst[i] < 0) dst[i] += mod_;
    }
}

void Ring::k_neg(std::int64_t* dst) const {
    for (int i = 0; i < B_; ++i)
        if (dst[i] != 0) dst[i] = mod_ - dst[i];
}

void Ring::k_mul_acc(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b) const {
    for (int i = 0; i < B_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < B_; ++j) {
            if (b[j] == 0) continue;
            std::int64_t c = a[i] * b[j] % mod_;
            if (c == 0) continue;
            for (const auto& [k, t] : table_[static_cast<size_t>(i) * B_ + j])
                dst[k] = (dst[k] + c * t) % mod_;
        }
    }
}

void Ring::k_scal_acc(std::int64_t* dst, std::int64_t s, const std::int64_t* a) const {
    s %= mod_;
    if (s < 0) s += mod_;
    if (s == 0) return;
    for (int i = 0; i < B_; ++i) dst[i] = (dst[i] + s * a[i]) % mod_;
}

bool Ring::k_is_zero(const std::int64_t* a) const {
    for (int i = 0; i < B_; ++i)
        if (a[i] != 0) return false;
    return true;
}

void Ring::k_set_int(std::int64_t* dst, const Integer& v) const {
    k_zero(dst);
    Integer r = v % mod_;
    if (r < 0) r += mod_;
    dst[0] = static_cast<std::int64_t>(r);
}

std::int64_t Ring::k_residue(const std::int64_t* a) const { return a[0] % desc_.p; }

RingElement Ring::zero() const {
    if (is_rationals()) return RingElement(shared_from_this(), Rational(0));
    return RingElement(shared_from_this(), std::vector<std::int64_t>(B_, 0));
}

RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(const Integer& v) const {
    if (is_rationals()) return RingElement(shared_from_this(), Rational(v));
    std::vector<std::int64_t> c(B_, 0);
    k_set_int(c.data(), v);
    return RingElement(shared_from_this(), std::move(c));
}

RingElement Ring::from_rational(const Rational& q) const {
    if (is_rationals()) return RingElement(shared_from_this(), q);
    return from_int(numerator(q)) * from_int(denominator(q)).inverse();
}

RingElement Ring::element_from_coeffs(std::vector<std::int64_t> c) const {
    if (is_rationals()) throw input_error("coefficient vector over Q ring");
    if (static_cast<int>(c.size()) != B_) throw input_error("coefficient vector length mismatch");
    for (auto& x : c) {
        x %= mod_;
        if (x < 0) x += mod_;
    }
    return RingElement(shared_from_this(), std::move(c));
}

RingPtr mk_ring(const RingDescriptor& desc) { return std::make_shared<const Ring>(desc); }

RingElement::RingElement(RingPtr ring, std::vector<std::int64_t> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {}

RingElement::RingElement(RingPtr ring, Rational q) : ring_(std::move(ring)), q_(std::move(q)) {}

void RingElement::check_compatible(const RingElement& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_ring(*o.ring_))
        throw input_error("ring element operation across different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_compatible(o);
    if (ring_->is_rationals()) return RingElement(ring_, q_ + o.q_);
    auto c = c_;
    ring_->k_add(c.data(), o.c_.data());
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_compatible(o);
    if (ring_->is_rationals()) return RingElement(ring_, q_ - o.q_);
    auto c = c_;
    ring_->k_sub(c.data(), o.c_.data());
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_compatible(o);
    if (ring_->is_rationals()) return RingElement(ring_, q_ * o.q_);
    std::vector<std::int64_t> c(ring_->basis_size(), 0);
    ring_->k_mul_acc(c.data(), c_.data(), o.c_.data());
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator-() const {
    if (ring_->is_rationals()) return RingElement(ring_, -q_);
    auto c = c_;
    ring_->k_neg(c.data());
    return RingElement(ring_, std::move(c));
}

bool RingElement::operator==(const RingElement& o) const {
    check_compatible(o);
    if (ring_->is_rationals()) return q_ == o.q_;
    return c_ == o.c_; // canonical form: equality is representation equality
}

bool RingElement::is_zero() const {
    if (ring_->is_rationals()) return q_ == 0;
    return ring_->k_is_zero(c_.data());
}

bool RingElement::is_one() const {
    if (ring_->is_rationals()) return q_ == 1;
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool RingElement::is_unit() const {
    if (ring_->is_rationals()) return q_ != 0;
    return ring_->k_residue(c_.data()) != 0;
}

std::optional<long> RingElement::nilpotency_index() const {
    if (ring_->is_rationals()) throw input_error("nilpotency_index over Q");
    if (is_unit()) return std::nullopt;
    RingElement pw = *this;
    const long cap = ring_->length() + 2;
    for (long e = 1; e <= cap; ++e) {
        if (pw.is_zero()) return e;
        pw = pw * (*this);
    }
    throw internal_error("non-unit without nilpotency index");
}

RingElement RingElement::inverse() const {
    if (ring_->is_rationals()) {
        if (q_ == 0) throw input_error("division by zero");
        return RingElement(ring_, 1 / q_);
    }
    if (!is_unit()) throw input_error("exact division by a non-unit");
    const std::int64_t c0inv = inv_mod(c_[0], ring_->base_mod());
    RingElement scaled = *this * ring_->from_int(c0inv); // 1 + z with z nilpotent
    RingElement z = scaled - ring_->one();
    RingElement acc = ring_->one();
    RingElement pw = z;
    const long cap = ring_->length() + 2;
    long sign = -1;
    for (long e = 0; e < cap && !pw.is_zero(); ++e) {
        acc = sign < 0 ? acc - pw : acc + pw;
        pw = pw * z;
        sign = -sign;
    }
    RingElement inv = acc * ring_->from_int(c0inv);
    if (!((*this) * inv).is_one()) throw internal_error("unit inverse verification failed");
    return inv;
}

RingElement RingElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RingElement r = ring_->one();
    RingElement b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::int64_t RingElement::residue() const {
    if (ring_->is_rationals()) throw input_error("residue of a rational");
    return ring_->k_residue(c_.data());
}

RingElement RingElement::residue_constant() const { return ring_->from_int(residue()); }

RingElement RingElement::nilpotent_part() const { return *this - residue_constant(); }

long RingElement::p_valuation(std::int64_t p) const {
    if (!ring_->is_rationals()) throw input_error("p_valuation is a Rationals-kind query");
    return wildram::p_valuation(q_, p);
}

const Rational& RingElement::rational_value() const {
    if (!ring_->is_rationals()) throw input_error("rational_value of a finite-ring element");
    return q_;
}

std::string RingElement::to_string() const {
    if (ring_->is_rationals()) return q_.str();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < ring_->basis_size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        std::string mono = ring_->monomial_name(i);
        if (mono == "1")
            os << c_[i];
        else if (c_[i] == 1)
            os << mono;
        else
            os << c_[i] << "*" << mono;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

bool modular_kind(RingKind k) {
    return k == RingKind::PrimeField || k == RingKind::IntegersModPn;
}

// expresses each A'-basis monomial in A's basis, or fails
std::vector<RingElement> reduction_images(const RingPtr& ap, const RingPtr& a) {
    std::vector<RingElement> img;
    const auto& dp = ap->descriptor();
    const auto& da = a->descriptor();
    if (dp.p != da.p) throw input_error("small extension across different residue characteristics");

    for (const auto& e : ap->basis_exponents()) {
        int total = 0;
        for (int x : e) total += x;
        if (modular_kind(da.kind)) {
            img.push_back(total == 0 ? a->one() : a->zero());
            continue;
        }
        if (dp.vars != da.vars) throw input_error("small extension with mismatched variables");
        if (!da.modulus.empty()) {
            // class of the generator power in A = base[u]/(f)
            RingElement gen = a->basis_size() >= 2 ? a->monomial(1)
                                                   : a->from_int(-da.modulus[0]);
            img.push_back(gen.pow(total));
        } else {
            if (total >= da.trunc_degree) {
                img.push_back(a->zero());
            } else {
                // same monomial in A
                int idx = -1;
                const auto& ab = a->basis_exponents();
                for (size_t i = 0; i < ab.size(); ++i)
                    if (ab[i] == e) {
                        idx = static_cast<int>(i);
                        break;
                    }
                if (idx < 0) throw input_error("basis of A does not embed in A'");
                img.push_back(a->monomial(idx));
            }
        }
    }
    return img;
}

} // namespace

RingElement SmallExtension::reduce(const RingElement& x) const {
    if (!x.ring()->same_ring(*from)) throw input_error("reduce: element not in A'");
    auto images = reduction_images(from, to);
    RingElement r = to->zero();
    const auto& c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) r = r + images[i] * to->from_int(c[i]);
    return r;
}

RingElement SmallExtension::lift(const RingElement& x) const {
    if (!x.ring()->same_ring(*to)) throw input_error("lift: element not in A");
    const auto& ab = to->basis_exponents();
    const auto& apb = from->basis_exponents();
    std::vector<std::int64_t> c(from->basis_size(), 0);
    const auto& xc = x.coeffs();
    for (size_t i = 0; i < ab.size(); ++i) {
        if (xc[i] == 0) continue;
        auto it = std::find(apb.begin(), apb.end(), ab[i]);
        if (it == apb.end()) throw internal_error("basis of A not contained in basis of A'");
        c[static_cast<size_t>(it - apb.begin())] = xc[i];
    }
    return from->element_from_coeffs(std::move(c));
}

SmallExtension small_extension(const RingPtr& a_prime, const RingPtr& a) {
    const auto& dp = a_prime->descriptor();
    const auto& da = a->descriptor();
    if (dp.kind == RingKind::Rationals || da.kind == RingKind::Rationals)
        throw input_error("small extensions live in the Artin category");
    if (dp.p != da.p) throw input_error("small extension across different characteristics");

    auto images = reduction_images(a_prime, a);

    // ring-hom property, exhaustively on the monomial basis
    for (int i = 0; i < a_prime->basis_size(); ++i)
        for (int j = 0; j < a_prime->basis_size(); ++j) {
            RingElement lhs = a->zero();
            std::vector<std::int64_t> prod(a_prime->basis_size(), 0);
            std::vector<std::int64_t> mi(a_prime->basis_size(), 0), mj(a_prime->basis_size(), 0);
            mi[i] = 1;
            mj[j] = 1;
            a_prime->k_mul_acc(prod.data(), mi.data(), mj.data());
            for (int k = 0; k < a_prime->basis_size(); ++k)
                if (prod[k] != 0) lhs = lhs + images[k] * a->from_int(prod[k]);
            RingElement rhs = images[i] * images[j];
            if (!(lhs == rhs))
                throw input_error("reduction A' -> A is not a ring homomorphism");
        }

    // candidate kernel generator
    RingElement t = a_prime->zero();
    if (dp.vars == da.vars && dp.modulus == da.modulus && dp.trunc_degree == da.trunc_degree &&
        a_prime->basis_size() == a->basis_size()) {
        if (dp.n != da.n + 1)
            throw input_error("kernel not principal: base precision drop larger than one step");
        t = a_prime->from_int(prime_power(dp.p, da.n));
    } else {
        if (dp.n != da.n)
            throw input_error("small extension changes both basis and base precision");
        // lowest extra monomial of A' relative to A
        int extra = -1;
        const auto& apb = a_prime->basis_exponents();
        const auto& ab = a->basis_exponents();
        for (size_t i = 0; i < apb.size(); ++i) {
            bool in_a = false;
            if (modular_kind(da.kind)) {
                int total = 0;
                for (int x : apb[i]) total += x;
                in_a = total == 0;
            } else {
                in_a = std::find(ab.begin(), ab.end(), apb[i]) != ab.end();
            }
            if (!in_a) {
                extra = static_cast<int>(i);
                break;
            }
        }
        if (extra < 0) throw input_error("A' -> A has trivial kernel: not a small extension");
        t = a_prime->monomial(extra);
    }

    // maximal-ideal annihilation: t * g = 0 for each generator of M_{A'}
    std::vector<RingElement> mgens;
    for (size_t v = 0; v < dp.vars.size(); ++v) {
        const auto& apb = a_prime->basis_exponents();
        for (size_t i = 0; i < apb.size(); ++i) {
            int tot = 0;
            for (int x : apb[i]) tot += x;
            if (tot == 1 && apb[i][v] == 1) {
                mgens.push_back(a_prime->monomial(static_cast<int>(i)));
                break;
            }
        }
    }
    mgens.push_back(a_prime->from_int(dp.p));
    for (const auto& g : mgens)
        if (!(t * g).is_zero())
            throw input_error("extension not small: kernel generator " + t.to_string() + " times " +
                              g.to_string() + " is nonzero in A'");

    // principality: with t*M = 0 the ideal (t) has exactly p elements, so the
    // kernel is principal iff |ker| = |A'|/|A| = p
    const long kernel_log = a_prime->length() - a->length();
    if (kernel_log != 1)
        throw input_error("kernel not principal: |A'|/|A| = p^" + std::to_string(kernel_log));

    SmallExtension ext{a_prime, a, t};
    if (!ext.reduce(t).is_zero()) throw internal_error("kernel generator does not reduce to zero");
    return ext;
}

RingPtr shrink_one_step(const RingPtr& a_prime) {
    const auto& d = a_prime->descriptor();
    switch (d.kind) {
    case RingKind::Rationals:
        throw input_error("cannot shrink Q");
    case RingKind::PrimeField:
        throw input_error("cannot shrink a prime field");
    case RingKind::IntegersModPn:
        return mk_ring(RingDescriptor::integers_mod_pn(d.p, d.n - 1));
    case RingKind::ArtinLocal: {
        if (!d.modulus.empty()) {
            // only pure monomial moduli have a canonical one-step shrink
            const long deg = static_cast<long>(d.modulus.size()) - 1;
            for (long i = 0; i < deg; ++i)
                if (d.modulus[i] != 0)
                    throw input_error("no canonical shrink for a non-monomial modulus");
            if (deg == 2) return mk_ring(RingDescriptor::integers_mod_pn(d.p, d.n));
            std::vector<std::int64_t> f(deg, 0);
            f[deg - 1] = 1;
            return mk_ring(RingDescriptor::artin_modulus(d.p, d.n, d.vars[0], std::move(f)));
        }
        if (d.trunc_degree == 1) throw input_error("already the base ring");
        if (d.trunc_degree == 2 && d.vars.size() == 1)
            return mk_ring(RingDescriptor::integers_mod_pn(d.p, d.n));
        return mk_ring(RingDescriptor::artin_trunc(d.p, d.n, d.vars, d.trunc_degree - 1));
    }
    }
    throw internal_error("unreachable");
}

} // namespace wildram

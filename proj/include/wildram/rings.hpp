#pragma once

#include "wildram/numeric.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wildram {

enum class RingKind { PrimeField, IntegersModPn, Rationals, ArtinLocal };

/// Presentation of a coefficient ring.
///
/// ArtinLocal rings are base[vars]/(relations) with base = F_p (n == 1) or
/// Z/p^n, and relations either a single monic univariate modulus whose
/// non-leading coefficients are nilpotent in the base, or the monomial ideal
/// of all total degree >= trunc_degree. Both give a local ring with maximal
/// ideal (vars) + (p), so every element is residue-constant + nilpotent.
struct RingDescriptor {
    RingKind kind = RingKind::PrimeField;
    std::int64_t p = 0;
    long n = 1;
    std::vector<std::string> vars;
    std::vector<std::int64_t> modulus; // ascending degree; empty means truncation presentation
    long trunc_degree = 0;             // used when modulus is empty

    static RingDescriptor prime_field(std::int64_t p);
    static RingDescriptor integers_mod_pn(std::int64_t p, long n);
    static RingDescriptor rationals();
    static RingDescriptor artin_trunc(std::int64_t p, long n, std::vector<std::string> vars,
                                      long trunc_degree);
    static RingDescriptor artin_modulus(std::int64_t p, long n, std::string var,
                                        std::vector<std::int64_t> modulus);
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class RingElement;

/// Immutable ring handle with exact arithmetic kernels.
///
/// Finite kinds represent elements as coefficient vectors over the monomial
/// basis (graded-lex order), each coefficient a residue in [0, p^n). The
/// kernels below act on raw coefficient blocks of length basis_size(); they
/// are the hot path shared by RingElement and the series engine.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    explicit Ring(RingDescriptor desc);

    const RingDescriptor& descriptor() const { return desc_; }
    RingKind kind() const { return desc_.kind; }
    bool is_rationals() const { return desc_.kind == RingKind::Rationals; }
    std::int64_t char_p() const { return desc_.p; } // residue characteristic; 0 for Q
    long witt_precision() const { return desc_.n; }
    std::int64_t base_mod() const { return mod_; } // p^n; 0 for Q

    int basis_size() const { return B_; }
    long length() const; // composition length over Z_p: basis_size * n
    const std::vector<std::vector<int>>& basis_exponents() const { return basis_; }
    std::string monomial_name(int idx) const;
    RingElement monomial(int idx) const;

    std::string name() const { return name_; }
    bool same_ring(const Ring& other) const { return name_ == other.name_; }

    // --- kernels on coefficient blocks of length basis_size() ---
    void k_zero(std::int64_t* dst) const;
    void k_copy(std::int64_t* dst, const std::int64_t* a) const;
    void k_add(std::int64_t* dst, const std::int64_t* a) const;
    void k_sub(std::int64_t* dst, const std::int64_t* a) const;
    void k_neg(std::int64_t* dst) const;
    // dst += a*b, fully reduced
    void k_mul_acc(std::int64_t* dst, const std::int64_t* a, const std::int64_t* b) const;
    // dst += s*a for a scalar residue s
    void k_scal_acc(std::int64_t* dst, std::int64_t s, const std::int64_t* a) const;
    bool k_is_zero(const std::int64_t* a) const;
    void k_set_int(std::int64_t* dst, const Integer& v) const;
    std::int64_t k_residue(const std::int64_t* a) const; // image in F_p

    // --- element factories ---
    RingElement zero() const;
    RingElement one() const;
    RingElement from_int(const Integer& v) const;
    RingElement from_rational(const Rational& q) const; // requires denominator invertible
    RingElement element_from_coeffs(std::vector<std::int64_t> c) const;

private:
    RingDescriptor desc_;
    std::int64_t mod_ = 0; // p^n
    int B_ = 1;
    std::vector<std::vector<int>> basis_;                             // exponent tuples
    std::vector<std::vector<std::pair<int, std::int64_t>>> table_;    // basis products, reduced
    std::string name_;

    void build_basis_and_table();
    friend class RingElement;
};

/// Validates the descriptor and returns a ring handle.
RingPtr mk_ring(const RingDescriptor& desc);

class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, std::vector<std::int64_t> coeffs);
    RingElement(RingPtr ring, Rational q);

    const RingPtr& ring() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    std::optional<long> nilpotency_index() const; // none when unit; least e with x^e = 0
    RingElement inverse() const;                  // exact division by units only
    RingElement pow(long e) const;                // e >= 0, or any e for units

    std::int64_t residue() const;        // image in F_p as canonical representative
    RingElement residue_constant() const;
    RingElement nilpotent_part() const;  // x - residue_constant(); in the maximal ideal

    long p_valuation(std::int64_t p) const; // Rationals kind only

    const Rational& rational_value() const;
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<std::int64_t> c_; // finite kinds
    Rational q_;                  // Rationals kind

    void check_compatible(const RingElement& o) const;
};

/// Witness of a small extension A' -> A: the canonical reduction map together
/// with a generator t of the principal kernel satisfying t * M_{A'} = 0.
struct SmallExtension {
    RingPtr from; // A'
    RingPtr to;   // A
    RingElement kernel_gen;

    RingElement reduce(const RingElement& x) const;
    RingElement lift(const RingElement& x) const; // monomial-wise section of reduce
};

/// Verifies that A' -> A is a small extension (principal kernel annihilated by
/// the maximal ideal) and returns the witness. The check is exhaustive on the
/// monomial basis. Throws verification_error when the surjection exists but is
/// not small, input_error when the rings are not in a reducible shape.
SmallExtension small_extension(const RingPtr& a_prime, const RingPtr& a);

/// A one-step shrink of a ring presentation (drop top monomial / lower n),
/// used by the CLI to derive A from A'. Throws when no canonical shrink exists.
RingPtr shrink_one_step(const RingPtr& a_prime);

} // namespace wildram

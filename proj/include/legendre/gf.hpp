#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace legendre {

/// Largest field order accepted by make_field. Residues are stored in
/// 64-bit words and every product of two residues fits in 64 bits.
inline constexpr std::uint64_t kMaxFieldOrder = 0xFFFFFFFFull;

bool is_prime(std::uint64_t n);

/// Returns (p, k) with q = p^k, or nothing when q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

/// Monic polynomial over F_p, coefficients low-degree-first, leading 1
/// included. Irreducibility is decided by gcd(x^(p^i) - x, f) = 1 for
/// every i <= deg(f)/2.
bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p);

class FieldElement;

/// F_q = F_p[x]/(m(x)). Elements point back at their field, so a FieldSpec
/// is pinned in memory and must outlive every element built from it.
class FieldSpec {
public:
    FieldSpec(std::uint64_t p, unsigned k);

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint64_t order() const { return q_; }

    /// Monic modulus, low-degree-first, size degree() + 1.
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;

    /// Element from its integer encoding sum(c_i * p^i), which must be < q.
    FieldElement element(std::uint64_t encoded) const;

    /// Element from coefficients low-degree-first; at most degree() entries,
    /// each < p.
    FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;

    /// Image of an integer in the prime subfield.
    FieldElement from_integer(std::int64_t n) const;

    std::vector<std::uint64_t> coeffs_of(std::uint64_t encoded) const;
    std::uint64_t encode(std::span<const std::uint64_t> coeffs) const;

    /// First quadratic nonresidue in canonical order.
    std::uint64_t nonresidue() const { return nonresidue_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

private:
    friend class FieldElement;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> radix_;  // p^i for i < k
    std::uint64_t nonresidue_ = 0;
};

using FieldRef = std::shared_ptr<const FieldSpec>;

/// Builds F_{p^k} with the lexicographically smallest monic irreducible
/// modulus (constant term compared first). Throws std::invalid_argument for
/// p in {2, 3}, composite p, k < 1, or p^k above kMaxFieldOrder.
FieldRef make_field(std::uint64_t p, unsigned k);

/// Canonical reduced residue of F_q, stored as its integer encoding.
/// The canonical order is the order of the encodings.
class FieldElement {
public:
    FieldElement(const FieldSpec& field, std::uint64_t encoded) : field_(&field), value_(encoded) {}

    const FieldSpec& field() const { return *field_; }
    std::uint64_t value() const { return value_; }
    std::vector<std::uint64_t> coeffs() const { return field_->coeffs_of(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    /// Throws std::domain_error on zero.
    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement square() const { return *this * *this; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
        return a.value_ <=> b.value_;
    }

private:
    const FieldElement& checked(const FieldElement& o) const;

    const FieldSpec* field_;
    std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// All q elements in canonical order, starting with zero.
std::vector<FieldElement> elements(const FieldSpec& field);

/// 1 for nonzero squares, -1 for nonsquares, 0 for zero (Euler criterion).
int jacobi(const FieldElement& a);

/// Tonelli-Shanks over F_q. Returns the canonically smaller root, or
/// nothing for a nonsquare.
std::optional<FieldElement> sqrt(const FieldElement& a);

}  // namespace legendre

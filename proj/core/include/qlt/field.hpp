#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "qlt/errors.hpp"

namespace qlt {

/// Exact field element. Equality is decidable and exact; there is no
/// tolerance parameter anywhere in this library. `make(n)` mints the integer
/// n as an element of the same field as *this, which is how generic code
/// obtains constants without carrying a field descriptor around.
template <class F>
concept ExactField = std::regular<F> && requires(const F a, const F b, std::int64_t n) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.inv() } -> std::same_as<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.make(n) } -> std::same_as<F>;
    { a.to_string() } -> std::same_as<std::string>;
};

/// Arbitrary-precision rational number, always kept in canonical form:
/// reduced fraction with positive denominator. Backed by GMP.
class Rat {
  public:
    Rat() : v_(0) {}
    explicit Rat(std::int64_t n) : v_(static_cast<long>(n)) {}

    /// Reduced fraction num/den. Throws on a zero denominator.
    Rat(std::int64_t num, std::int64_t den);

    /// Parses "n" or "n/d" with an optional leading sign. Throws on anything
    /// else, including a zero denominator.
    static Rat parse(const std::string& text);

    Rat make(std::int64_t n) const { return Rat(n); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw error("division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }

    Rat inv() const {
        if (is_zero()) throw error("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }

    /// Canonical decimal string, "n" or "n/d".
    std::string to_string() const { return v_.get_str(); }

    const mpq_class& value() const { return v_; }

  private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_; // canonical at all times
};

/// Element of a prime field F_p, stored as the canonical residue in [0, p).
/// The modulus travels with the element so that mixing fields is detected.
class Fp {
  public:
    /// Unattached element; usable only as a target of assignment.
    Fp() = default;

    /// Reduces value mod p into [0, p).
    Fp(std::int64_t value, std::uint64_t p);

    /// Parses a decimal residue (optional sign), reduced mod p.
    static Fp parse(const std::string& text, std::uint64_t p);

    Fp make(std::int64_t n) const;

    std::uint64_t residue() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator-() const;
    Fp operator/(const Fp& o) const;
    Fp inv() const;

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }

    std::string to_string() const { return std::to_string(v_); }

  private:
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    void require_attached() const {
        if (p_ == 0) throw field_mismatch_error();
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;

    friend class Field;
};

enum class FieldKind { rational, prime };

/// Field descriptor: the rationals, or F_p for an odd prime p. Construction
/// of a prime field runs a deterministic primality test.
class Field {
  public:
    static Field rationals() { return Field(FieldKind::rational, 0); }

    /// Throws unless p is an odd prime below 2^63.
    static Field prime(std::uint64_t p);

    /// Parses the selection grammar "rational" or "fp:<p>".
    static Field parse(const std::string& spec);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }

    /// Inverse of parse(): "rational" or "fp:<p>".
    std::string to_string() const;

    bool operator==(const Field&) const = default;

  private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Field selection string of the field an element belongs to.
inline std::string field_descriptor(const Rat&) { return "rational"; }
inline std::string field_descriptor(const Fp& x) { return "fp:" + std::to_string(x.modulus()); }

/// Reduced fraction with positive denominator and gcd 1.
inline Rat make_rational(std::int64_t numerator, std::int64_t denominator) {
    return Rat(numerator, denominator);
}

/// Canonical residue of `residue` in the given prime field.
Fp make_prime_element(const Field& field, std::int64_t residue);

/// x^n with x^0 = 1; negative exponents go through the exact inverse.
template <ExactField F>
F pow(const F& x, std::int64_t n) {
    if (n == 0) return x.make(1);
    F base = x;
    if (n < 0) {
        if (x.is_zero()) throw error("inverse of zero");
        base = x.inv();
        n = -n;
    }
    F acc = x.make(1);
    for (;;) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n == 0) break;
        base = base * base;
    }
    return acc;
}

} // namespace qlt

#include "qlt/field.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace qlt {

namespace {

// Grammar for rational literals: [+-]? digits ( '/' digits )?
bool well_formed_rational(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i == s.size() && i > start;
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

} // namespace

Rat::Rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw error("division by zero");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    if (!well_formed_rational(text)) throw error("malformed rational literal: " + text);
    // mpq_set_str does not accept an explicit leading '+'
    mpq_class v(text[0] == '+' ? text.substr(1) : text, 10);
    if (v.get_den() == 0) throw error("division by zero");
    v.canonicalize();
    Rat out;
    out.v_ = std::move(v);
    return out;
}

Fp::Fp(std::int64_t value, std::uint64_t p) {
    if (p == 0) throw error("prime field modulus must be nonzero");
    p_ = p;
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r);
}

Fp Fp::parse(const std::string& text, std::uint64_t p) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw error("malformed prime field literal: " + text);
    return Fp(value, p);
}

Fp Fp::make(std::int64_t n) const {
    require_attached();
    return Fp(n, p_);
}

Fp Fp::operator+(const Fp& o) const {
    require_attached();
    if (p_ != o.p_) throw field_mismatch_error();
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return raw(s, p_);
}

Fp Fp::operator-(const Fp& o) const {
    require_attached();
    if (p_ != o.p_) throw field_mismatch_error();
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
}

Fp Fp::operator*(const Fp& o) const {
    require_attached();
    if (p_ != o.p_) throw field_mismatch_error();
    return raw(mul_mod(v_, o.v_, p_), p_);
}

Fp Fp::operator-() const {
    require_attached();
    return raw(v_ == 0 ? 0 : p_ - v_, p_);
}

Fp Fp::operator/(const Fp& o) const {
    if (o.is_zero()) throw error("division by zero");
    return *this * o.inv();
}

// Extended Euclid; gcd(v, p) = 1 because p is prime and v is nonzero.
Fp Fp::inv() const {
    require_attached();
    if (v_ == 0) throw error("inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
        const std::int64_t quo = r / new_r;
        t = std::exchange(new_t, t - quo * new_t);
        r = std::exchange(new_r, r - quo * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return raw(static_cast<std::uint64_t>(t), p_);
}

// Deterministic Miller-Rabin: this witness set is exact for all n < 3.3e24,
// which covers the full 64-bit range.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 63)) throw error("prime field modulus too large");
    if (p == 2 || !is_prime(p)) throw error("prime field modulus must be an odd prime");
    return Field(FieldKind::prime, p);
}

Field Field::parse(const std::string& spec) {
    if (spec == "rational") return rationals();
    if (spec.rfind("fp:", 0) == 0) {
        const std::string digits = spec.substr(3);
        std::uint64_t p = 0;
        const char* first = digits.data();
        const char* last = digits.data() + digits.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc() || ptr != last || digits.empty())
            throw error("malformed field spec: " + spec);
        return prime(p);
    }
    throw error("unknown field spec: " + spec + " (expected \"rational\" or \"fp:<p>\")");
}

std::string Field::to_string() const {
    return kind_ == FieldKind::rational ? "rational" : "fp:" + std::to_string(p_);
}

Fp make_prime_element(const Field& field, std::int64_t residue) {
    if (field.kind() != FieldKind::prime) throw error("field is not a prime field");
    return Fp(residue, field.modulus());
}

} // namespace qlt

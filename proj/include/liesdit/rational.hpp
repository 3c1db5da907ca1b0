#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace liesdit {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal rationals always have identical numerator/denominator pairs.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT: implicit from integers is intended
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    /// Parses "a" or "a/b" (decimal, optional leading '-' or '+').
    /// Throws std::invalid_argument on bad syntax or zero denominator.
    /// `canonical` (if given) receives whether the text was already canonical.
    static Rational parse(std::string_view text, bool* canonical = nullptr);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational inverse() const;
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class v_;
};

}  // namespace liesdit

#pragma once

#include "liesdit/rational.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace liesdit {

/// Element of the prime field GF(P), always stored reduced into [0, P).
template <std::uint32_t P>
class Zp {
    static_assert(P >= 2 && P < (1u << 16), "small primes only");

public:
    static constexpr std::uint32_t modulus = P;

    Zp() = default;
    Zp(long value) : v_(reduce(value)) {}  // NOLINT: implicit from integers is intended

    static Zp zero() { return Zp(); }
    static Zp one() { return Zp(1); }

    /// Image of a rational under the reduction map; the denominator must be a unit mod P.
    static Zp from_rational(const Rational& q) {
        const auto num = static_cast<long>(mpz_fdiv_ui(q.num().get_mpz_t(), P));
        const auto den = static_cast<long>(mpz_fdiv_ui(q.den().get_mpz_t(), P));
        if (den == 0) {
            throw std::domain_error("denominator of " + q.to_string() + " vanishes mod " +
                                    std::to_string(P));
        }
        return Zp(num) / Zp(den);
    }

    std::uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Zp inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
        // Fermat: v^(P-2)
        std::uint64_t result = 1, base = v_;
        for (std::uint32_t e = P - 2; e > 0; e >>= 1) {
            if (e & 1u) result = result * base % P;
            base = base * base % P;
        }
        return from_raw(static_cast<std::uint32_t>(result));
    }

    std::string to_string() const { return std::to_string(v_); }

    Zp& operator+=(Zp o) { v_ = (v_ + o.v_) % P; return *this; }
    Zp& operator-=(Zp o) { v_ = (v_ + P - o.v_) % P; return *this; }
    Zp& operator*=(Zp o) {
        v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P);
        return *this;
    }
    Zp& operator/=(Zp o) { return *this *= o.inverse(); }

    friend Zp operator+(Zp a, Zp b) { return a += b; }
    friend Zp operator-(Zp a, Zp b) { return a -= b; }
    friend Zp operator*(Zp a, Zp b) { return a *= b; }
    friend Zp operator/(Zp a, Zp b) { return a /= b; }
    Zp operator-() const { return from_raw((P - v_) % P); }

    friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
    friend auto operator<=>(Zp a, Zp b) { return a.v_ <=> b.v_; }

    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

private:
    static std::uint32_t reduce(long value) {
        long r = value % static_cast<long>(P);
        if (r < 0) r += P;
        return static_cast<std::uint32_t>(r);
    }
    static Zp from_raw(std::uint32_t v) {
        Zp z;
        z.v_ = v;
        return z;
    }

    std::uint32_t v_ = 0;
};

using GF2 = Zp<2>;
using GF3 = Zp<3>;

}  // namespace liesdit

#include "liesdit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace liesdit {

namespace {

// Accepts an optional sign followed by at least one decimal digit.
bool valid_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return std::string(s);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text, bool* canonical) {
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    if (!valid_integer(num_text, true)) {
        throw std::invalid_argument("bad rational syntax '" + std::string(text) + "'");
    }
    mpz_class num(strip_plus(num_text), 10);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        const std::string_view den_text = text.substr(slash + 1);
        if (!valid_integer(den_text, true)) {
            throw std::invalid_argument("bad rational syntax '" + std::string(text) + "'");
        }
        den = mpz_class(strip_plus(den_text), 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    Rational r(num, den);
    if (canonical != nullptr) *canonical = (r.to_string() == text);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str(10);
    return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

}  // namespace liesdit

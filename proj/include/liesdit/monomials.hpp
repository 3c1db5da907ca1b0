#pragma once

#include <cstddef>
#include <vector>

namespace liesdit {

using Exponents = std::vector<std::size_t>;

namespace detail {

inline void fill_monomials(std::size_t n, std::size_t deg, Exponents& prefix, std::vector<Exponents>& out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(deg);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t e = deg + 1; e-- > 0;) {
        prefix.push_back(e);
        fill_monomials(n, deg - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// Exponent vectors of total degree `deg` in n variables, graded-lex order
/// (x1^deg first, xn^deg last).
inline std::vector<Exponents> monomials(std::size_t n, std::size_t deg) {
    std::vector<Exponents> out;
    if (n == 0) return out;
    Exponents prefix;
    detail::fill_monomials(n, deg, prefix, out);
    return out;
}

/// C(n + deg - 1, deg), the number of degree-`deg` monomials in n variables.
inline std::size_t monomial_count(std::size_t n, std::size_t deg) {
    if (n == 0) return deg == 0 ? 1 : 0;
    std::size_t c = 1;
    for (std::size_t i = 1; i <= deg; ++i) c = c * (n - 1 + i) / i;
    return c;
}

}  // namespace liesdit

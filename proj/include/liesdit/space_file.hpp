#pragma once

#include "liesdit/lie.hpp"
#include "liesdit/zp.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace liesdit {

/// On-disk matrix space:
///   {"basis": [[[...row...], ...], ...], "field": "Q" | "GF(p)", "format_version": "1",
///    "metadata": {...}, "n": n}
/// Entries are strings "a" or "a/b". GF(p) entries are integers in [0, p).
struct SpaceFile {
    std::uint32_t prime = 0;  // 0 means Q
    std::size_t n = 0;
    std::vector<QMatrix> basis;  // as written, dependent members included
    std::map<std::string, std::string> metadata;

    std::string field_name() const;
};

struct ParseOptions {
    bool lenient = false;  // normalize non-canonical entries and drop unknown keys, with warnings
};

/// Throws Error(parse_error) for bad JSON (with line and column), unknown or
/// missing fields and bad entries (with the field path), Error(not_square) and
/// Error(shape_mismatch) for bad matrix shapes.
SpaceFile parse_space(std::string_view text, const ParseOptions& opts = {},
                      std::vector<std::string>* warnings = nullptr);

/// Sorted keys, two-space indent, one matrix row per line. For every file f
/// this writer produced, write_space(parse_space(f)) == f.
std::string write_space(const SpaceFile& f);

SpaceFile space_file_from(const QSpace& s, std::map<std::string, std::string> metadata = {});

/// Throws Error(invalid_argument) unless the file is over Q. Dependent basis
/// members are dropped with a warning.
QSpace to_rational_space(const SpaceFile& f, std::vector<std::string>* warnings = nullptr);

/// Over Q the entries are reduced mod P; a GF(p) file must have p == P.
template <std::uint32_t P>
MatrixSpace<Zp<P>> to_prime_field_space(const SpaceFile& f, std::vector<std::string>* warnings = nullptr) {
    if (f.prime != 0 && f.prime != P) {
        throw Error(ErrorCode::invalid_argument,
                    "file is over " + f.field_name() + ", requested GF(" + std::to_string(P) + ")");
    }
    std::vector<Matrix<Zp<P>>> mats;
    for (std::size_t k = 0; k < f.basis.size(); ++k) {
        Matrix<Zp<P>> m(f.n, f.n);
        for (std::size_t r = 0; r < f.n; ++r)
            for (std::size_t c = 0; c < f.n; ++c) {
                try {
                    m(r, c) = Zp<P>::from_rational(f.basis[k](r, c));
                } catch (const std::domain_error& e) {
                    throw Error(ErrorCode::invalid_argument, "basis[" + std::to_string(k) + "]: " + e.what());
                }
            }
        mats.push_back(std::move(m));
    }
    MatrixSpace<Zp<P>> s(f.n, mats);
    if (warnings != nullptr) warnings->insert(warnings->end(), s.warnings().begin(), s.warnings().end());
    return s;
}

}  // namespace liesdit

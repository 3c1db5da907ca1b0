#include "liesdit/space_file.hpp"

#include "liesdit/errors.hpp"

#include "json.hpp"

#include <charconv>
#include <sstream>

namespace liesdit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw Error(ErrorCode::parse_error, path + ": " + msg);
}

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t parse_field(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string \"Q\" or \"GF(p)\"");
    const std::string s = j.get<std::string>();
    if (s == "Q") return 0;
    if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
        std::uint32_t p = 0;
        const char* first = s.data() + 3;
        const char* last = s.data() + s.size() - 1;
        const auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec == std::errc() && ptr == last && is_prime(p) && p < (1u << 16)) return p;
    }
    fail(path, "unsupported field '" + s + "' (expected \"Q\" or \"GF(p)\" with p a prime below 65536)");
}

Rational parse_entry(const json& j, const std::string& path, std::uint32_t prime, const ParseOptions& opts,
                     std::vector<std::string>* warnings) {
    if (!j.is_string()) fail(path, "entries must be strings like \"3\" or \"-1/2\"");
    const std::string text = j.get<std::string>();
    bool canonical = false;
    Rational q;
    try {
        q = Rational::parse(text, &canonical);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
    if (prime != 0) {
        if (!q.is_integer()) fail(path, "entry '" + text + "' is not an integer residue");
        mpz_class residue = q.num() % prime;
        if (residue < 0) residue += prime;
        if (residue != q.num()) {
            canonical = false;
            q = Rational(residue, 1);
        }
    }
    if (!canonical) {
        if (!opts.lenient) fail(path, "entry '" + text + "' is not canonical (expected '" + q.to_string() + "')");
        if (warnings != nullptr) warnings->push_back(path + ": normalized '" + text + "' to '" + q.to_string() + "'");
    }
    return q;
}

std::size_t line_of(std::string_view text, std::size_t byte, std::size_t* column) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    *column = col;
    return line;
}

}  // namespace

std::string SpaceFile::field_name() const { return prime == 0 ? "Q" : "GF(" + std::to_string(prime) + ")"; }

SpaceFile parse_space(std::string_view text, const ParseOptions& opts, std::vector<std::string>* warnings) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t col = 0;
        const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1, &col);
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    if (!doc.is_object()) fail("$", "expected a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key == "basis" || key == "field" || key == "format_version" || key == "metadata" || key == "n") continue;
        if (!opts.lenient) fail(key, "unknown field");
        if (warnings != nullptr) warnings->push_back(key + ": unknown field ignored");
    }
    for (const char* key : {"format_version", "field", "n", "basis"})
        if (!doc.contains(key)) fail(key, "missing required field");

    if (doc["format_version"] != json("1")) fail("format_version", "expected \"1\"");

    SpaceFile f;
    f.prime = parse_field(doc["field"], "field");

    const json& n = doc["n"];
    if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0) fail("n", "expected a positive integer");
    f.n = n.get<std::size_t>();

    const json& basis = doc["basis"];
    if (!basis.is_array()) fail("basis", "expected an array of matrices");
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const std::string mpath = index_path("basis", k);
        const json& m = basis[k];
        if (!m.is_array()) fail(mpath, "expected a matrix (array of rows)");
        std::size_t cols = 0;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (!m[r].is_array()) fail(index_path(mpath, r), "expected a row (array of entries)");
            if (r == 0) cols = m[r].size();
            if (m[r].size() != cols) fail(index_path(mpath, r), "rows have different lengths");
        }
        if (m.size() != cols) {
            throw Error(ErrorCode::not_square, mpath + ": matrix is " + std::to_string(m.size()) + "x" +
                                                   std::to_string(cols) + ", not square");
        }
        if (m.size() != f.n) {
            throw Error(ErrorCode::shape_mismatch, mpath + ": matrix is " + std::to_string(m.size()) + "x" +
                                                       std::to_string(m.size()) + " but n = " + std::to_string(f.n));
        }
        QMatrix mat(f.n, f.n);
        for (std::size_t r = 0; r < f.n; ++r)
            for (std::size_t c = 0; c < f.n; ++c)
                mat(r, c) = parse_entry(m[r][c], index_path(index_path(mpath, r), c), f.prime, opts, warnings);
        f.basis.push_back(std::move(mat));
    }

    if (doc.contains("metadata")) {
        const json& meta = doc["metadata"];
        if (!meta.is_object()) fail("metadata", "expected an object of strings");
        for (const auto& [key, value] : meta.items()) {
            if (!value.is_string()) fail("metadata." + key, "expected a string");
            f.metadata[key] = value.get<std::string>();
        }
    }
    return f;
}

std::string write_space(const SpaceFile& f) {
    std::ostringstream os;
    os << "{\n  \"basis\": [";
    for (std::size_t k = 0; k < f.basis.size(); ++k) {
        os << (k == 0 ? "\n" : ",\n") << "    [\n";
        for (std::size_t r = 0; r < f.n; ++r) {
            os << "      [";
            for (std::size_t c = 0; c < f.n; ++c) os << (c == 0 ? "" : ", ") << '"' << f.basis[k](r, c) << '"';
            os << (r + 1 < f.n ? "],\n" : "]\n");
        }
        os << "    ]";
    }
    os << (f.basis.empty() ? "],\n" : "\n  ],\n");
    os << "  \"field\": " << json(f.field_name()).dump() << ",\n";
    os << "  \"format_version\": \"1\",\n";
    if (!f.metadata.empty()) {
        os << "  \"metadata\": {";
        bool first = true;
        for (const auto& [key, value] : f.metadata) {
            os << (first ? "\n" : ",\n") << "    " << json(key).dump() << ": " << json(value).dump();
            first = false;
        }
        os << "\n  },\n";
    }
    os << "  \"n\": " << f.n << "\n}\n";
    return os.str();
}

SpaceFile space_file_from(const QSpace& s, std::map<std::string, std::string> metadata) {
    SpaceFile f;
    f.n = s.n();
    f.basis = s.basis();
    f.metadata = std::move(metadata);
    return f;
}

QSpace to_rational_space(const SpaceFile& f, std::vector<std::string>* warnings) {
    if (f.prime != 0) {
        throw Error(ErrorCode::invalid_argument, "this operation needs a space over Q, file is over " + f.field_name());
    }
    QSpace s(f.n, f.basis);
    if (warnings != nullptr) warnings->insert(warnings->end(), s.warnings().begin(), s.warnings().end());
    return s;
}

}  // namespace liesdit

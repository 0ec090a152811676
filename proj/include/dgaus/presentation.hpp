#ifndef DGAUS_PRESENTATION_HPP
#define DGAUS_PRESENTATION_HPP

// Input presentations for the command-line driver: a small TOML-style format
// with [section] headers and key = value lines, where values are integers,
// quoted strings, or (nested) arrays of either.  Scalars that must stay exact
// (ring structure constants, ideal generator coordinates) travel as strings
// like "-3" or "2/5" and are converted into the working field on demand.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin.hpp"
#include "auslander.hpp"

namespace dgaus {

struct ParseError : std::runtime_error {
    std::size_t line = 0, column = 0;
    ParseError(std::size_t ln, std::size_t col, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ", column " + std::to_string(col) +
                             ": " + what),
          line(ln),
          column(col) {}
};

struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- value model ------------------------------------------------------------

struct PValue {
    enum class Kind { Int, Str, Arr } kind = Kind::Int;
    long long i = 0;
    std::string s;
    std::vector<PValue> arr;
};

namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0, line = 1, col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char take() {
        char c = text[pos++];
        if (c == '\n') ++line, col = 1;
        else ++col;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col, msg); }

    void skip_inline_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) take();
    }
    // whitespace, comments, newlines
    void skip_all_ws() {
        while (!done()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') take();
            else if (c == '#') {
                while (!done() && peek() != '\n') take();
            } else break;
        }
    }
};

inline PValue parse_value(Cursor& c) {
    c.skip_all_ws();
    if (c.done()) c.fail("expected a value");
    PValue v;
    char ch = c.peek();
    if (ch == '"') {
        c.take();
        v.kind = PValue::Kind::Str;
        while (!c.done() && c.peek() != '"') {
            if (c.peek() == '\n') c.fail("newline inside string literal");
            v.s += c.take();
        }
        if (c.done()) c.fail("unterminated string literal");
        c.take();
    } else if (ch == '[') {
        c.take();
        v.kind = PValue::Kind::Arr;
        c.skip_all_ws();
        while (!c.done() && c.peek() != ']') {
            v.arr.push_back(parse_value(c));
            c.skip_all_ws();
            if (!c.done() && c.peek() == ',') {
                c.take();
                c.skip_all_ws();
            }
        }
        if (c.done()) c.fail("unterminated array");
        c.take();
    } else if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num;
        if (ch == '-') num += c.take();
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) num += c.take();
        if (num.empty() || num == "-") c.fail("malformed integer");
        v.kind = PValue::Kind::Int;
        v.i = std::stoll(num);
    } else {
        c.fail(std::string("unexpected character '") + ch + "'");
    }
    return v;
}

}  // namespace detail

// --- presentation data ------------------------------------------------------

struct PresentationFile {
    // [field]
    std::string field_kind = "q";  // "q" | "fp"
    long long field_p = 0;

    // [ring]
    std::string ring_kind = "truncated";  // "truncated" | "table"
    std::size_t nvars = 1;
    std::vector<std::vector<unsigned>> monomial_gens;  // truncated: exponent vectors
    std::vector<std::string> basis;                    // table: basis names
    std::vector<std::vector<std::string>> table;       // table: row-major structure vectors
    std::vector<std::string> unit;                     // table: unit coordinates

    // [ideal]: generator coordinate vectors in the ring basis; empty means
    // "the span of the variables" for truncated rings
    std::vector<std::vector<std::string>> generators;

    // [grid]
    std::size_t width = 1;
    std::string grid_kind = "powers";  // "powers" | "colons" | "exponents"
    std::vector<std::vector<unsigned>> grid_exponents;

    // [tasks]
    std::vector<std::string> tasks;

    bool operator==(const PresentationFile&) const = default;
};

namespace detail {

inline std::string str_of(const PValue& v, const std::string& key) {
    if (v.kind != PValue::Kind::Str) throw SemanticError(key + ": expected a string");
    return v.s;
}
inline long long int_of(const PValue& v, const std::string& key) {
    if (v.kind != PValue::Kind::Int) throw SemanticError(key + ": expected an integer");
    return v.i;
}
inline const std::vector<PValue>& arr_of(const PValue& v, const std::string& key) {
    if (v.kind != PValue::Kind::Arr) throw SemanticError(key + ": expected an array");
    return v.arr;
}
inline std::vector<std::string> str_list(const PValue& v, const std::string& key) {
    std::vector<std::string> out;
    for (auto& e : arr_of(v, key)) out.push_back(str_of(e, key));
    return out;
}
inline std::vector<unsigned> uint_list(const PValue& v, const std::string& key) {
    std::vector<unsigned> out;
    for (auto& e : arr_of(v, key)) {
        long long x = int_of(e, key);
        if (x < 0) throw SemanticError(key + ": expected a non-negative integer");
        out.push_back(static_cast<unsigned>(x));
    }
    return out;
}

}  // namespace detail

inline PresentationFile parse_presentation(const std::string& text) {
    detail::Cursor c{text};
    PresentationFile p;
    bool saw_grid_kind = false;
    std::string section;
    c.skip_all_ws();
    while (!c.done()) {
        if (c.peek() == '[') {
            c.take();
            section.clear();
            while (!c.done() && c.peek() != ']' && c.peek() != '\n') section += c.take();
            if (c.done() || c.peek() != ']') c.fail("unterminated section header");
            c.take();
            if (section != "field" && section != "ring" && section != "ideal" &&
                section != "grid" && section != "tasks")
                c.fail("unknown section [" + section + "]");
        } else {
            std::string key;
            while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) ||
                                 c.peek() == '_'))
                key += c.take();
            if (key.empty()) c.fail("expected a key or section header");
            c.skip_inline_ws();
            if (c.done() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
            c.take();
            auto v = detail::parse_value(c);
            const std::string ctx = section + "." + key;
            using namespace detail;
            if (section == "field" && key == "kind") p.field_kind = str_of(v, ctx);
            else if (section == "field" && key == "p") p.field_p = int_of(v, ctx);
            else if (section == "ring" && key == "kind") p.ring_kind = str_of(v, ctx);
            else if (section == "ring" && key == "nvars")
                p.nvars = static_cast<std::size_t>(int_of(v, ctx));
            else if (section == "ring" && key == "nilpotency")
                p.monomial_gens = {{static_cast<unsigned>(int_of(v, ctx))}}, p.nvars = 1;
            else if (section == "ring" && key == "monomials") {
                p.monomial_gens.clear();
                for (auto& row : arr_of(v, ctx)) p.monomial_gens.push_back(uint_list(row, ctx));
            } else if (section == "ring" && key == "basis") p.basis = str_list(v, ctx);
            else if (section == "ring" && key == "table") {
                p.table.clear();
                for (auto& row : arr_of(v, ctx)) p.table.push_back(str_list(row, ctx));
            } else if (section == "ring" && key == "unit") p.unit = str_list(v, ctx);
            else if (section == "ideal" && key == "generators") {
                p.generators.clear();
                for (auto& row : arr_of(v, ctx)) p.generators.push_back(str_list(row, ctx));
            } else if (section == "grid" && key == "width")
                p.width = static_cast<std::size_t>(int_of(v, ctx));
            else if (section == "grid" && key == "kind")
                p.grid_kind = str_of(v, ctx), saw_grid_kind = true;
            else if (section == "grid" && key == "exponents") {
                p.grid_exponents.clear();
                for (auto& row : arr_of(v, ctx)) p.grid_exponents.push_back(uint_list(row, ctx));
            } else if (section == "tasks" && key == "run") p.tasks = str_list(v, ctx);
            else c.fail("unknown key '" + key + "' in section [" + section + "]");
        }
        c.skip_all_ws();
    }

    // consistency checks that don't need a field yet
    if (p.field_kind != "q" && p.field_kind != "fp")
        throw SemanticError("field.kind must be \"q\" or \"fp\"");
    if (p.field_kind == "fp" && p.field_p < 2)
        throw SemanticError("field.p must be a prime >= 2");
    if (p.ring_kind == "truncated") {
        if (p.monomial_gens.empty())
            throw SemanticError("truncated ring needs nilpotency or monomials");
        for (auto& g : p.monomial_gens)
            if (g.size() != p.nvars)
                throw SemanticError("ring.monomials: exponent vector length " +
                                    std::to_string(g.size()) + " does not match nvars " +
                                    std::to_string(p.nvars));
    } else if (p.ring_kind == "table") {
        std::size_t d = p.basis.size();
        if (d == 0) throw SemanticError("table ring needs a basis");
        if (p.table.size() != d * d)
            throw SemanticError("ring.table: expected " + std::to_string(d * d) +
                                " structure vectors, got " + std::to_string(p.table.size()));
        for (auto& row : p.table)
            if (row.size() != d)
                throw SemanticError("ring.table: structure vector length " +
                                    std::to_string(row.size()) + " does not match basis length " +
                                    std::to_string(d));
        if (p.unit.size() != d)
            throw SemanticError("ring.unit: length does not match basis length");
    } else {
        throw SemanticError("ring.kind must be \"truncated\" or \"table\"");
    }
    if (p.grid_kind != "powers" && p.grid_kind != "colons" && p.grid_kind != "exponents")
        throw SemanticError("grid.kind must be powers, colons or exponents");
    if (p.grid_kind == "exponents") {
        if (p.grid_exponents.size() != p.width)
            throw SemanticError("grid.exponents: expected " + std::to_string(p.width) + " rows");
        for (std::size_t i = 0; i < p.width; ++i)
            if (p.grid_exponents[i].size() != p.width - i)
                throw SemanticError("grid.exponents: row " + std::to_string(i + 1) +
                                    " must have " + std::to_string(p.width - i) + " entries");
    } else if (saw_grid_kind && !p.grid_exponents.empty()) {
        throw SemanticError("grid.exponents given but grid.kind is not \"exponents\"");
    }
    if (p.width == 0) throw SemanticError("grid.width must be positive");
    return p;
}

// --- serialization ----------------------------------------------------------

namespace detail {

inline void emit_str_list(std::ostream& os, const std::vector<std::string>& xs) {
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", \"" : "\"") << xs[i] << "\"";
    os << "]";
}

inline void emit_uint_list(std::ostream& os, const std::vector<unsigned>& xs) {
    os << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
    os << "]";
}

}  // namespace detail

inline std::string emit_presentation(const PresentationFile& p) {
    std::ostringstream os;
    os << "[field]\nkind = \"" << p.field_kind << "\"\n";
    if (p.field_kind == "fp") os << "p = " << p.field_p << "\n";
    os << "\n[ring]\nkind = \"" << p.ring_kind << "\"\n";
    if (p.ring_kind == "truncated") {
        os << "nvars = " << p.nvars << "\nmonomials = [";
        for (std::size_t i = 0; i < p.monomial_gens.size(); ++i) {
            if (i) os << ", ";
            detail::emit_uint_list(os, p.monomial_gens[i]);
        }
        os << "]\n";
    } else {
        os << "basis = ";
        detail::emit_str_list(os, p.basis);
        os << "\ntable = [";
        for (std::size_t i = 0; i < p.table.size(); ++i) {
            if (i) os << ", ";
            detail::emit_str_list(os, p.table[i]);
        }
        os << "]\nunit = ";
        detail::emit_str_list(os, p.unit);
        os << "\n";
    }
    os << "\n[ideal]\ngenerators = [";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) os << ", ";
        detail::emit_str_list(os, p.generators[i]);
    }
    os << "]\n";
    os << "\n[grid]\nwidth = " << p.width << "\nkind = \"" << p.grid_kind << "\"\n";
    if (p.grid_kind == "exponents") {
        os << "exponents = [";
        for (std::size_t i = 0; i < p.grid_exponents.size(); ++i) {
            if (i) os << ", ";
            detail::emit_uint_list(os, p.grid_exponents[i]);
        }
        os << "]\n";
    }
    os << "\n[tasks]\nrun = ";
    detail::emit_str_list(os, p.tasks);
    os << "\n";
    return os.str();
}

// --- scalar conversion and instantiation ------------------------------------

// Exact scalar from a decimal string, optionally "a/b".
template <class K>
K scalar_from_string(const FieldSpec& fs, const std::string& s) {
    auto parse_int = [&](const std::string& t) -> K {
        std::size_t i = 0;
        bool neg = false;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) neg = t[i++] == '-';
        if (i == t.size()) throw SemanticError("malformed scalar '" + s + "'");
        K acc{};
        K ten = ScalarOps<K>::from_int(fs, 10);
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw SemanticError("malformed scalar '" + s + "'");
            acc = acc * ten + ScalarOps<K>::from_int(fs, t[i] - '0');
        }
        return neg ? K{} - acc : acc;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return parse_int(s);
    K num = parse_int(s.substr(0, slash));
    K den = parse_int(s.substr(slash + 1));
    if (den == K{}) throw SemanticError("zero denominator in scalar '" + s + "'");
    return num / den;
}

// The fully built input: ring, nilpotent ideal, grid and block algebra.
template <class K>
struct Instance {
    ArtinRing<K> ring;
    Ideal<K> rad;
    IdealGrid<K> grid;
    std::size_t n = 0;
    AuslanderAlgebra<K> alg;
};

template <class K>
FieldSpec field_of(const PresentationFile& p) {
    return p.field_kind == "q" ? FieldSpec::rationals()
                               : FieldSpec::prime(static_cast<std::int64_t>(p.field_p));
}

template <class K>
ArtinRing<K> build_ring(const PresentationFile& p, const FieldSpec& fs) {
    if (p.ring_kind == "truncated")
        return truncated_polynomial_ring<K>(fs, p.nvars, p.monomial_gens);
    std::size_t d = p.basis.size();
    std::vector<std::vector<std::vector<K>>> table(d,
                                                   std::vector<std::vector<K>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (auto& entry : p.table[i * d + j])
                table[i][j].push_back(scalar_from_string<K>(fs, entry));
    std::vector<K> unit;
    for (auto& entry : p.unit) unit.push_back(scalar_from_string<K>(fs, entry));
    return artin_from_table<K>(fs, p.basis, table, unit);
}

template <class K>
Ideal<K> build_ideal(const PresentationFile& p, const ArtinRing<K>& r) {
    std::vector<std::vector<K>> cols;
    if (p.generators.empty()) {
        if (p.ring_kind != "truncated")
            throw SemanticError("table rings need explicit ideal generators");
        // default: the span of the variables x_0..x_{nvars-1}
        for (std::size_t v = 0; v < p.nvars; ++v) {
            std::string name = "x" + std::to_string(v);
            std::vector<K> col(r.dim());
            bool found = false;
            for (std::size_t i = 0; i < r.dim(); ++i)
                if (r.basis_names[i] == name) {
                    col[i] = free_one<K>();
                    found = true;
                }
            if (!found) throw SemanticError("variable " + name + " missing from the ring basis");
            cols.push_back(std::move(col));
        }
    } else {
        for (auto& gen : p.generators) {
            if (gen.size() != r.dim())
                throw SemanticError("ideal generator length " + std::to_string(gen.size()) +
                                    " does not match ring dimension " + std::to_string(r.dim()));
            std::vector<K> col;
            for (auto& entry : gen) col.push_back(scalar_from_string<K>(r.field, entry));
            cols.push_back(std::move(col));
        }
    }
    return ideal_from_generators(r, Matrix<K>::from_columns(cols, r.dim()));
}

template <class K>
IdealGrid<K> build_grid(const PresentationFile& p, const ArtinRing<K>& r, const Ideal<K>& rad) {
    if (p.grid_kind == "powers") return grid_from_powers(r, rad, p.width);
    if (p.grid_kind == "colons") return grid_from_colons(r, rad, p.width);
    IdealGrid<K> g;
    g.n = p.width;
    g.whole = ideal_whole(r);
    for (std::size_t i = 1; i <= p.width; ++i) {
        g.entries.emplace_back();
        for (std::size_t j = i + 1; j <= p.width + 1; ++j)
            g.entries.back().push_back(ideal_power(r, rad, p.grid_exponents[i - 1][j - i - 1]));
    }
    return g;
}

template <class K>
Instance<K> build_instance(const PresentationFile& p, const FieldSpec& fs) {
    Instance<K> inst;
    inst.ring = build_ring<K>(p, fs);
    inst.rad = build_ideal(p, inst.ring);
    inst.grid = build_grid(p, inst.ring, inst.rad);
    inst.n = p.width;
    auto grep = validate_grid(inst.ring, inst.grid);
    if (!grep.ok()) throw SemanticError("the ideal grid fails validation");
    inst.alg = build_generalized(inst.ring, inst.grid, inst.rad);
    return inst;
}

}  // namespace dgaus

#endif

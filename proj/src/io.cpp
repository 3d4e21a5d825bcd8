#include "leibniz/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace leibniz {

FieldDescriptor field_of(const AnyAlgebra& L) {
    return std::visit([](const auto& a) { return FieldDescriptor(a.field()); }, L);
}

std::size_t dim_of(const AnyAlgebra& L) {
    return std::visit([](const auto& a) { return a.dim(); }, L);
}

template <ExactField F>
json algebra_to_json(const Algebra<F>& L) {
    json table = json::array();
    for (std::size_t i = 0; i < L.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < L.dim(); ++j) {
            json entry = json::array();
            for (const auto& c : L.product(i, j)) entry.push_back(L.field().to_json(c));
            row.push_back(std::move(entry));
        }
        table.push_back(std::move(row));
    }
    return json{{"format_version", kFormatVersion},
                {"field", field_to_json(FieldDescriptor(L.field()))},
                {"dim", L.dim()},
                {"basis_names", L.names()},
                {"table", std::move(table)}};
}

json algebra_to_json(const AnyAlgebra& L) {
    return std::visit([](const auto& a) { return algebra_to_json(a); }, L);
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

template <ExactField F>
Algebra<F> build_from(const F& f, const json& doc, std::size_t n, std::vector<std::string> names, Checked checked) {
    const json& table = doc["table"];
    if (!table.is_array() || table.size() != n) fail("table", "expected " + std::to_string(n) + " rows");
    std::vector<Vector<F>> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = table[i];
        const std::string where_row = "table[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != n) fail(where_row, "expected " + std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j) {
            const json& cell = row[j];
            const std::string where = where_row + "[" + std::to_string(j) + "]";
            if (!cell.is_array() || cell.size() != n) fail(where, "expected " + std::to_string(n) + " coordinates");
            Vector<F> v;
            for (std::size_t k = 0; k < n; ++k) {
                try {
                    v.push_back(f.from_json(cell[k]));
                } catch (const Error& e) {
                    throw Error(ErrorKind::FieldParseError, where + "[" + std::to_string(k) + "]: " + e.message());
                }
            }
            entries.push_back(std::move(v));
        }
    }
    return Algebra<F>::create(f, n, std::move(names), std::move(entries), checked);
}

} // namespace

AnyAlgebra algebra_from_json(const json& doc, Checked checked) {
    if (!doc.is_object()) fail("document", "expected an object");
    for (const char* key : {"format_version", "field", "dim", "table"})
        if (!doc.contains(key)) fail("document", std::string("missing key '") + key + "'");
    if (!doc["format_version"].is_number_integer() || doc["format_version"].get<int>() != kFormatVersion)
        fail("format_version", "unsupported version " + doc["format_version"].dump());
    if (!doc["dim"].is_number_unsigned()) fail("dim", "expected a non-negative integer");
    const std::size_t n = doc["dim"].get<std::size_t>();
    std::vector<std::string> names;
    if (doc.contains("basis_names")) {
        const json& bn = doc["basis_names"];
        if (!bn.is_array() || bn.size() != n) fail("basis_names", "expected " + std::to_string(n) + " strings");
        for (const auto& s : bn) {
            if (!s.is_string()) fail("basis_names", "expected strings");
            names.push_back(s.get<std::string>());
        }
    }
    const FieldDescriptor field = field_from_json(doc["field"]);
    return std::visit([&](const auto& f) -> AnyAlgebra { return build_from(f, doc, n, names, checked); }, field);
}

AnyAlgebra parse_algebra(std::string_view text, Checked checked) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return algebra_from_json(doc, checked);
}

std::string serialize_algebra(const AnyAlgebra& L) { return algebra_to_json(L).dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Usage, "cannot write '" + path + "'");
    out << content;
}

AnyAlgebra read_algebra_file(const std::string& path, Checked checked) {
    return parse_algebra(read_text_file(path), checked);
}

namespace {

template <ExactField T, ExactField S>
Algebra<T> convert(const Algebra<S>& L, const T& target, typename T::value_type (*map)(const T&, const S&,
                                                                                      const typename S::value_type&)) {
    std::vector<Vector<T>> table;
    for (const auto& v : L.table()) {
        Vector<T> w;
        for (const auto& c : v) w.push_back(map(target, L.field(), c));
        table.push_back(std::move(w));
    }
    return Algebra<T>::create(target, L.dim(), L.names(), std::move(table), Checked::no);
}

GaloisField::value_type rational_into(const GaloisField& t, const Rationals&, const mpq_class& q) {
    return t.from_rational(q);
}

GaloisField::value_type prime_into(const GaloisField& t, const GaloisField& s, const std::uint32_t& c) {
    auto coeffs = s.coefficients(c);
    return t.from_coefficients(coeffs);
}

} // namespace

AnyAlgebra change_field(const AnyAlgebra& L, const FieldDescriptor& target) {
    if (same_field(field_of(L), target)) return L;
    if (!std::holds_alternative<GaloisField>(target))
        throw Error(ErrorKind::Usage, "cannot move structure constants from " + field_name(field_of(L)) + " to Q");
    const GaloisField& t = std::get<GaloisField>(target);
    if (const auto* q = std::get_if<Algebra<Rationals>>(&L)) return convert<GaloisField, Rationals>(*q, t, rational_into);
    const auto& g = std::get<Algebra<GaloisField>>(L);
    if (g.field().k() != 1 || g.field().p() != t.p())
        throw Error(ErrorKind::Usage, "cannot move structure constants from " + g.field().name() + " to " + t.name());
    return convert<GaloisField, GaloisField>(g, t, prime_into);
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

template json algebra_to_json(const Algebra<Rationals>&);
template json algebra_to_json(const Algebra<GaloisField>&);

} // namespace leibniz

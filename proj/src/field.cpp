#include "leibniz/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace leibniz {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::UnsupportedFactorization: return "UnsupportedFactorization";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotLeibniz: return "NotLeibniz";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::InfiniteFieldUnsupported: return "InfiniteFieldUnsupported";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::CartanSearchFailed: return "CartanSearchFailed";
    case ErrorKind::NotDecomposing: return "NotDecomposing";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FieldParseError: return "FieldParseError";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotLeibniz:
    case ErrorKind::NotAnIdeal:
    case ErrorKind::NotSolvable:
    case ErrorKind::NotDecomposing:
    case ErrorKind::DecompositionFailed:
        return 1;
    case ErrorKind::InfiniteFieldUnsupported:
    case ErrorKind::UnsupportedFactorization:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::CartanSearchFailed:
        return 2;
    default:
        return 3;
    }
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors (low to high), used only while
// constructing extension fields.
using SmallPoly = std::vector<std::uint32_t>;

void normalize(SmallPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return std::uint32_t(result);
}

SmallPoly poly_mod(SmallPoly a, const SmallPoly& m, std::uint32_t p) {
    normalize(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = c * m[i] % p;
            a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
        }
        normalize(a);
    }
    return a;
}

bool is_irreducible_small(const SmallPoly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // all monic polynomials of degree d
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            SmallPoly g(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = std::uint32_t(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------- Rationals

Rationals::value_type Rationals::inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in Q");
    return value_type(1) / a;
}

Rationals::value_type Rationals::parse(std::string_view text) const {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den))
        throw Error(ErrorKind::FieldParseError, "not a rational literal: '" + std::string(text) + "'");
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den), 10);
    if (d == 0) throw Error(ErrorKind::FieldParseError, "zero denominator in '" + std::string(text) + "'");
    value_type q(n, d);
    q.canonicalize();
    return q;
}

Rationals::value_type Rationals::from_json(const json& j) const {
    if (j.is_number_integer()) return value_type(j.get<long>());
    if (j.is_string()) return parse(j.get<std::string>());
    throw Error(ErrorKind::FieldParseError, "rational scalar must be a string or integer, got " + j.dump());
}

// ---------------------------------------------------------------- GaloisField

GaloisField::GaloisField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p) || p > (1u << 31))
        throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not a supported prime");
    if (k == 0) throw Error(ErrorKind::InvalidField, "extension degree must be at least 1");
    if (k == 1) {
        q_ = p;
        modulus_ = {0, 1};
        return;
    }
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    if (count > kMaxExtensionOrder)
        throw Error(ErrorKind::InvalidField, "extension field order exceeds " + std::to_string(kMaxExtensionOrder));
    for (std::uint64_t code = 0; code < count; ++code) {
        SmallPoly f(k + 1);
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = std::uint32_t(c % p);
            c /= p;
        }
        f[k] = 1;
        if (is_irreducible_small(f, p)) {
            modulus_ = f;
            break;
        }
    }
    q_ = std::uint32_t(count);
    build_tables();
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p) || p > (1u << 31))
        throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not a supported prime");
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw Error(ErrorKind::InvalidField, "modulus must be monic of degree at least 1");
    for (auto c : modulus_)
        if (c >= p) throw Error(ErrorKind::InvalidField, "modulus coefficient out of range");
    k_ = unsigned(modulus_.size() - 1);
    if (!is_irreducible_small(modulus_, p)) throw Error(ErrorKind::InvalidField, "modulus is reducible");
    if (k_ == 1) modulus_ = {0, 1};
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k_; ++i) count *= p;
    if (k_ > 1 && count > kMaxExtensionOrder)
        throw Error(ErrorKind::InvalidField, "extension field order exceeds " + std::to_string(kMaxExtensionOrder));
    q_ = std::uint32_t(count);
    if (k_ > 1) build_tables();
}

void GaloisField::build_tables() {
    auto t = std::make_shared<Tables>();
    const std::size_t q = q_;
    t->add.resize(q * q);
    t->mul.resize(q * q);
    t->neg.resize(q);
    t->inv.resize(q, 0);
    std::vector<SmallPoly> polys(q);
    for (std::size_t a = 0; a < q; ++a) polys[a] = coefficients(value_type(a));
    auto encode = [&](const SmallPoly& c) {
        std::uint64_t code = 0, scale = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            code += c[i] * scale;
            scale *= p_;
        }
        return std::uint16_t(code);
    };
    for (std::size_t a = 0; a < q; ++a) {
        SmallPoly n(k_);
        for (unsigned i = 0; i < k_; ++i) n[i] = polys[a][i] == 0 ? 0 : p_ - polys[a][i];
        t->neg[a] = encode(n);
        for (std::size_t b = 0; b < q; ++b) {
            SmallPoly s(k_);
            for (unsigned i = 0; i < k_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
            t->add[a * q + b] = encode(s);
            SmallPoly prod(2 * k_ - 1, 0);
            for (unsigned i = 0; i < k_; ++i)
                for (unsigned j = 0; j < k_; ++j)
                    prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(polys[a][i]) * polys[b][j]) % p_);
            SmallPoly r = poly_mod(prod, modulus_, p_);
            r.resize(k_, 0);
            const std::uint16_t code = encode(r);
            t->mul[a * q + b] = code;
            if (code == 1) t->inv[a] = std::uint16_t(b);
        }
    }
    tables_ = std::move(t);
}

GaloisField::value_type GaloisField::from_int(long v) const {
    long r = v % long(p_);
    if (r < 0) r += p_;
    return value_type(r);
}

GaloisField::value_type GaloisField::from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0) num += p_;
    if (den == 0)
        throw Error(ErrorKind::FieldParseError, "denominator of " + q.get_str() + " vanishes in " + name());
    const std::uint32_t n = std::uint32_t(num.get_ui()), d = std::uint32_t(den.get_ui());
    return value_type(std::uint64_t(n) * inv_mod(d, p_) % p_);
}

GaloisField::value_type GaloisField::inv(value_type a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0 in " + name());
    if (k_ == 1) return inv_mod(a, p_);
    return tables_->inv[a];
}

std::string GaloisField::name() const { return "GF(" + std::to_string(q_) + ")"; }
std::string GaloisField::tag() const { return "gf" + std::to_string(q_); }

std::vector<std::uint32_t> GaloisField::coefficients(value_type a) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

GaloisField::value_type GaloisField::from_coefficients(const std::vector<std::uint32_t>& c) const {
    if (c.size() != k_)
        throw Error(ErrorKind::FieldParseError, "expected " + std::to_string(k_) + " coefficients for " + name());
    std::uint64_t code = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        if (c[i] >= p_) throw Error(ErrorKind::FieldParseError, "coefficient " + std::to_string(c[i]) + " not in [0,p)");
        code += c[i] * scale;
        scale *= p_;
    }
    return value_type(code);
}

GaloisField::value_type GaloisField::parse(std::string_view text) const {
    const std::string_view s = trim(text);
    if (s.find(':') == std::string_view::npos) {
        if (!valid_integer_literal(s))
            throw Error(ErrorKind::FieldParseError, "not an element of " + name() + ": '" + std::string(text) + "'");
        const mpz_class v(std::string(s[0] == '+' ? s.substr(1) : s), 10);
        mpz_class r = v % p_;
        if (r < 0) r += p_;
        return value_type(r.get_ui());
    }
    std::vector<std::uint32_t> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto colon = s.find(':', start);
        const std::string_view part = trim(s.substr(start, colon == std::string_view::npos ? s.npos : colon - start));
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw Error(ErrorKind::FieldParseError, "bad coefficient '" + std::string(part) + "'");
        coeffs.push_back(std::uint32_t(v));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    return from_coefficients(coeffs);
}

std::string GaloisField::to_string(value_type a) const {
    if (k_ == 1) return std::to_string(a);
    const auto c = coefficients(a);
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ':';
        out += std::to_string(c[i]);
    }
    return out;
}

json GaloisField::to_json(value_type a) const { return coefficients(a); }

GaloisField::value_type GaloisField::from_json(const json& j) const {
    if (j.is_array()) {
        std::vector<std::uint32_t> c;
        for (const auto& e : j) {
            if (!e.is_number_integer() || e.get<long long>() < 0)
                throw Error(ErrorKind::FieldParseError, "coefficient must be a non-negative integer: " + e.dump());
            c.push_back(std::uint32_t(e.get<long long>()));
        }
        return from_coefficients(c);
    }
    if (k_ == 1 && j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v < 0 || v >= p_) throw Error(ErrorKind::FieldParseError, "element out of range: " + j.dump());
        return value_type(v);
    }
    throw Error(ErrorKind::FieldParseError, "expected a coefficient array for " + name() + ", got " + j.dump());
}

// ---------------------------------------------------------------- descriptors

std::string field_name(const FieldDescriptor& f) {
    return std::visit([](const auto& x) { return x.name(); }, f);
}

std::string field_tag(const FieldDescriptor& f) {
    return std::visit([](const auto& x) { return x.tag(); }, f);
}

FieldDescriptor parse_field(std::string_view text) {
    std::string s;
    for (char c : trim(text))
        if (c != '(' && c != ')' && c != ' ') s += char(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q" || s == "rationals" || s == "qq") return Rationals{};
    if (s.rfind("gf", 0) == 0) {
        std::uint64_t q = 0;
        const std::string digits = s.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || q < 2)
            throw Error(ErrorKind::InvalidField, "bad field '" + std::string(text) + "'");
        for (std::uint64_t p = 2; p <= q; ++p) {
            if (q % p != 0) continue;
            if (!is_prime(p)) break;
            unsigned k = 0;
            std::uint64_t r = q;
            while (r % p == 0) {
                r /= p;
                ++k;
            }
            if (r != 1) break;
            return GaloisField(std::uint32_t(p), k);
        }
        throw Error(ErrorKind::InvalidField, "field order " + digits + " is not a prime power");
    }
    throw Error(ErrorKind::InvalidField, "unknown field '" + std::string(text) + "'");
}

json field_to_json(const FieldDescriptor& f) {
    if (std::holds_alternative<Rationals>(f)) return json{{"kind", "rationals"}};
    const auto& g = std::get<GaloisField>(f);
    if (g.k() == 1) return json{{"kind", "prime"}, {"p", g.p()}};
    return json{{"kind", "extension"}, {"p", g.p()}, {"k", g.k()}, {"modulus", g.modulus()}};
}

FieldDescriptor field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw Error(ErrorKind::ParseError, "field record needs a 'kind' string");
    const std::string kind = j["kind"];
    auto get_p = [&]() {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw Error(ErrorKind::ParseError, "field record needs an unsigned 'p'");
        return j["p"].get<std::uint32_t>();
    };
    if (kind == "rationals") return Rationals{};
    if (kind == "prime") return GaloisField(get_p(), 1u);
    if (kind == "extension") {
        const std::uint32_t p = get_p();
        if (!j.contains("modulus") || !j["modulus"].is_array())
            throw Error(ErrorKind::ParseError, "extension field needs a 'modulus' array");
        std::vector<std::uint32_t> m;
        for (const auto& c : j["modulus"]) {
            if (!c.is_number_unsigned()) throw Error(ErrorKind::ParseError, "modulus entries must be unsigned");
            m.push_back(c.get<std::uint32_t>());
        }
        GaloisField g(p, m);
        if (j.contains("k") && (!j["k"].is_number_unsigned() || j["k"].get<unsigned>() != g.k()))
            throw Error(ErrorKind::ParseError, "'k' disagrees with the modulus degree");
        return g;
    }
    throw Error(ErrorKind::ParseError, "unknown field kind '" + kind + "'");
}

bool same_field(const FieldDescriptor& a, const FieldDescriptor& b) { return a == b; }

// ---------------------------------------------------------------- Element

Element::Element(FieldDescriptor field, std::variant<mpq_class, std::uint32_t> value)
    : field_(std::move(field)), value_(std::move(value)) {
    if (std::holds_alternative<Rationals>(field_) != std::holds_alternative<mpq_class>(value_))
        throw Error(ErrorKind::FieldMismatch, "value representation does not match the field");
    if (auto* g = std::get_if<GaloisField>(&field_)) {
        if (std::get<std::uint32_t>(value_) >= g->order())
            throw Error(ErrorKind::FieldParseError, "element code out of range for " + g->name());
    }
}

Element Element::parse(const FieldDescriptor& field, std::string_view text) {
    return std::visit(
        [&](const auto& f) { return Element(field, f.parse(text)); }, field);
}

Element Element::from_json(const FieldDescriptor& field, const json& j) {
    return std::visit([&](const auto& f) { return Element(field, f.from_json(j)); }, field);
}

bool Element::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint32_t>(value_) == 0;
}

std::string Element::to_string() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::get<GaloisField>(field_).to_string(std::get<std::uint32_t>(value_));
}

json Element::to_json() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::get<GaloisField>(field_).to_json(std::get<std::uint32_t>(value_));
}

namespace {

template <class F>
typename F::value_type apply(const F& f, ArithOp op, const typename F::value_type& a, const typename F::value_type& b) {
    switch (op) {
    case ArithOp::add: return f.add(a, b);
    case ArithOp::sub: return f.sub(a, b);
    case ArithOp::mul: return f.mul(a, b);
    case ArithOp::div: return f.div(a, b);
    case ArithOp::neg: return f.neg(a);
    case ArithOp::inv: return f.inv(a);
    }
    throw Error(ErrorKind::Usage, "unknown arithmetic operation");
}

} // namespace

Element arith(ArithOp op, const Element& a, const Element& b) {
    if (!same_field(a.field(), b.field()))
        throw Error(ErrorKind::FieldMismatch, field_name(a.field()) + " vs " + field_name(b.field()));
    if (auto* q = std::get_if<Rationals>(&a.field()))
        return Element(a.field(), apply(*q, op, std::get<mpq_class>(a.value()), std::get<mpq_class>(b.value())));
    const auto& g = std::get<GaloisField>(a.field());
    return Element(a.field(), apply(g, op, std::get<std::uint32_t>(a.value()), std::get<std::uint32_t>(b.value())));
}

Element arith(ArithOp op, const Element& a) {
    if (op != ArithOp::neg && op != ArithOp::inv)
        throw Error(ErrorKind::Usage, "binary operation needs two operands");
    return arith(op, a, a);
}

bool equals(const Element& a, const Element& b) {
    if (!same_field(a.field(), b.field()))
        throw Error(ErrorKind::FieldMismatch, field_name(a.field()) + " vs " + field_name(b.field()));
    return a.value() == b.value();
}

} // namespace leibniz

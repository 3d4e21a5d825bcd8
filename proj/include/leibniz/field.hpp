#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "leibniz/error.hpp"

namespace leibniz {

using json = nlohmann::json;

/// The field of rational numbers with arbitrary precision (GMP) scalars.
class Rationals {
public:
    using value_type = mpq_class;

    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_int(long v) const { return value_type(v); }
    value_type from_rational(const mpq_class& q) const { return q; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const;
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool eq(const value_type& a, const value_type& b) const { return a == b; }

    bool is_finite() const { return false; }
    std::uint64_t order() const { return 0; }
    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "Q"; }
    std::string tag() const { return "q"; }

    /// Accepts "a/b", "a" and surrounding whitespace; rejects zero denominators.
    value_type parse(std::string_view text) const;
    std::string to_string(const value_type& a) const { return a.get_str(); }
    json to_json(const value_type& a) const { return a.get_str(); }
    value_type from_json(const json& j) const;

    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// GF(p^k) with elements encoded as integers c_0 + c_1 p + ... + c_{k-1} p^{k-1},
/// where c_i are the coefficients of the residue class modulo the defining polynomial.
class GaloisField {
public:
    using value_type = std::uint32_t;

    /// Prime field (k = 1) or the extension defined by the first monic irreducible
    /// polynomial of degree k in coefficient order.
    explicit GaloisField(std::uint32_t p, unsigned k = 1);
    /// Extension field with an explicit monic modulus (coefficients low to high, length k + 1).
    GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const;
    value_type from_rational(const mpq_class& q) const;

    value_type add(value_type a, value_type b) const {
        if (k_ == 1) {
            std::uint64_t s = std::uint64_t(a) + b;
            return value_type(s >= p_ ? s - p_ : s);
        }
        return tables_->add[std::size_t(a) * q_ + b];
    }
    value_type neg(value_type a) const {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        return tables_->neg[a];
    }
    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const {
        if (k_ == 1) return value_type(std::uint64_t(a) * b % p_);
        return tables_->mul[std::size_t(a) * q_ + b];
    }
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
    bool is_zero(value_type a) const { return a == 0; }
    bool eq(value_type a, value_type b) const { return a == b; }

    bool is_finite() const { return true; }
    std::uint64_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;
    std::string tag() const;

    /// Coefficients (length k, low to high) of an element.
    std::vector<std::uint32_t> coefficients(value_type a) const;
    value_type from_coefficients(const std::vector<std::uint32_t>& c) const;

    /// Accepts an integer (reduced mod p, embedded in the prime field) or "c0:c1:...".
    value_type parse(std::string_view text) const;
    std::string to_string(value_type a) const;
    json to_json(value_type a) const;
    value_type from_json(const json& j) const;

    friend bool operator==(const GaloisField& a, const GaloisField& b) {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

    /// Largest supported p^k for k > 1 (arithmetic tables are precomputed).
    static constexpr std::uint32_t kMaxExtensionOrder = 1024;

private:
    struct Tables {
        std::vector<std::uint16_t> add, mul;
        std::vector<std::uint16_t> neg, inv;
    };
    void build_tables();

    std::uint32_t p_ = 2;
    unsigned k_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& a, std::string_view s) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.is_finite() } -> std::convertible_to<bool>;
    { f.parse(s) } -> std::same_as<typename F::value_type>;
    { f.to_json(a) } -> std::same_as<json>;
};

static_assert(ExactField<Rationals>);
static_assert(ExactField<GaloisField>);

bool is_prime(std::uint64_t n);

/// Runtime field choice; the library is instantiated for exactly these two field types.
using FieldDescriptor = std::variant<Rationals, GaloisField>;

std::string field_name(const FieldDescriptor& f);
std::string field_tag(const FieldDescriptor& f);
/// "q", "Q", "rationals", "gf5", "gf(9)", "GF(4)".
FieldDescriptor parse_field(std::string_view text);
json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const json& j);
bool same_field(const FieldDescriptor& a, const FieldDescriptor& b);

enum class ArithOp { add, sub, mul, div, neg, inv };

/// A field element that carries its field; mixing elements of different fields is an error.
class Element {
public:
    Element(FieldDescriptor field, std::variant<mpq_class, std::uint32_t> value);

    static Element parse(const FieldDescriptor& field, std::string_view text);
    static Element from_json(const FieldDescriptor& field, const json& j);

    const FieldDescriptor& field() const { return field_; }
    const std::variant<mpq_class, std::uint32_t>& value() const { return value_; }
    bool is_zero() const;
    std::string to_string() const;
    json to_json() const;

private:
    FieldDescriptor field_;
    std::variant<mpq_class, std::uint32_t> value_;
};

Element arith(ArithOp op, const Element& a, const Element& b);
Element arith(ArithOp op, const Element& a);
/// Equality across fields is a FieldMismatch, not false.
bool equals(const Element& a, const Element& b);

} // namespace leibniz

#pragma once

#include <string>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

/// Univariate polynomial, coefficients stored low to high without trailing zeros.
template <ExactField F>
class Poly {
public:
    using value_type = typename F::value_type;

    explicit Poly(F field) : field_(std::move(field)) {}
    Poly(F field, std::vector<value_type> coeffs);

    static Poly x(const F& field) { return Poly(field, {field.zero(), field.one()}); }
    static Poly constant(const F& field, const value_type& c) { return Poly(field, {c}); }

    const F& field() const { return field_; }
    const std::vector<value_type>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && field_.eq(coeffs_.back(), field_.one()); }
    value_type leading() const { return is_zero() ? field_.zero() : coeffs_.back(); }
    value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
    value_type evaluate(const value_type& t) const;

    std::string to_string(const std::string& var = "x") const;
    json to_json() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    F field_;
    std::vector<value_type> coeffs_;
};

template <ExactField F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b);
template <ExactField F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b);
template <ExactField F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b);

template <ExactField F>
Poly<F> scale(const Poly<F>& a, const typename F::value_type& c);
/// Divides by the leading coefficient; the zero polynomial stays zero.
template <ExactField F>
Poly<F> monic(const Poly<F>& a);

template <ExactField F>
struct DivMod {
    Poly<F> quotient;
    Poly<F> remainder;
};

/// Throws DivisionByZero for a zero divisor.
template <ExactField F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b);

template <ExactField F>
bool divides(const Poly<F>& d, const Poly<F>& a) {
    return divmod(a, d).remainder.is_zero();
}

/// Monic gcd; gcd(0, 0) = 0. Throws FieldMismatch for polynomials over different fields.
template <ExactField F>
Poly<F> poly_gcd(const Poly<F>& f, const Poly<F>& g);

template <ExactField F>
struct Factor {
    Poly<F> poly;
    unsigned multiplicity;
};

template <ExactField F>
struct Factorization {
    F field;
    typename F::value_type unit;
    std::vector<Factor<F>> factors;
};

/// Factorization into monic irreducibles with multiplicities.
///  - finite fields: trial division by monic polynomials of increasing degree, factors
///    listed in the order found;
///  - rationals: rational roots at any degree, then the remaining factor must have degree
///    at most 4 (a quartic is split into quadratics when possible);
///    factors sorted by degree and coefficients.
/// Throws ZeroPolynomial or UnsupportedFactorization.
template <ExactField F>
Factorization<F> poly_factor(const Poly<F>& f);

template <ExactField F>
Poly<F> expand(const Factorization<F>& fac);

template <ExactField F>
std::string to_string(const Factorization<F>& fac, const std::string& var = "x");

template <ExactField F>
bool is_irreducible(const Poly<F>& f) {
    if (f.degree() < 1) return false;
    const auto fac = poly_factor(f);
    return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

} // namespace leibniz

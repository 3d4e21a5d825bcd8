#include "leibniz/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <type_traits>

namespace leibniz {

template <ExactField F>
Poly<F>::Poly(F field, std::vector<value_type> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

template <ExactField F>
typename Poly<F>::value_type Poly<F>::evaluate(const value_type& t) const {
    value_type acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, t), *it);
    return acc;
}

template <ExactField F>
std::string Poly<F>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        value_type c = coeffs_[std::size_t(i)];
        if (field_.is_zero(c)) continue;
        bool negative = false;
        if constexpr (std::is_same_v<F, Rationals>) {
            if (sgn(c) < 0) {
                negative = true;
                c = -c;
            }
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string cs = field_.to_string(c);
        if (cs.find(':') != std::string::npos) cs = "(" + cs + ")";
        const bool unit = field_.eq(c, field_.one());
        if (i == 0) {
            out += cs;
            continue;
        }
        if (!unit) out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <ExactField F>
json Poly<F>::to_json() const {
    json arr = json::array();
    for (const auto& c : coeffs_) arr.push_back(field_.to_json(c));
    return arr;
}

namespace {

template <ExactField F>
void require_same_field(const Poly<F>& a, const Poly<F>& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
}

} // namespace

template <ExactField F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
    require_same_field(a, b);
    const F& f = a.field();
    std::vector<typename F::value_type> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly<F>(f, std::move(c));
}

template <ExactField F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
    require_same_field(a, b);
    const F& f = a.field();
    std::vector<typename F::value_type> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly<F>(f, std::move(c));
}

template <ExactField F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
    require_same_field(a, b);
    const F& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly<F>(f);
    std::vector<typename F::value_type> c(a.coeffs().size() + b.coeffs().size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (f.is_zero(a.coeffs()[i])) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Poly<F>(f, std::move(c));
}

template <ExactField F>
Poly<F> scale(const Poly<F>& a, const typename F::value_type& s) {
    std::vector<typename F::value_type> c = a.coeffs();
    for (auto& x : c) x = a.field().mul(x, s);
    return Poly<F>(a.field(), std::move(c));
}

template <ExactField F>
Poly<F> monic(const Poly<F>& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, a.field().inv(a.leading()));
}

template <ExactField F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const F& f = a.field();
    if (a.degree() < b.degree()) return {Poly<F>(f), a};
    std::vector<typename F::value_type> r = a.coeffs();
    std::vector<typename F::value_type> q(std::size_t(a.degree() - b.degree() + 1), f.zero());
    const auto lead_inv = f.inv(b.leading());
    const std::size_t db = std::size_t(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        const auto c = f.mul(r[k + db], lead_inv);
        q[k] = c;
        if (f.is_zero(c)) continue;
        for (std::size_t j = 0; j <= db; ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b.coeffs()[j]));
    }
    return {Poly<F>(f, std::move(q)), Poly<F>(f, std::move(r))};
}

template <ExactField F>
Poly<F> poly_gcd(const Poly<F>& f, const Poly<F>& g) {
    require_same_field(f, g);
    Poly<F> a = f, b = g;
    while (!b.is_zero()) {
        Poly<F> r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

namespace {

// ---------------------------------------------------------------- finite fields

void add_factor(auto& factors, const auto& poly, unsigned mult) {
    for (auto& fac : factors)
        if (fac.poly == poly) {
            fac.multiplicity += mult;
            return;
        }
    factors.push_back({poly, mult});
}

Factorization<GaloisField> factor_finite(const Poly<GaloisField>& f) {
    const GaloisField& field = f.field();
    Factorization<GaloisField> out{field, f.leading(), {}};
    Poly<GaloisField> g = monic(f);
    const std::uint64_t q = field.order();
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (std::uint64_t t = 0; t < count && 2 * d <= g.degree(); ++t) {
            std::vector<std::uint32_t> c(std::size_t(d) + 1, 0);
            std::uint64_t rest = t;
            for (int i = 0; i < d; ++i) {
                c[std::size_t(i)] = std::uint32_t(rest % q);
                rest /= q;
            }
            c[std::size_t(d)] = field.one();
            const Poly<GaloisField> h(field, std::move(c));
            unsigned mult = 0;
            for (;;) {
                auto dm = divmod(g, h);
                if (!dm.remainder.is_zero()) break;
                g = std::move(dm.quotient);
                ++mult;
            }
            if (mult) out.factors.push_back({h, mult});
        }
    }
    if (g.degree() >= 1) add_factor(out.factors, g, 1);
    return out;
}

// ---------------------------------------------------------------- rationals

using QPoly = Poly<Rationals>;

// Divisor search in the rational root test is capped; beyond it the factorization
// is reported as unsupported rather than attempted.
constexpr unsigned long kMaxRootSearch = 1000000000000UL;

std::vector<std::uint64_t> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a > mpz_class(std::to_string(kMaxRootSearch)))
        throw Error(ErrorKind::UnsupportedFactorization, "coefficients too large for the rational root search");
    const std::uint64_t v = std::stoull(a.get_str());
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            small.push_back(d);
            if (d != v / d) large.push_back(v / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Distinct rational roots of a nonzero polynomial, ascending.
std::vector<mpq_class> rational_roots(const QPoly& f) {
    std::vector<mpq_class> roots;
    if (f.degree() < 1) return roots;
    // Clear denominators.
    mpz_class den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& c : f.coeffs()) a.push_back(mpz_class(c * den));
    std::size_t low = 0;
    while (a[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    if (low == a.size() - 1) return roots;
    const auto ps = positive_divisors(a[low]);
    const auto qs = positive_divisors(a.back());
    for (auto p : ps)
        for (auto q : qs) {
            for (int sign : {1, -1}) {
                mpq_class r(mpz_class(std::to_string(p)) * sign, mpz_class(std::to_string(q)));
                r.canonicalize();
                if (f.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool rational_sqrt(const mpq_class& v, mpq_class& root) {
    if (sgn(v) < 0) return false;
    if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
    root = mpq_class(n, d);
    root.canonicalize();
    return true;
}

/// f(x + s)
QPoly shift(const QPoly& f, const mpq_class& s) {
    const Rationals q;
    QPoly out(q);
    const QPoly lin(q, {s, 1});
    for (int i = f.degree(); i >= 0; --i) out = out * lin + QPoly::constant(q, f.coeffs()[std::size_t(i)]);
    return out;
}

/// Splits a monic quartic without rational roots into two quadratics when possible.
std::vector<QPoly> split_quartic(const QPoly& g) {
    const Rationals q;
    const mpq_class s = -g.coeff(3) / 4;
    const QPoly h = shift(g, s); // y^4 + P y^2 + Q y + R
    const mpq_class P = h.coeff(2), Q = h.coeff(1), R = h.coeff(0);
    std::vector<QPoly> pair;
    auto back = [&](const mpq_class& u, const mpq_class& v) { return shift(QPoly(q, {v, u, 1}), -s); };
    if (sgn(Q) != 0) {
        const QPoly resolvent(q, {-(Q * Q), P * P - 4 * R, 2 * P, 1});
        for (const auto& U : rational_roots(resolvent)) {
            mpq_class u;
            if (sgn(U) <= 0 || !rational_sqrt(U, u)) continue;
            const mpq_class v = (P + U - Q / u) / 2, w = (P + U + Q / u) / 2;
            return {back(u, v), back(-u, w)};
        }
        return {};
    }
    mpq_class root;
    if (rational_sqrt(P * P - 4 * R, root)) {
        const mpq_class s1 = (-P + root) / 2, s2 = (-P - root) / 2;
        return {back(0, -s1), back(0, -s2)};
    }
    if (rational_sqrt(R, root)) {
        for (const mpq_class& v : {root, mpq_class(-root)}) {
            mpq_class u;
            const mpq_class U = 2 * v - P;
            if (sgn(U) > 0 && rational_sqrt(U, u)) return {back(u, v), back(-u, v)};
        }
    }
    return {};
}

bool coeff_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

Factorization<Rationals> factor_rational(const QPoly& f) {
    const Rationals q;
    Factorization<Rationals> out{q, f.leading(), {}};
    QPoly g = monic(f);
    for (const auto& r : rational_roots(g)) {
        const QPoly lin(q, {-r, 1});
        unsigned mult = 0;
        for (;;) {
            auto dm = divmod(g, lin);
            if (!dm.remainder.is_zero()) break;
            g = std::move(dm.quotient);
            ++mult;
        }
        out.factors.push_back({lin, mult});
    }
    if (g.degree() > 4)
        throw Error(ErrorKind::UnsupportedFactorization,
                    "after removing rational roots the remaining factor has degree " + std::to_string(g.degree()) +
                        "; the limit is 4");
    if (g.degree() == 4) {
        auto parts = split_quartic(g);
        if (!parts.empty()) {
            for (const auto& part : parts) add_factor(out.factors, part, 1);
            g = QPoly::constant(q, 1);
        }
    }
    if (g.degree() >= 1) add_factor(out.factors, g, 1);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return coeff_less(a.poly, b.poly); });
    return out;
}

} // namespace

template <ExactField F>
Factorization<F> poly_factor(const Poly<F>& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
    Factorization<F> out = [&] {
        if constexpr (std::is_same_v<F, Rationals>)
            return factor_rational(f);
        else
            return factor_finite(f);
    }();
    if (!(expand(out) == f)) throw Error(ErrorKind::UnsupportedFactorization, "factorization failed to re-multiply");
    return out;
}

template <ExactField F>
Poly<F> expand(const Factorization<F>& fac) {
    const F& field = fac.field;
    Poly<F> out = Poly<F>::constant(field, fac.unit);
    for (const auto& [poly, mult] : fac.factors)
        for (unsigned i = 0; i < mult; ++i) out = out * poly;
    return out;
}

template <ExactField F>
std::string to_string(const Factorization<F>& fac, const std::string& var) {
    const F& field = fac.field;
    std::string out;
    if (!field.eq(fac.unit, field.one()) || fac.factors.empty()) out = field.to_string(fac.unit);
    for (const auto& [poly, mult] : fac.factors) {
        const bool bare = poly.degree() == 1 && field.is_zero(poly.coeff(0));
        out += bare ? poly.to_string(var) : "(" + poly.to_string(var) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

#define LEIBNIZ_INSTANTIATE_POLY(F)                                                     \
    template class Poly<F>;                                                             \
    template Poly<F> operator+(const Poly<F>&, const Poly<F>&);                         \
    template Poly<F> operator-(const Poly<F>&, const Poly<F>&);                         \
    template Poly<F> operator*(const Poly<F>&, const Poly<F>&);                         \
    template Poly<F> scale(const Poly<F>&, const typename F::value_type&);              \
    template Poly<F> monic(const Poly<F>&);                                             \
    template DivMod<F> divmod(const Poly<F>&, const Poly<F>&);                          \
    template Poly<F> poly_gcd(const Poly<F>&, const Poly<F>&);                          \
    template Factorization<F> poly_factor(const Poly<F>&);                              \
    template Poly<F> expand(const Factorization<F>&);                                   \
    template std::string to_string(const Factorization<F>&, const std::string&);

LEIBNIZ_INSTANTIATE_POLY(Rationals)
LEIBNIZ_INSTANTIATE_POLY(GaloisField)

} // namespace leibniz

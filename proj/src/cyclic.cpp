#include "leibniz/cyclic.hpp"

namespace leibniz {

template <ExactField F>
Algebra<F> build_cyclic(const CyclicSpec<F>& spec) {
    const std::size_t n = spec.n;
    if (n < 2) throw Error(ErrorKind::BadSpec, "cyclic algebra needs n >= 2, got " + std::to_string(n));
    if (spec.alphas.size() != n - 1)
        throw Error(ErrorKind::BadSpec, "expected " + std::to_string(n - 1) + " alphas, got " +
                                            std::to_string(spec.alphas.size()));
    const F& f = spec.field;
    std::vector<Vector<F>> table(n * n, zero_vector(f, n));
    for (std::size_t i = 0; i + 1 < n; ++i) table[i * n] = unit_vector(f, n, i + 1);
    Vector<F> last = zero_vector(f, n);
    for (std::size_t k = 1; k < n; ++k) last[k] = spec.alphas[k - 1];
    table[(n - 1) * n] = std::move(last);
    std::vector<std::string> names{"a"};
    for (std::size_t i = 2; i <= n; ++i) names.push_back("a" + std::to_string(i));
    return Algebra<F>::create(f, n, std::move(names), std::move(table));
}

template <ExactField F>
Poly<F> cyclic_polynomial(const CyclicSpec<F>& spec) {
    const F& f = spec.field;
    std::vector<typename F::value_type> c(spec.n + 1, f.zero());
    c[spec.n] = f.one();
    for (std::size_t k = 2; k <= spec.n; ++k) c[k - 1] = f.neg(spec.alphas[k - 2]);
    return Poly<F>(f, std::move(c));
}

template <ExactField F>
Matrix<F> companion_matrix(const Poly<F>& p) {
    if (!p.is_monic() || p.degree() < 1) throw Error(ErrorKind::ZeroPolynomial, "companion matrix needs a monic polynomial");
    const F& f = p.field();
    const std::size_t n = std::size_t(p.degree());
    Matrix<F> m(f, n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) m(j + 1, j) = f.one();
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = f.neg(p.coeff(i));
    return m;
}

template <ExactField F>
Vector<F> cyclic_complement(const CyclicSpec<F>& spec) {
    const F& f = spec.field;
    Vector<F> b = zero_vector(f, spec.n);
    b[spec.n - 1] = f.one();
    for (std::size_t k = 2; k <= spec.n; ++k) b[k - 2] = f.sub(b[k - 2], spec.alphas[k - 2]);
    return b;
}

namespace {

/// Table of the n = 2 algebra in the basis a' = a/α₂, a'² = [a', a'].
template <ExactField F>
bool rescales_to_idempotent_square(const Algebra<F>& L, const typename F::value_type& alpha2) {
    const F& f = L.field();
    const Vector<F> a1 = scale(f, f.inv(alpha2), L.basis_vector(0));
    const Vector<F> a2 = L.multiply(a1, a1);
    const Subspace<F> span = Subspace<F>::span(f, 2, {a1, a2});
    if (span.dim() != 2) return false;
    const Matrix<F> P = Matrix<F>::from_columns(f, 2, {a1, a2});
    const std::vector<Vector<F>> basis{a1, a2};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const Vector<F> coords = solve(P, L.multiply(basis[i], basis[j]));
            const bool expect_square = (j == 0);
            const Vector<F> want = expect_square ? unit_vector(f, 2, 1) : zero_vector(f, 2);
            if (coords != want) return false;
        }
    return true;
}

} // namespace

template <ExactField F>
Report classify_cyclic(const CyclicSpec<F>& spec, const SearchOptions& opts) {
    Report rep("cyclic");
    const F& f = spec.field;
    const Algebra<F> L = build_cyclic(spec);
    const Poly<F> p = cyclic_polynomial(spec);
    json alphas = json::array();
    for (const auto& a : spec.alphas) alphas.push_back(f.to_string(a));
    rep.data()["field"] = f.name();
    rep.data()["n"] = spec.n;
    rep.data()["alphas"] = alphas;
    rep.data()["p"] = p.to_string();

    rep.check("leibniz_identity", "[x,[y,z]] = [[x,y],z] − [[x,z],y]", !verify_leibniz(L));
    const Matrix<F> Ra = mult_operator(L, L.basis_vector(0), Side::right);
    rep.check("right_multiplication_is_companion", "R_a = companion matrix of p(x)", Ra == companion_matrix(p),
              "matrices differ", {{"R_a", matrix_to_json(Ra)}});

    const bool is_a = !f.is_zero(spec.alphas[0]);
    rep.data()["is_a"] = is_a;
    const Subspace<F> square = product_space(L, L.whole(), L.whole());
    if (is_a) {
        const Vector<F> b = cyclic_complement(spec);
        const Subspace<F> Fb = Subspace<F>::span(f, spec.n, {b});
        rep.data()["complement"] = vector_to_json(f, b);
        rep.check("complement_square_zero", "b² = 0, so Fb is a subalgebra",
                  is_zero_vector(f, L.multiply(b, b)) && is_subalgebra(L, Fb), "b² ≠ 0");
        rep.check("complement_splits", "L = L² ∔ Fb", independent(square, Fb) && square.dim() + 1 == spec.n,
                  "Fb is not a complement of L²");
        const Matrix<F> Rb = restrict_operator(mult_operator(L, b, Side::right), square);
        rep.check("complement_acts_invertibly", "[L², b] = L²",
                  !f.is_zero(determinant(Rb)) && product_space(L, square, Fb) == square, "R_b singular on L²",
                  {{"R_b|L²", matrix_to_json(Rb)}});
        if (spec.n == 2)
            rep.check("rescaled_generator_square", "a' = a/α₂ gives [a',a'] = a'², [a'²,a'] = a'²",
                      rescales_to_idempotent_square(L, spec.alphas[0]), "rescaled table differs");
    }

    std::optional<Factorization<F>> fac;
    try {
        fac = poly_factor(p);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedFactorization) throw;
        rep.data()["factorization"] = nullptr;
        rep.data()["unsupported"] = e.what();
    }
    bool monolithic_claim = false, phi_free_claim = false;
    if (fac) {
        const std::size_t r = fac->factors.size();
        monolithic_claim = r == 2;
        bool x_once = false, other_once = false;
        for (const auto& fa : fac->factors) {
            if (fa.poly == Poly<F>::x(f)) x_once = fa.multiplicity == 1;
            else other_once = fa.multiplicity == 1;
        }
        phi_free_claim = r == 2 && x_once && other_once;
        rep.data()["factorization"] = to_string(*fac);
        rep.data()["irreducible_factor_count"] = r;
        rep.data()["monolithic_claim"] = is_a && monolithic_claim;
        rep.data()["phi_free_monolithic_claim"] = is_a && phi_free_claim;
    }

    if (!f.is_finite()) {
        const AVerdict<F> v = shortcut_verdict(L, opts);
        rep.data()["shortcut_verdict"] = v.to_json();
        rep.check("shortcut_consistent_with_alpha2", "shortcut verdict ∈ {Unknown, (α₂ ≠ 0)}",
                  v.value == Verdict::unknown || (v.value == Verdict::yes) == is_a, "shortcut contradicts α₂ test");
        rep.skip("monolithic_iff_two_factors", "monolithic ⟺ p(x) has exactly two irreducible factors",
                 "minimal ideals need enumeration over a finite field");
        return rep;
    }

    const Analysis<F> ctx = Analysis<F>::build(L, opts);
    if (!ctx.lattice) {
        rep.skip("a_iff_alpha2_nonzero", "A-algebra ⟺ α₂ ≠ 0", ctx.lattice_note);
        return rep;
    }
    const AVerdict<F> v = exhaustive_verdict(L, *ctx.lattice);
    rep.data()["verdict"] = v.to_json();
    rep.check("a_iff_alpha2_nonzero", "A-algebra ⟺ α₂ ≠ 0", (v.value == Verdict::yes) == is_a,
              "enumeration disagrees with the α₂ test");
    const bool monolithic = ctx.socle->monolithic;
    const bool phi_free = ctx.frattini->ideal.is_zero();
    rep.data()["monolithic"] = monolithic;
    rep.data()["phi_free"] = phi_free;
    if (monolithic) rep.data()["monolith"] = subspace_to_json(*ctx.socle->monolith);
    rep.data()["frattini"] = subspace_to_json(ctx.frattini->ideal);
    if (!is_a) return rep;
    if (!fac) {
        rep.skip("monolithic_iff_two_factors", "monolithic ⟺ p(x) has exactly two irreducible factors",
                 "factorization unavailable");
        return rep;
    }
    rep.check("monolithic_iff_two_factors", "monolithic ⟺ p(x) has exactly two irreducible factors",
              monolithic == monolithic_claim, "enumeration disagrees with the factor count");
    rep.check("phi_free_monolithic_iff_x_times_irreducible", "monolithic and φ(L) = 0 ⟺ p(x) = x·p₂(x), p₂ irreducible",
              (monolithic && phi_free) == phi_free_claim, "enumeration disagrees with the factorization");
    return rep;
}

#define LEIBNIZ_INSTANTIATE_CYCLIC(F)                                                 \
    template Algebra<F> build_cyclic(const CyclicSpec<F>&);                           \
    template Poly<F> cyclic_polynomial(const CyclicSpec<F>&);                         \
    template Matrix<F> companion_matrix(const Poly<F>&);                              \
    template Vector<F> cyclic_complement(const CyclicSpec<F>&);                       \
    template Report classify_cyclic(const CyclicSpec<F>&, const SearchOptions&);

LEIBNIZ_INSTANTIATE_CYCLIC(Rationals)
LEIBNIZ_INSTANTIATE_CYCLIC(GaloisField)

} // namespace leibniz

#include "leibniz/decompose.hpp"

#include <random>
#include <type_traits>

namespace leibniz {

template <ExactField F>
FittingPair<F> fitting(const Matrix<F>& T) {
    if (!T.is_square()) throw Error(ErrorKind::ShapeMismatch, "Fitting decomposition needs a square operator");
    const std::size_t n = T.rows();
    const F& f = T.field();
    if (n == 0) return {Subspace<F>(f, 0), Subspace<F>(f, 0)};
    const Matrix<F> Tn = power(T, n);
    FittingPair<F> fp{kernel(Tn), image(Tn)};
    auto fail = [](const std::string& what) { throw Error(ErrorKind::NotDecomposing, what); };
    if (fp.null_part.dim() + fp.one_part.dim() != n || !independent(fp.null_part, fp.one_part))
        fail("null and one parts are not complementary");
    try {
        const Matrix<F> on_null = restrict_operator(T, fp.null_part);
        const Matrix<F> on_one = restrict_operator(T, fp.one_part);
        if (!is_nilpotent(on_null)) fail("operator is not nilpotent on the null part");
        if (on_one.rows() > 0 && f.is_zero(determinant(on_one))) fail("operator is singular on the one part");
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::DimensionMismatch) fail("a Fitting component is not invariant");
        throw;
    }
    return fp;
}

template <ExactField F>
FittingPair<F> fitting_family(const Algebra<F>& L, const Subspace<F>& C, const Subspace<F>& V) {
    std::vector<Matrix<F>> ops;
    for (const auto& c : C.basis()) ops.push_back(mult_operator(L, c, Side::right));
    // One part: stable term of V, R_C(V), ...
    Subspace<F> W = V;
    for (;;) {
        std::vector<Vector<F>> gens;
        for (const auto& m : ops)
            for (const auto& w : W.basis()) gens.push_back(mat_vec(m, w));
        Subspace<F> next = Subspace<F>::span(L.field(), L.dim(), std::move(gens));
        if (next == W) break;
        W = std::move(next);
    }
    // Null part: increasing chain Z_{k+1} = { x in V : R_c x in Z_k for all c }.
    Subspace<F> Z = L.zero();
    for (;;) {
        Subspace<F> next = constrained_subspace(V, ops, Z);
        if (next == Z) break;
        Z = std::move(next);
    }
    FittingPair<F> fp{std::move(Z), std::move(W)};
    if (fp.null_part.dim() + fp.one_part.dim() != V.dim() || !independent(fp.null_part, fp.one_part) ||
        !V.contains(fp.one_part))
        throw Error(ErrorKind::NotDecomposing, "null and one parts of the family do not decompose the space");
    for (const auto& m : ops)
        if (!fp.null_part.contains(map_subspace(m, fp.null_part)) || !fp.one_part.contains(map_subspace(m, fp.one_part)))
            throw Error(ErrorKind::NotDecomposing, "a Fitting component of the family is not invariant");
    return fp;
}

template <ExactField F>
FittingPair<F> fitting_family(const Algebra<F>& L, const Subspace<F>& C) {
    return fitting_family(L, C, L.whole());
}

template <ExactField F>
bool is_cartan(const Algebra<F>& L, const Subspace<F>& C) {
    return is_subalgebra(L, C) && is_nilpotent_sub(L, C) && normalizer(L, C).carrier == C;
}

namespace {

template <ExactField F>
Vector<F> combine(const Subspace<F>& K, const Vector<F>& coeffs) {
    const F& f = K.field();
    Vector<F> x = zero_vector(f, K.ambient());
    for (std::size_t j = 0; j < K.dim(); ++j) axpy(f, x, coeffs[j], K.vector(j));
    return x;
}

/// Coefficient vectors in the fixed search order.
template <ExactField F>
std::vector<Vector<F>> coefficient_sweep(const F& f, std::size_t d, const SearchOptions& opts) {
    std::vector<Vector<F>> out;
    for (std::size_t i = 0; i < d; ++i) out.push_back(unit_vector(f, d, i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Vector<F> plus = unit_vector(f, d, i), minus = unit_vector(f, d, i);
            plus[j] = f.one();
            minus[j] = f.neg(f.one());
            out.push_back(std::move(plus));
            if (minus != out.back()) out.push_back(std::move(minus));
        }
    std::mt19937_64 rng(opts.seed);
    if constexpr (std::is_same_v<F, GaloisField>) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d && total <= opts.budget; ++i) total *= f.order();
        if (total <= opts.budget) {
            for (std::uint64_t t = 1; t < total; ++t) {
                Vector<F> v(d, 0);
                std::uint64_t rest = t;
                for (std::size_t i = d; i-- > 0;) {
                    v[i] = std::uint32_t(rest % f.order());
                    rest /= f.order();
                }
                out.push_back(std::move(v));
            }
            return out;
        }
        std::uniform_int_distribution<std::uint32_t> dist(0, std::uint32_t(f.order() - 1));
        for (unsigned t = 0; t < opts.random_tries; ++t) {
            Vector<F> v(d, 0);
            for (auto& x : v) x = dist(rng);
            out.push_back(std::move(v));
        }
    } else {
        std::uniform_int_distribution<int> dist(-3, 3);
        for (unsigned t = 0; t < opts.random_tries; ++t) {
            Vector<F> v(d, f.zero());
            for (auto& x : v) x = f.from_int(dist(rng));
            out.push_back(std::move(v));
        }
    }
    return out;
}

} // namespace

template <ExactField F>
std::vector<Vector<F>> sample_elements(const Subspace<F>& K, const SearchOptions& opts) {
    std::vector<Vector<F>> out;
    for (const auto& c : coefficient_sweep(K.field(), K.dim(), opts))
        if (!is_zero_vector(K.field(), c)) out.push_back(combine(K, c));
    return out;
}

template <ExactField F>
Subspace<F> cartan_subalgebra(const Algebra<F>& L, const SearchOptions& opts) {
    if (!is_solvable_sub(L, L.whole())) throw Error(ErrorKind::NotSolvable, "Cartan search needs a solvable algebra");
    const F& f = L.field();
    Subspace<F> K = L.whole();
    while (!is_nilpotent_sub(L, K)) {
        std::optional<Subspace<F>> best;
        for (const auto& x : sample_elements(K, opts)) {
            const Matrix<F> T = restrict_operator(mult_operator(L, x, Side::right), K);
            const Subspace<F> null_coords = generalized_kernel(T, K.dim());
            if (null_coords.dim() == K.dim()) continue;
            if (best && best->dim() <= null_coords.dim()) continue;
            std::vector<Vector<F>> gens;
            for (const auto& c : null_coords.basis()) gens.push_back(combine(K, c));
            best = Subspace<F>::span(f, L.dim(), std::move(gens));
        }
        if (!best) throw Error(ErrorKind::CartanSearchFailed, "no candidate element acts non-nilpotently");
        K = std::move(*best);
    }
    if (is_cartan(L, K)) return K;
    if (!f.is_finite())
        throw Error(ErrorKind::CartanSearchFailed, "refinement ended in a subalgebra that is not self-normalizing");
    const Lattice<F> lattice = build_lattice(L, opts.budget);
    for (const auto& S : lattice.subalgebras)
        if (is_cartan(L, S)) return S;
    throw Error(ErrorKind::CartanSearchFailed, "no nilpotent self-normalizing subalgebra exists");
}

namespace {

/// Components A_0, ..., A_m of a solvable algebra in its own coordinates.
template <ExactField F>
std::vector<Subspace<F>> split_recursive(const Algebra<F>& B, const SearchOptions& opts) {
    if (B.dim() == 0) return {};
    const auto der = series(B, SeriesKind::derived);
    if (!der.reaches_zero) throw Error(ErrorKind::NotSolvable, "triangular decomposition needs a solvable algebra");
    const std::size_t m = der.terms.size() - 2; // index of the last nonzero term
    if (m == 0) return {B.whole()};
    const Subspace<F>& top = der.terms[m];
    const auto below = restrict_to(B, der.terms[m - 1]);
    const Subspace<F> C = map_subspace(below.embedding, cartan_subalgebra(below.algebra, opts));
    FittingPair<F> fp = [&] {
        try {
            return fitting_family(B, C);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::NotDecomposing) throw Error(ErrorKind::DecompositionFailed, e.what());
            throw;
        }
    }();
    const Subspace<F>& B0 = fp.null_part;
    if (B0.dim() + top.dim() != B.dim() || !independent(B0, top))
        throw Error(ErrorKind::DecompositionFailed, "Fitting null part is not a complement to the last derived term");
    if (!is_subalgebra(B, B0)) throw Error(ErrorKind::DecompositionFailed, "Fitting null part is not a subalgebra");
    const auto inner = restrict_to(B, B0);
    std::vector<Subspace<F>> comps;
    for (const auto& c : split_recursive(inner.algebra, opts)) comps.push_back(map_subspace(inner.embedding, c));
    if (comps.size() > m) throw Error(ErrorKind::DecompositionFailed, "complement has larger derived length");
    while (comps.size() < m) comps.push_back(B.zero());
    comps.push_back(top);
    return comps;
}

} // namespace

template <ExactField F>
TriangularDecomposition<F> triangular_decomposition(const Algebra<F>& L, const SearchOptions& opts) {
    const auto der = series(L, SeriesKind::derived);
    if (!der.reaches_zero) throw Error(ErrorKind::NotSolvable, "triangular decomposition needs a solvable algebra");
    TriangularDecomposition<F> D{split_recursive(L, opts), der.terms};
    D.derived.pop_back(); // drop the zero term
    auto fail = [](const std::string& what) { throw Error(ErrorKind::DecompositionFailed, what); };
    if (D.components.size() != D.derived.size()) fail("component count differs from derived length");
    std::size_t total = 0;
    for (const auto& A : D.components) {
        if (!is_subalgebra(L, A) || !is_abelian(L, A)) fail("a component is not an abelian subalgebra");
        total += A.dim();
    }
    if (total != L.dim()) fail("component dimensions do not add up to dim L");
    Subspace<F> acc = L.zero();
    std::size_t acc_dim = 0;
    for (std::size_t i = D.components.size(); i-- > 0;) {
        acc = sum(acc, D.components[i]);
        acc_dim += D.components[i].dim();
        if (acc.dim() != acc_dim) fail("components are not independent");
        if (!(acc == D.derived[i])) fail("partial sum differs from derived term " + std::to_string(i));
    }
    return D;
}

template <ExactField F>
std::vector<Subspace<F>> ideal_decomposition(const Algebra<F>& L, const Subspace<F>& K,
                                             const TriangularDecomposition<F>& D) {
    if (!is_ideal(L, K)) throw Error(ErrorKind::NotAnIdeal, "ideal decomposition needs an ideal");
    std::vector<Subspace<F>> parts;
    std::size_t total = 0;
    for (const auto& A : D.components) {
        parts.push_back(intersect(K, A));
        total += parts.back().dim();
    }
    if (total != K.dim()) throw Error(ErrorKind::DecompositionFailed, "intersections with the components do not span K");
    return parts;
}

template <ExactField F>
std::vector<Subspace<F>> complements(const Algebra<F>& L, const Subspace<F>& V, const Lattice<F>& lattice) {
    std::vector<Subspace<F>> out;
    for (const auto& S : lattice.subalgebras)
        if (S.dim() + V.dim() == L.dim() && independent(S, V)) out.push_back(S);
    return out;
}

template <ExactField F>
std::vector<Subspace<F>> cartan_subalgebras(const Algebra<F>& L, const Lattice<F>& lattice) {
    std::vector<Subspace<F>> out;
    for (const auto& S : lattice.subalgebras)
        if (is_cartan(L, S)) out.push_back(S);
    return out;
}

#define LEIBNIZ_INSTANTIATE_DECOMPOSE(F)                                                                        \
    template FittingPair<F> fitting(const Matrix<F>&);                                                          \
    template FittingPair<F> fitting_family(const Algebra<F>&, const Subspace<F>&);                              \
    template FittingPair<F> fitting_family(const Algebra<F>&, const Subspace<F>&, const Subspace<F>&);          \
    template bool is_cartan(const Algebra<F>&, const Subspace<F>&);                                             \
    template std::vector<Vector<F>> sample_elements(const Subspace<F>&, const SearchOptions&);                  \
    template Subspace<F> cartan_subalgebra(const Algebra<F>&, const SearchOptions&);                            \
    template TriangularDecomposition<F> triangular_decomposition(const Algebra<F>&, const SearchOptions&);      \
    template std::vector<Subspace<F>> ideal_decomposition(const Algebra<F>&, const Subspace<F>&,                \
                                                          const TriangularDecomposition<F>&);                   \
    template std::vector<Subspace<F>> complements(const Algebra<F>&, const Subspace<F>&, const Lattice<F>&);    \
    template std::vector<Subspace<F>> cartan_subalgebras(const Algebra<F>&, const Lattice<F>&);

LEIBNIZ_INSTANTIATE_DECOMPOSE(Rationals)
LEIBNIZ_INSTANTIATE_DECOMPOSE(GaloisField)

} // namespace leibniz

#include "leibniz/series.hpp"

#include <type_traits>

namespace leibniz {

std::string to_string(SeriesKind kind) {
    switch (kind) {
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::lower_nilpotent: return "lower_nilpotent";
    }
    return "unknown";
}

std::string to_string(RadicalStatus status) {
    return status == RadicalStatus::exact ? "exact" : "lower_bound";
}

namespace {

/// Stable term of W, [W, S], [[W, S], S], ...
template <ExactField F>
Subspace<F> stable_right_products(const Algebra<F>& L, Subspace<F> W, const Subspace<F>& S) {
    for (;;) {
        Subspace<F> next = product_space(L, W, S);
        if (next == W) return W;
        W = std::move(next);
    }
}

} // namespace

template <ExactField F>
SeriesReport<F> series(const Algebra<F>& L, SeriesKind kind) {
    SeriesReport<F> rep{kind, {L.whole()}, false, std::nullopt};
    const Subspace<F> all = L.whole();
    for (;;) {
        const Subspace<F>& last = rep.terms.back();
        if (last.is_zero()) {
            rep.reaches_zero = true;
            break;
        }
        Subspace<F> next = [&] {
            switch (kind) {
            case SeriesKind::derived: return product_space(L, last, last);
            case SeriesKind::lower_central: return product_space(L, last, all);
            case SeriesKind::lower_nilpotent: return stable_right_products(L, last, last);
            }
            return last;
        }();
        if (next == last) break;
        rep.terms.push_back(std::move(next));
    }
    if (rep.reaches_zero) rep.length = rep.terms.size() - 1;
    return rep;
}

template <ExactField F>
std::vector<Subspace<F>> upper_central_series(const Algebra<F>& L) {
    std::vector<Matrix<F>> ops;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        ops.push_back(mult_operator(L, L.basis_vector(i), Side::right));
        ops.push_back(mult_operator(L, L.basis_vector(i), Side::left));
    }
    std::vector<Subspace<F>> terms;
    Subspace<F> Z = L.zero();
    for (;;) {
        Subspace<F> next = constrained_subspace(L.whole(), ops, Z);
        if (next == Z) break;
        terms.push_back(next);
        Z = std::move(next);
    }
    return terms;
}

template <ExactField F>
Predicates predicates(const Algebra<F>& L) {
    Predicates p;
    const auto lc = series(L, SeriesKind::lower_central);
    const auto der = series(L, SeriesKind::derived);
    p.is_nilpotent = lc.reaches_zero;
    p.nilpotency_class = lc.length;
    p.is_solvable = der.reaches_zero;
    p.derived_length = der.length;
    const Subspace<F> square = product_space(L, L.whole(), L.whole());
    p.is_abelian = square.is_zero();
    p.is_metabelian = p.is_solvable && *p.derived_length <= 2;
    p.is_completely_solvable = is_nilpotent_sub(L, square);
    return p;
}

template <ExactField F>
Subspace<F> nilpotent_residual(const Algebra<F>& L) {
    const auto lc = series(L, SeriesKind::lower_central);
    Subspace<F> g = lc.terms.back();
    if (!g.is_zero()) {
        const Algebra<F> q = quotient(L, g).algebra;
        if (!series(q, SeriesKind::lower_central).reaches_zero)
            throw Error(ErrorKind::NotLeibniz, "quotient by the nilpotent residual is not nilpotent");
    }
    return g;
}

template <ExactField F>
Subspace<F> ideal_core(const Algebra<F>& L, const Subspace<F>& U) {
    std::vector<Matrix<F>> ops;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        ops.push_back(mult_operator(L, L.basis_vector(i), Side::right));
        ops.push_back(mult_operator(L, L.basis_vector(i), Side::left));
    }
    Subspace<F> W = U;
    for (;;) {
        Subspace<F> next = constrained_subspace(W, ops, W);
        if (next == W) return W;
        W = std::move(next);
    }
}

namespace {

/// { x : Tr(R_x M) = 0 for all M in the unital associative algebra generated by the R_b }.
/// Every nilpotent ideal lies in this subspace: its lower central terms form a flag of
/// right ideals that each R_b preserves and each R_x (x in the ideal) strictly lowers.
template <ExactField F>
Subspace<F> trace_form_bound(const Algebra<F>& L) {
    const F& f = L.field();
    const std::size_t n = L.dim();
    std::vector<Matrix<F>> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(mult_operator(L, L.basis_vector(i), Side::right));
    auto flatten = [&](const Matrix<F>& m) {
        Vector<F> v;
        v.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) v.push_back(m(r, c));
        return v;
    };
    // Span of all words in the generators, grown breadth-first.
    std::vector<Matrix<F>> words{Matrix<F>::identity(f, n)};
    Subspace<F> span = Subspace<F>::span(f, n * n, {flatten(words[0])});
    for (std::size_t head = 0; head < words.size(); ++head) {
        for (const auto& g : gens) {
            Matrix<F> w = multiply(words[head], g);
            Vector<F> flat = flatten(w);
            if (span.contains(flat)) continue;
            span = sum(span, Subspace<F>::span(f, n * n, {flat}));
            words.push_back(std::move(w));
        }
    }
    std::vector<Vector<F>> rows;
    for (const auto& m : words) {
        Vector<F> row(n, f.zero());
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix<F> prod = multiply(gens[k], m);
            auto tr = f.zero();
            for (std::size_t d = 0; d < n; ++d) tr = f.add(tr, prod(d, d));
            row[k] = tr;
        }
        rows.push_back(std::move(row));
    }
    return kernel(Matrix<F>::from_rows(f, n, rows));
}

template <ExactField F>
RadicalResult<F> nilradical_infinite(const Algebra<F>& L) {
    if (series(L, SeriesKind::lower_central).reaches_zero)
        return {L.whole(), RadicalStatus::exact, "nilpotent algebra", L.whole()};
    const Subspace<F> upper = ideal_core(L, trace_form_bound(L));
    if (is_nilpotent_sub(L, upper)) return {upper, RadicalStatus::exact, "trace-form bound is nilpotent", upper};
    // Lower bound: sum of the nilpotent ideals among a fixed list of candidates.
    std::vector<Subspace<F>> candidates{leib_kernel(L).carrier, centre(L).carrier};
    for (auto& z : upper_central_series(L)) candidates.push_back(std::move(z));
    for (auto& t : series(L, SeriesKind::derived).terms) candidates.push_back(std::move(t));
    Subspace<F> lower = L.zero();
    for (const auto& c : candidates) {
        if (!is_ideal(L, c) || !is_nilpotent_sub(L, c)) continue;
        Subspace<F> grown = sum(lower, c);
        if (is_nilpotent_sub(L, grown)) lower = std::move(grown);
    }
    return {lower, RadicalStatus::lower_bound, "sum of nilpotent candidate ideals", upper};
}

} // namespace

template <ExactField F>
RadicalResult<F> nilradical(const Algebra<F>& L, const Lattice<F>& lattice) {
    Subspace<F> N = L.zero();
    for (const auto& I : lattice.ideals)
        if (!N.contains(I) && is_nilpotent_sub(L, I)) N = sum(N, I);
    if (!is_nilpotent_sub(L, N)) throw Error(ErrorKind::NotLeibniz, "sum of nilpotent ideals is not nilpotent");
    return {N, RadicalStatus::exact, "enumeration", std::nullopt};
}

template <ExactField F>
RadicalResult<F> nilradical(const Algebra<F>& L, std::uint64_t budget) {
    if (!L.field().is_finite()) return nilradical_infinite(L);
    return nilradical(L, build_lattice(L, budget));
}

template <ExactField F>
RadicalResult<F> radical(const Algebra<F>& L, const Lattice<F>& lattice) {
    if (is_solvable_sub(L, L.whole())) return {L.whole(), RadicalStatus::exact, "solvable algebra", std::nullopt};
    Subspace<F> R = L.zero();
    for (const auto& I : lattice.ideals)
        if (!R.contains(I) && is_solvable_sub(L, I)) R = sum(R, I);
    return {R, RadicalStatus::exact, "enumeration", std::nullopt};
}

template <ExactField F>
RadicalResult<F> radical(const Algebra<F>& L, std::uint64_t budget) {
    if (is_solvable_sub(L, L.whole())) return {L.whole(), RadicalStatus::exact, "solvable algebra", std::nullopt};
    if (!L.field().is_finite())
        throw Error(ErrorKind::InfiniteFieldUnsupported, "radical of a non-solvable algebra over " + L.field().name());
    return radical(L, build_lattice(L, budget));
}

#define LEIBNIZ_INSTANTIATE_SERIES(F)                                                   \
    template SeriesReport<F> series(const Algebra<F>&, SeriesKind);                     \
    template std::vector<Subspace<F>> upper_central_series(const Algebra<F>&);          \
    template Predicates predicates(const Algebra<F>&);                                  \
    template Subspace<F> nilpotent_residual(const Algebra<F>&);                         \
    template Subspace<F> ideal_core(const Algebra<F>&, const Subspace<F>&);             \
    template RadicalResult<F> nilradical(const Algebra<F>&, std::uint64_t);             \
    template RadicalResult<F> nilradical(const Algebra<F>&, const Lattice<F>&);         \
    template RadicalResult<F> radical(const Algebra<F>&, std::uint64_t);                \
    template RadicalResult<F> radical(const Algebra<F>&, const Lattice<F>&);

LEIBNIZ_INSTANTIATE_SERIES(Rationals)
LEIBNIZ_INSTANTIATE_SERIES(GaloisField)

} // namespace leibniz

#include "leibniz/algebra.hpp"

#include <algorithm>

namespace leibniz {

template <ExactField F>
Algebra<F> Algebra<F>::create(F field, std::size_t dim, std::vector<std::string> names, std::vector<Vector<F>> table,
                              Checked checked) {
    if (table.size() != dim * dim)
        throw Error(ErrorKind::DimensionMismatch, "table needs " + std::to_string(dim * dim) + " entries");
    for (const auto& v : table)
        if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "table entry of wrong length");
    if (names.empty())
        for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    if (names.size() != dim) throw Error(ErrorKind::DimensionMismatch, "basis name count differs from dimension");
    Algebra L(std::make_shared<const Data>(Data{std::move(field), dim, std::move(names), std::move(table)}));
    if (checked == Checked::yes) {
        if (auto v = verify_leibniz(L))
            throw Error(ErrorKind::NotLeibniz, "Leibniz identity fails at basis triple (" + std::to_string(v->i) + ", " +
                                                   std::to_string(v->j) + ", " + std::to_string(v->k) + ")");
    }
    return L;
}

template <ExactField F>
Algebra<F> Algebra<F>::abelian(const F& field, std::size_t dim, std::vector<std::string> names) {
    return create(field, dim, std::move(names), std::vector<Vector<F>>(dim * dim, zero_vector(field, dim)),
                  Checked::no);
}

template <ExactField F>
Vector<F> Algebra<F>::multiply(const Vector<F>& u, const Vector<F>& v) const {
    const std::size_t n = dim();
    if (u.size() != n || v.size() != n) throw Error(ErrorKind::DimensionMismatch, "operand length differs from dimension");
    const F& f = field();
    Vector<F> out = zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f.is_zero(u[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (f.is_zero(v[j])) continue;
            axpy(f, out, f.mul(u[i], v[j]), product(i, j));
        }
    }
    return out;
}

template <ExactField F>
std::optional<Violation<F>> verify_leibniz(const Algebra<F>& L) {
    const std::size_t n = L.dim();
    const F& f = L.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vector<F> bi = L.basis_vector(i);
                Vector<F> lhs = L.multiply(bi, L.product(j, k));
                Vector<F> rhs = sub(f, L.multiply(L.product(i, j), L.basis_vector(k)),
                                    L.multiply(L.product(i, k), L.basis_vector(j)));
                if (lhs != rhs) return Violation<F>{i, j, k, std::move(lhs), std::move(rhs)};
            }
    return std::nullopt;
}

template <ExactField F>
Matrix<F> mult_operator(const Algebra<F>& L, const Vector<F>& x, Side side) {
    const std::size_t n = L.dim();
    Matrix<F> m(L.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector<F> bj = L.basis_vector(j);
        const Vector<F> col = side == Side::right ? L.multiply(bj, x) : L.multiply(x, bj);
        for (std::size_t r = 0; r < n; ++r) m(r, j) = col[r];
    }
    return m;
}

template <ExactField F>
Subspace<F> product_space(const Algebra<F>& L, const Subspace<F>& U, const Subspace<F>& V) {
    std::vector<Vector<F>> gens;
    for (const auto& u : U.basis())
        for (const auto& v : V.basis()) {
            Vector<F> w = L.multiply(u, v);
            if (!is_zero_vector(L.field(), w)) gens.push_back(std::move(w));
        }
    return Subspace<F>::span(L.field(), L.dim(), std::move(gens));
}

namespace {

template <ExactField F>
bool products_inside(const Algebra<F>& L, const Subspace<F>& U, const Subspace<F>& V, const Subspace<F>& target) {
    for (const auto& u : U.basis())
        for (const auto& v : V.basis())
            if (!target.contains(L.multiply(u, v))) return false;
    return true;
}

} // namespace

template <ExactField F>
bool is_subalgebra(const Algebra<F>& L, const Subspace<F>& U) {
    return products_inside(L, U, U, U);
}

template <ExactField F>
bool is_left_ideal(const Algebra<F>& L, const Subspace<F>& U) {
    return products_inside(L, L.whole(), U, U);
}

template <ExactField F>
bool is_right_ideal(const Algebra<F>& L, const Subspace<F>& U) {
    return products_inside(L, U, L.whole(), U);
}

template <ExactField F>
bool is_abelian(const Algebra<F>& L, const Subspace<F>& U) {
    return products_inside(L, U, U, L.zero());
}

template <ExactField F>
bool is_nilpotent_sub(const Algebra<F>& L, const Subspace<F>& U) {
    Subspace<F> W = U;
    while (!W.is_zero()) {
        Subspace<F> next = product_space(L, W, U);
        if (next.dim() == W.dim()) return false;
        W = std::move(next);
    }
    return true;
}

template <ExactField F>
bool is_solvable_sub(const Algebra<F>& L, const Subspace<F>& U) {
    Subspace<F> W = U;
    while (!W.is_zero()) {
        Subspace<F> next = product_space(L, W, W);
        if (next.dim() == W.dim()) return false;
        W = std::move(next);
    }
    return true;
}

template <ExactField F>
SubHandle<F> make_handle(const Algebra<F>& L, Subspace<F> U) {
    if (U.ambient() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace does not live in the algebra");
    SubHandle<F> h{L, std::move(U)};
    h.is_subalgebra = is_subalgebra(L, h.carrier);
    h.is_left_ideal = is_left_ideal(L, h.carrier);
    h.is_right_ideal = is_right_ideal(L, h.carrier);
    h.is_ideal = h.is_left_ideal && h.is_right_ideal;
    return h;
}

template <ExactField F>
SubHandle<F> leib_kernel(const Algebra<F>& L) {
    const std::size_t n = L.dim();
    const F& f = L.field();
    std::vector<Vector<F>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(L.product(i, i));
        for (std::size_t j = i + 1; j < n; ++j) gens.push_back(add(f, L.product(i, j), L.product(j, i)));
    }
    SubHandle<F> h = make_handle(L, Subspace<F>::span(f, n, std::move(gens)));
    if (!h.is_ideal) throw Error(ErrorKind::NotLeibniz, "span of squares is not an ideal");
    const Algebra<F> lie = quotient(L, h.carrier).algebra;
    for (std::size_t i = 0; i < lie.dim(); ++i)
        for (std::size_t j = i; j < lie.dim(); ++j)
            if (!is_zero_vector(f, i == j ? lie.product(i, i) : add(f, lie.product(i, j), lie.product(j, i))))
                throw Error(ErrorKind::NotLeibniz, "quotient by the span of squares is not anticommutative");
    return h;
}

namespace {

/// Kernel of the linear map x -> (rows . x), rows given as coefficient vectors over x.
template <ExactField F>
Subspace<F> solve_homogeneous(const F& f, std::size_t n, const std::vector<Vector<F>>& rows) {
    if (rows.empty()) return Subspace<F>::full(f, n);
    return kernel(Matrix<F>::from_rows(f, n, rows));
}

} // namespace

template <ExactField F>
SubHandle<F> centre(const Algebra<F>& L) {
    return centralizer(L, L.whole());
}

template <ExactField F>
SubHandle<F> centralizer(const Algebra<F>& L, const Subspace<F>& U) {
    const std::size_t n = L.dim();
    const F& f = L.field();
    std::vector<Vector<F>> rows;
    for (const auto& u : U.basis()) {
        // [x, u] = sum_k x_k [b_k, u] and [u, x] = sum_k x_k [u, b_k]
        const Matrix<F> right = mult_operator(L, u, Side::right);
        const Matrix<F> left = mult_operator(L, u, Side::left);
        for (std::size_t c = 0; c < n; ++c) {
            rows.push_back(right.row(c));
            rows.push_back(left.row(c));
        }
    }
    return make_handle(L, solve_homogeneous(f, n, rows));
}

template <ExactField F>
SubHandle<F> normalizer(const Algebra<F>& L, const Subspace<F>& U) {
    const std::size_t n = L.dim();
    const F& f = L.field();
    const auto functionals = annihilator(U);
    std::vector<Vector<F>> rows;
    for (const auto& u : U.basis()) {
        const Matrix<F> right = mult_operator(L, u, Side::right);
        const Matrix<F> left = mult_operator(L, u, Side::left);
        for (const auto& w : functionals) {
            Vector<F> r1 = zero_vector(f, n), r2 = zero_vector(f, n);
            for (std::size_t c = 0; c < n; ++c) {
                if (f.is_zero(w[c])) continue;
                axpy(f, r1, w[c], right.row(c));
                axpy(f, r2, w[c], left.row(c));
            }
            rows.push_back(std::move(r1));
            rows.push_back(std::move(r2));
        }
    }
    return make_handle(L, solve_homogeneous(f, n, rows));
}

template <ExactField F>
SubHandle<F> subalgebra_closure(const Algebra<F>& L, const std::vector<Vector<F>>& generators) {
    Subspace<F> S = Subspace<F>::span(L.field(), L.dim(), generators);
    for (;;) {
        Subspace<F> next = sum(S, product_space(L, S, S));
        if (next.dim() == S.dim()) break;
        S = std::move(next);
    }
    return make_handle(L, std::move(S));
}

template <ExactField F>
SubHandle<F> ideal_closure(const Algebra<F>& L, const std::vector<Vector<F>>& generators) {
    Subspace<F> S = Subspace<F>::span(L.field(), L.dim(), generators);
    const Subspace<F> all = L.whole();
    for (;;) {
        Subspace<F> next = sum(S, sum(product_space(L, S, all), product_space(L, all, S)));
        if (next.dim() == S.dim()) break;
        S = std::move(next);
    }
    return make_handle(L, std::move(S));
}

template <ExactField F>
Quotient<F> quotient(const Algebra<F>& L, const Subspace<F>& I) {
    if (I.ambient() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace does not live in the algebra");
    if (!is_ideal(L, I)) throw Error(ErrorKind::NotAnIdeal, "quotient needs a two-sided ideal");
    const F& f = L.field();
    const std::size_t n = L.dim();
    const auto coords = I.non_pivots();
    const std::size_t m = coords.size();
    Matrix<F> proj(f, m, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vector<F> r = I.reduce(L.basis_vector(j));
        for (std::size_t a = 0; a < m; ++a) proj(a, j) = r[coords[a]];
    }
    std::vector<Vector<F>> table;
    table.reserve(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table.push_back(mat_vec(proj, L.product(coords[a], coords[b])));
    std::vector<std::string> names;
    for (auto c : coords) names.push_back(L.names()[c]);
    return {Algebra<F>::create(f, m, std::move(names), std::move(table), Checked::no), std::move(proj), coords};
}

template <ExactField F>
Subspace<F> preimage(const Quotient<F>& q, const Subspace<F>& I, const Subspace<F>& image) {
    const F& f = I.field();
    std::vector<Vector<F>> gens = I.basis();
    for (const auto& v : image.basis()) {
        Vector<F> x = zero_vector(f, I.ambient());
        for (std::size_t a = 0; a < q.coordinates.size(); ++a) x[q.coordinates[a]] = v[a];
        gens.push_back(std::move(x));
    }
    return Subspace<F>::span(f, I.ambient(), std::move(gens));
}

template <ExactField F>
Algebra<F> direct_sum(const Algebra<F>& a, const Algebra<F>& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "direct sum needs a common field");
    const F& f = a.field();
    const std::size_t n1 = a.dim(), n = a.dim() + b.dim();
    std::vector<Vector<F>> table(n * n, zero_vector(f, n));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            std::copy(a.product(i, j).begin(), a.product(i, j).end(), table[i * n + j].begin());
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            std::copy(b.product(i, j).begin(), b.product(i, j).end(), table[(n1 + i) * n + n1 + j].begin() + n1);
    std::vector<std::string> names = a.names();
    for (std::string name : b.names()) {
        while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
        names.push_back(std::move(name));
    }
    return Algebra<F>::create(f, n, std::move(names), std::move(table), Checked::no);
}

template <ExactField F>
Restriction<F> restrict_to(const Algebra<F>& L, const Subspace<F>& S) {
    if (!is_subalgebra(L, S)) throw Error(ErrorKind::DimensionMismatch, "restriction needs a subalgebra");
    const std::size_t d = S.dim();
    std::vector<Vector<F>> table;
    table.reserve(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) table.push_back(S.coordinates(L.multiply(S.vector(i), S.vector(j))));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) {
        std::string name = "s" + std::to_string(i + 1);
        for (std::size_t c = 0; c < L.dim(); ++c)
            if (S.vector(i) == L.basis_vector(c)) name = L.names()[c];
        names.push_back(std::move(name));
    }
    return {Algebra<F>::create(L.field(), d, std::move(names), std::move(table), Checked::no), S.embedding()};
}

#define LEIBNIZ_INSTANTIATE_ALGEBRA(F)                                                          \
    template class Algebra<F>;                                                                  \
    template std::optional<Violation<F>> verify_leibniz(const Algebra<F>&);                     \
    template Matrix<F> mult_operator(const Algebra<F>&, const Vector<F>&, Side);                \
    template Subspace<F> product_space(const Algebra<F>&, const Subspace<F>&, const Subspace<F>&); \
    template bool is_subalgebra(const Algebra<F>&, const Subspace<F>&);                         \
    template bool is_left_ideal(const Algebra<F>&, const Subspace<F>&);                         \
    template bool is_right_ideal(const Algebra<F>&, const Subspace<F>&);                        \
    template bool is_abelian(const Algebra<F>&, const Subspace<F>&);                            \
    template bool is_nilpotent_sub(const Algebra<F>&, const Subspace<F>&);                      \
    template bool is_solvable_sub(const Algebra<F>&, const Subspace<F>&);                       \
    template SubHandle<F> make_handle(const Algebra<F>&, Subspace<F>);                          \
    template SubHandle<F> leib_kernel(const Algebra<F>&);                                       \
    template SubHandle<F> centre(const Algebra<F>&);                                            \
    template SubHandle<F> centralizer(const Algebra<F>&, const Subspace<F>&);                   \
    template SubHandle<F> normalizer(const Algebra<F>&, const Subspace<F>&);                    \
    template SubHandle<F> subalgebra_closure(const Algebra<F>&, const std::vector<Vector<F>>&); \
    template SubHandle<F> ideal_closure(const Algebra<F>&, const std::vector<Vector<F>>&);      \
    template Quotient<F> quotient(const Algebra<F>&, const Subspace<F>&);                       \
    template Subspace<F> preimage(const Quotient<F>&, const Subspace<F>&, const Subspace<F>&);  \
    template Algebra<F> direct_sum(const Algebra<F>&, const Algebra<F>&);                       \
    template Restriction<F> restrict_to(const Algebra<F>&, const Subspace<F>&);

LEIBNIZ_INSTANTIATE_ALGEBRA(Rationals)
LEIBNIZ_INSTANTIATE_ALGEBRA(GaloisField)

} // namespace leibniz

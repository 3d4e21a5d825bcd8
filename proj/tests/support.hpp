#pragma once

// Generators for property tests and a naive oracle over prime fields.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "leibniz/corpus.hpp"

namespace testing_support {

using namespace leibniz;

template <ExactField F>
typename F::value_type random_scalar(const F& f, std::mt19937_64& rng) {
    if constexpr (std::is_same_v<F, GaloisField>) {
        return std::uniform_int_distribution<std::uint32_t>(0, std::uint32_t(f.order() - 1))(rng);
    } else {
        return f.from_int(std::uniform_int_distribution<long>(-3, 3)(rng));
    }
}

template <ExactField F>
Vector<F> random_vector(const F& f, std::size_t n, std::mt19937_64& rng) {
    Vector<F> v(n, f.zero());
    for (auto& c : v) c = random_scalar(f, rng);
    return v;
}

template <ExactField F>
Matrix<F> random_matrix(const F& f, std::size_t n, std::mt19937_64& rng) {
    Matrix<F> m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = random_scalar(f, rng);
    return m;
}

template <ExactField F>
Matrix<F> random_invertible(const F& f, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix<F> m = random_matrix(f, n, rng);
        if (!f.is_zero(determinant(m))) return m;
    }
}

/// Structure constants in the basis e'_i = Σ_k P(k, i) e_k.
template <ExactField F>
Algebra<F> change_basis(const Algebra<F>& L, const Matrix<F>& P) {
    const F& f = L.field();
    const std::size_t n = L.dim();
    std::vector<Vector<F>> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(P.column(i));
    std::vector<Vector<F>> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table.push_back(solve(P, L.multiply(cols[i], cols[j])));
    return Algebra<F>::create(f, n, L.names(), std::move(table), Checked::no);
}

/// V ⋊ Fx with [v, x] = M v, [x, x] = w and every other product of basis elements zero.
/// Leibniz for every M and w. The last basis vector is x.
template <ExactField F>
Algebra<F> right_extension(const Matrix<F>& M, const Vector<F>& w) {
    const F& f = M.field();
    const std::size_t m = M.rows(), n = m + 1;
    std::vector<Vector<F>> table(n * n, zero_vector(f, n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < m; ++r) table[j * n + m][r] = M(r, j);
    for (std::size_t r = 0; r < m; ++r) table[m * n + m][r] = w[r];
    return Algebra<F>::create(f, n, {}, std::move(table));
}

/// Lie semidirect product: [v, x] = M v, [x, v] = −M v.
template <ExactField F>
Algebra<F> lie_extension(const Matrix<F>& M) {
    const F& f = M.field();
    const std::size_t m = M.rows(), n = m + 1;
    std::vector<Vector<F>> table(n * n, zero_vector(f, n));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < m; ++r) {
            table[j * n + m][r] = M(r, j);
            table[m * n + j][r] = f.neg(M(r, j));
        }
    return Algebra<F>::create(f, n, {}, std::move(table));
}

/// A solvable A-algebra: V ⋊ Fx with M invertible, so L² = V and R_x acts invertibly on it.
template <ExactField F>
Algebra<F> random_invertible_extension(const F& f, std::size_t m, std::mt19937_64& rng) {
    return right_extension(random_invertible(f, m, rng), random_vector(f, m, rng));
}

/// A mixture of extensions, sums and basis changes; every result is Leibniz.
template <ExactField F>
Algebra<F> random_algebra(const F& f, std::size_t max_dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<std::size_t> size(1, max_dim - 1);
    const std::size_t m = size(rng);
    Algebra<F> L = [&]() -> Algebra<F> {
        switch (kind(rng)) {
        case 0: return right_extension(random_matrix(f, m, rng), random_vector(f, m, rng));
        case 1: return lie_extension(random_matrix(f, m, rng));
        case 2: return random_invertible_extension(f, m, rng);
        case 3: {
            const auto& names = fixture_names();
            const auto& a = names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)];
            return fixture(a, f);
        }
        default: {
            Algebra<F> A = right_extension(random_matrix(f, 1, rng), random_vector(f, 1, rng));
            if (m + 2 <= max_dim) return direct_sum(A, right_extension(random_matrix(f, m, rng), random_vector(f, m, rng)));
            return A;
        }
        }
    }();
    return change_basis(L, random_invertible(f, L.dim(), rng));
}

// ------------------------------------------------------------------ oracle

/// Brute-force algebra over a prime field: vectors are integer codes, subspaces are
/// sorted code lists. Independent of the library's echelon machinery.
class Oracle {
public:
    using Set = std::vector<std::uint32_t>;

    explicit Oracle(const Algebra<GaloisField>& L) : p_(L.field().p()), n_(L.dim()) {
        size_ = 1;
        for (std::size_t i = 0; i < n_; ++i) size_ *= p_;
        prod_.assign(std::size_t(size_) * size_, 0);
        for (std::uint32_t a = 0; a < size_; ++a)
            for (std::uint32_t b = 0; b < size_; ++b) prod_[std::size_t(a) * size_ + b] = encode(L.multiply(decode(a), decode(b)));
        build_subspaces();
    }

    std::uint32_t size() const { return size_; }
    std::vector<std::uint32_t> decode(std::uint32_t code) const {
        std::vector<std::uint32_t> v(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            v[i] = code % p_;
            code /= p_;
        }
        return v;
    }
    std::uint32_t encode(const std::vector<std::uint32_t>& v) const {
        std::uint32_t code = 0;
        for (std::size_t i = n_; i-- > 0;) code = code * p_ + v[i];
        return code;
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        auto u = decode(a), v = decode(b);
        for (std::size_t i = 0; i < n_; ++i) u[i] = (u[i] + v[i]) % p_;
        return encode(u);
    }
    std::uint32_t times(std::uint32_t c, std::uint32_t a) const {
        auto u = decode(a);
        for (auto& x : u) x = x * c % p_;
        return encode(u);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return prod_[std::size_t(a) * size_ + b]; }

    Set span(const Set& generators) const {
        std::set<std::uint32_t> s{0};
        for (auto g : generators) {
            if (s.count(g)) continue;
            std::set<std::uint32_t> next;
            for (auto x : s)
                for (std::uint32_t c = 0; c < p_; ++c) next.insert(add(x, times(c, g)));
            s = std::move(next);
        }
        return Set(s.begin(), s.end());
    }
    Set from(const Subspace<GaloisField>& U) const {
        Set gens;
        for (const auto& v : U.basis()) gens.push_back(encode(std::vector<std::uint32_t>(v.begin(), v.end())));
        return span(gens);
    }
    static bool contains(const Set& s, std::uint32_t x) { return std::binary_search(s.begin(), s.end(), x); }
    static bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
    Set products(const Set& U, const Set& V) const {
        Set gens;
        for (auto u : U)
            for (auto v : V) gens.push_back(mul(u, v));
        return span(gens);
    }
    Set everything() const {
        Set s(size_);
        for (std::uint32_t i = 0; i < size_; ++i) s[i] = i;
        return s;
    }
    Set meet(const Set& a, const Set& b) const {
        Set out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }
    Set join(const Set& a, const Set& b) const {
        Set g = a;
        g.insert(g.end(), b.begin(), b.end());
        return span(g);
    }

    bool is_subalgebra(const Set& U) const { return subset(products(U, U), U); }
    bool is_ideal(const Set& U) const {
        const Set all = everything();
        return subset(products(U, all), U) && subset(products(all, U), U);
    }
    bool is_abelian(const Set& U) const { return products(U, U).size() == 1; }
    bool is_nilpotent(const Set& U) const {
        Set X = U;
        for (std::size_t k = 0; k <= n_ + 1; ++k) {
            if (X.size() == 1) return true;
            X = products(X, U);
        }
        return X.size() == 1;
    }
    Set normalizer(const Set& U) const {
        Set out;
        for (std::uint32_t x = 0; x < size_; ++x) {
            bool ok = true;
            for (auto u : U)
                if (!contains(U, mul(x, u)) || !contains(U, mul(u, x))) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(x);
        }
        return out;
    }
    Set centre() const {
        Set out;
        for (std::uint32_t x = 0; x < size_; ++x) {
            bool ok = true;
            for (std::uint32_t y = 0; y < size_ && ok; ++y) ok = mul(x, y) == 0 && mul(y, x) == 0;
            if (ok) out.push_back(x);
        }
        return out;
    }

    const std::vector<Set>& subspaces() const { return subspaces_; }
    std::vector<Set> subalgebras() const { return filter([&](const Set& s) { return is_subalgebra(s); }); }
    std::vector<Set> ideals() const { return filter([&](const Set& s) { return is_ideal(s); }); }

    bool is_a_algebra() const {
        for (const auto& S : subalgebras())
            if (is_nilpotent(S) && !is_abelian(S)) return false;
        return true;
    }
    std::vector<Set> minimal_ideals() const {
        std::vector<Set> out;
        const auto ids = ideals();
        for (const auto& I : ids) {
            if (I.size() == 1) continue;
            bool minimal = true;
            for (const auto& J : ids)
                if (J.size() > 1 && J.size() < I.size() && subset(J, I)) minimal = false;
            if (minimal) out.push_back(I);
        }
        return out;
    }
    Set frattini() const {
        const auto subs = subalgebras();
        Set inter = everything();
        for (const auto& M : subs) {
            if (M.size() == size_) continue;
            bool maximal = true;
            for (const auto& K : subs)
                if (K.size() > M.size() && K.size() < size_ && subset(M, K)) maximal = false;
            if (maximal) inter = meet(inter, M);
        }
        Set phi{0};
        for (const auto& I : ideals())
            if (subset(I, inter)) phi = join(phi, I);
        return phi;
    }
    Set nilradical() const {
        Set N{0};
        for (const auto& I : ideals())
            if (is_nilpotent(I)) N = join(N, I);
        return N;
    }
    std::vector<Set> maximal_nilpotent() const {
        std::vector<Set> nil;
        for (const auto& S : subalgebras())
            if (is_nilpotent(S)) nil.push_back(S);
        std::vector<Set> out;
        for (const auto& S : nil) {
            bool maximal = true;
            for (const auto& T : nil)
                if (T.size() > S.size() && subset(S, T)) maximal = false;
            if (maximal) out.push_back(S);
        }
        return out;
    }
    std::vector<Set> cartans() const {
        std::vector<Set> out;
        for (const auto& S : subalgebras())
            if (is_nilpotent(S) && normalizer(S) == S) out.push_back(S);
        return out;
    }

private:
    template <class Pred>
    std::vector<Set> filter(Pred pred) const {
        std::vector<Set> out;
        for (const auto& s : subspaces_)
            if (pred(s)) out.push_back(s);
        return out;
    }
    void build_subspaces() {
        std::set<Set> seen{Set{0}};
        std::vector<Set> frontier{Set{0}};
        while (!frontier.empty()) {
            std::vector<Set> next;
            for (const auto& S : frontier)
                for (std::uint32_t v = 1; v < size_; ++v) {
                    if (contains(S, v)) continue;
                    Set gens = S;
                    gens.push_back(v);
                    Set T = span(gens);
                    if (seen.insert(T).second) next.push_back(std::move(T));
                }
            frontier = std::move(next);
        }
        subspaces_.assign(seen.begin(), seen.end());
    }

    std::uint32_t p_;
    std::size_t n_;
    std::uint32_t size_;
    std::vector<std::uint32_t> prod_;
    std::vector<Set> subspaces_;
};

/// Sorted list of oracle sets for comparing families of subspaces.
inline std::vector<Oracle::Set> sorted_sets(std::vector<Oracle::Set> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<Oracle::Set> as_sets(const Oracle& o, const std::vector<Subspace<GaloisField>>& v) {
    std::vector<Oracle::Set> out;
    for (const auto& s : v) out.push_back(o.from(s));
    return sorted_sets(out);
}

/// Prime-field corpus members small enough for the oracle (at most 81 vectors).
inline std::vector<std::pair<std::string, Algebra<GaloisField>>> oracle_corpus() {
    CorpusLimits limits;
    limits.fixture_fields = {"gf2", "gf3"};
    limits.max_cyclic_n = 4;
    limits.random_rational = 0;
    std::vector<std::pair<std::string, Algebra<GaloisField>>> out;
    for (auto& e : generate_corpus(limits)) {
        const auto* g = std::get_if<Algebra<GaloisField>>(&e.algebra);
        if (!g || g->field().k() != 1) continue;
        std::uint64_t size = 1;
        for (std::size_t i = 0; i < g->dim(); ++i) size *= g->field().p();
        if (size <= 81) out.emplace_back(e.name, *g);
    }
    return out;
}

} // namespace testing_support

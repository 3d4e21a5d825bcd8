#include "support.hpp"
#include "test_util.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

template <ExactField F>
void fitting_properties(const F& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        Matrix<F> T = random_matrix(f, n, rng);
        if (t % 3 == 0) T = multiply(T, multiply(T, T)); // more nilpotent parts
        const FittingPair<F> fp = fitting(T);
        CHECK(fp.null_part.dim() + fp.one_part.dim() == n);
        CHECK(independent(fp.null_part, fp.one_part));
        CHECK(fp.null_part.contains(map_subspace(T, fp.null_part)));
        CHECK(fp.one_part.contains(map_subspace(T, fp.one_part)));
        if (!fp.null_part.is_zero()) CHECK(is_nilpotent(restrict_operator(T, fp.null_part)));
        if (!fp.one_part.is_zero()) CHECK(!f.is_zero(determinant(restrict_operator(T, fp.one_part))));
    }
}

template <ExactField F>
void check_triangular(const Algebra<F>& L, const TriangularDecomposition<F>& D) {
    const std::size_t n = D.components.size() - 1;
    const auto derived = series(L, SeriesKind::derived);
    REQUIRE(D.derived.size() == n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        CHECK(D.derived[i] == derived.terms[i]);
        CHECK(is_subalgebra(L, D.components[i]));
        CHECK(is_abelian(L, D.components[i]));
        Subspace<F> acc = L.zero();
        std::size_t dims = 0;
        for (std::size_t j = i; j <= n; ++j) {
            acc = sum(acc, D.components[j]);
            dims += D.components[j].dim();
        }
        CHECK(acc == D.derived[i]);
        CHECK(dims == D.derived[i].dim());
    }
}

template <ExactField F>
void decompositions_of_a_algebras(const F& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 20; ++t) {
        const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        Algebra<F> L = random_invertible_extension(f, m, rng);
        if (t % 2 == 0 && L.dim() <= 3) L = direct_sum(L, random_invertible_extension(f, 1, rng));
        L = change_basis(L, random_invertible(f, L.dim(), rng));
        const Subspace<F> C = cartan_subalgebra(L, SearchOptions{std::uint64_t(t), 100000, 64});
        CHECK(is_cartan(L, C));
        CHECK(fitting_family(L, C).null_part == C);
        const auto D = triangular_decomposition(L);
        check_triangular(L, D);
        const auto square = product_space(L, L.whole(), L.whole());
        CHECK(independent(square, C));
        CHECK(square.dim() + C.dim() == L.dim());
    }
}

} // namespace

TEST_CASE("Fitting decomposition of single operators") {
    fitting_properties(GaloisField(2), 1);
    fitting_properties(GaloisField(3, 2), 2);
    fitting_properties(Rationals(), 3);
    CHECK(error_kind([] { fitting(Matrix<Rationals>(Rationals(), 2, 3)); }) == "ShapeMismatch");
}

TEST_CASE("Cartan subalgebras and triangular decompositions of invertible extensions") {
    decompositions_of_a_algebras(GaloisField(3), 11);
    decompositions_of_a_algebras(GaloisField(2, 2), 12);
    decompositions_of_a_algebras(Rationals(), 13);
}

TEST_CASE("triangular decomposition needs a solvable algebra") {
    CHECK(error_kind([] { triangular_decomposition(fixture("sl2", Rationals())); }) == "NotSolvable");
    CHECK(error_kind([] { cartan_subalgebra(fixture("sl2", GaloisField(3))); }) == "NotSolvable");
}

TEST_CASE("ideals split over the components") {
    const GaloisField f(3);
    for (const char* a : {"r2", "C2", "C3b"})
        for (const char* b : {"A2", "C2", "C3b"}) {
            const auto L = direct_sum(fixture(a, f), fixture(b, f));
            const auto D = triangular_decomposition(L);
            for (const auto& K : build_lattice(L).ideals) {
                const auto parts = ideal_decomposition(L, K, D);
                Subspace<GaloisField> acc = L.zero();
                std::size_t dims = 0;
                for (const auto& p : parts) {
                    acc = sum(acc, p);
                    dims += p.dim();
                }
                CHECK(acc == K);
                CHECK(dims == K.dim());
            }
        }
}

TEST_CASE("Cartan subalgebras of completely solvable A-algebras are the complements of the square") {
    std::mt19937_64 rng(21);
    const GaloisField f(3);
    for (int t = 0; t < 10; ++t) {
        const auto L = random_invertible_extension(f, std::uniform_int_distribution<std::size_t>(1, 2)(rng), rng);
        const auto lattice = build_lattice(L);
        const auto square = product_space(L, L.whole(), L.whole());
        auto a = cartan_subalgebras(L, lattice), b = complements(L, square, lattice);
        auto less = [](const auto& x, const auto& y) { return canonical_less(x, y); };
        std::sort(a.begin(), a.end(), less);
        std::sort(b.begin(), b.end(), less);
        CHECK(a == b);
    }
}

TEST_CASE("sampled search elements are nonzero, deterministic and inside the subspace") {
    const GaloisField f(3);
    const auto K = Subspace<GaloisField>::span(f, 4, {{1, 0, 1, 0}, {0, 1, 0, 2}});
    const auto a = sample_elements(K, SearchOptions{5, 1000, 8});
    CHECK(a == sample_elements(K, SearchOptions{5, 1000, 8}));
    for (const auto& v : a) {
        CHECK(K.contains(v));
        CHECK(!is_zero_vector(f, v));
    }
    const auto r = sample_elements(Subspace<Rationals>::full(Rationals(), 3), SearchOptions{5, 1000, 8});
    CHECK(r == sample_elements(Subspace<Rationals>::full(Rationals(), 3), SearchOptions{5, 1000, 8}));
}

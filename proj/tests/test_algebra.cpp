#include "leibniz/decompose.hpp"
#include "support.hpp"
#include "test_util.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

template <ExactField F>
Matrix<F> commutator_rhs(const Matrix<F>& Rx, const Matrix<F>& Ry) {
    const Matrix<F> a = multiply(Ry, Rx), b = multiply(Rx, Ry);
    Matrix<F> out(Rx.field(), Rx.rows(), Rx.cols());
    for (std::size_t r = 0; r < Rx.rows(); ++r)
        for (std::size_t c = 0; c < Rx.cols(); ++c) out(r, c) = Rx.field().sub(a(r, c), b(r, c));
    return out;
}

template <ExactField F>
void right_multiplications_are_derivations(const F& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 30; ++t) {
        const Algebra<F> L = random_algebra(f, 5, rng);
        REQUIRE(!verify_leibniz(L));
        const auto x = random_vector(f, L.dim(), rng), y = random_vector(f, L.dim(), rng);
        const auto Rx = mult_operator(L, x, Side::right), Ry = mult_operator(L, y, Side::right);
        CHECK(mult_operator(L, L.multiply(x, y), Side::right) == commutator_rhs(Rx, Ry));
    }
}

template <ExactField F>
void leibniz_kernel_properties(const F& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 30; ++t) {
        const Algebra<F> L = random_algebra(f, 5, rng);
        const auto K = leib_kernel(L);
        CHECK(K.is_ideal);
        CHECK(product_space(L, L.whole(), K.carrier).is_zero());
        const auto x = random_vector(f, L.dim(), rng);
        CHECK(K.carrier.contains(L.multiply(x, x)));
        const Algebra<F> Q = quotient(L, K.carrier).algebra;
        for (std::size_t i = 0; i < Q.dim(); ++i)
            for (std::size_t j = 0; j < Q.dim(); ++j)
                CHECK(add(f, Q.product(i, j), Q.product(j, i)) == zero_vector(f, Q.dim()));
    }
}

template <ExactField F>
void basis_change_invariance(const F& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 20; ++t) {
        const Algebra<F> L = random_algebra(f, 4, rng);
        const Algebra<F> M = change_basis(L, random_invertible(f, L.dim(), rng));
        REQUIRE(!verify_leibniz(M));
        const Predicates a = predicates(L), b = predicates(M);
        CHECK(a.is_nilpotent == b.is_nilpotent);
        CHECK(a.is_solvable == b.is_solvable);
        CHECK(a.derived_length == b.derived_length);
        CHECK(a.nilpotency_class == b.nilpotency_class);
        CHECK(a.is_completely_solvable == b.is_completely_solvable);
        CHECK(centre(L).dim() == centre(M).dim());
        CHECK(leib_kernel(L).dim() == leib_kernel(M).dim());
        for (auto kind : {SeriesKind::derived, SeriesKind::lower_central, SeriesKind::lower_nilpotent}) {
            const auto s = series(L, kind), u = series(M, kind);
            REQUIRE(s.terms.size() == u.terms.size());
            for (std::size_t i = 0; i < s.terms.size(); ++i) CHECK(s.terms[i].dim() == u.terms[i].dim());
        }
        if constexpr (std::is_same_v<F, GaloisField>) {
            const auto la = build_lattice(L), lb = build_lattice(M);
            CHECK(la.subalgebras.size() == lb.subalgebras.size());
            CHECK(la.ideals.size() == lb.ideals.size());
            CHECK(is_a_algebra(L).value == is_a_algebra(M).value);
        }
    }
}

} // namespace

TEST_CASE("fixtures satisfy the identity over every field") {
    for (const char* tag : {"q", "gf2", "gf3", "gf4", "gf5", "gf9"})
        for (const auto& name : fixture_names()) {
            CAPTURE(tag);
            CAPTURE(name);
            std::visit([](const auto& L) { CHECK(!verify_leibniz(L)); }, fixture(name, parse_field(tag)));
        }
}

TEST_CASE("a perturbed Heisenberg table is rejected with its violating triple") {
    const GaloisField f(2);
    const Algebra<GaloisField> H = fixture("H3", f);
    auto table = H.table();
    table[2 * 3 + 0] = {1, 0, 0}; // [z, x] = x
    const auto bad = Algebra<GaloisField>::create(f, 3, H.names(), table, Checked::no);
    const auto v = verify_leibniz(bad);
    REQUIRE(v);
    const auto b = [&](std::size_t i) { return bad.basis_vector(i); };
    CHECK(v->lhs == bad.multiply(b(v->i), bad.multiply(b(v->j), b(v->k))));
    CHECK(v->rhs == sub(f, bad.multiply(bad.multiply(b(v->i), b(v->j)), b(v->k)),
                        bad.multiply(bad.multiply(b(v->i), b(v->k)), b(v->j))));
    CHECK(v->lhs != v->rhs);
    CHECK(error_kind([&] { Algebra<GaloisField>::create(f, 3, H.names(), table); }) == "NotLeibniz");
}

TEST_CASE("right multiplications are derivations") {
    right_multiplications_are_derivations(GaloisField(3), 11);
    right_multiplications_are_derivations(GaloisField(2, 2), 12);
    right_multiplications_are_derivations(Rationals(), 13);
}

TEST_CASE("the Leibniz kernel is an ideal annihilated on the right with Lie quotient") {
    leibniz_kernel_properties(GaloisField(2), 21);
    leibniz_kernel_properties(GaloisField(5), 22);
    leibniz_kernel_properties(Rationals(), 23);
}

TEST_CASE("invariants survive a change of basis") {
    basis_change_invariance(GaloisField(2), 31);
    basis_change_invariance(GaloisField(3), 32);
    basis_change_invariance(Rationals(), 33);
}

TEST_CASE("Heisenberg, r2 and sl2 over Q") {
    const Rationals Q;
    const auto H = fixture("H3", Q);
    CHECK(centre(H).carrier == Subspace<Rationals>::span(Q, 3, {{0, 0, 1}}));
    const auto d = series(H, SeriesKind::derived);
    CHECK(d.terms.size() == 3);
    CHECK(d.terms[1].dim() == 1);
    CHECK(predicates(H).nilpotency_class == 2);
    CHECK(!predicates(H).is_abelian);

    const auto r2 = fixture("r2", Q);
    const auto lc = series(r2, SeriesKind::lower_central);
    CHECK(!lc.reaches_zero);
    CHECK(lc.terms.back() == Subspace<Rationals>::span(Q, 2, {{1, 0}}));
    CHECK(nilradical(r2).subspace == Subspace<Rationals>::span(Q, 2, {{1, 0}}));
    CHECK(nilradical(r2).status == RadicalStatus::exact);
    CHECK(predicates(r2).is_solvable);
    CHECK(!predicates(r2).is_nilpotent);

    const auto sl2 = fixture("sl2", Q);
    const auto ds = series(sl2, SeriesKind::derived);
    CHECK(!ds.reaches_zero);
    CHECK(ds.terms.back().is_full());
    CHECK(error_kind([&] { radical(sl2); }) == "InfiniteFieldUnsupported");
    CHECK(radical(fixture("sl2", GaloisField(5))).subspace.is_zero());
    CHECK(centre(sl2).carrier.is_zero());
}

TEST_CASE("quotient maps are homomorphisms") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 25; ++t) {
        const GaloisField f(3);
        const Algebra<GaloisField> L = random_algebra(f, 4, rng);
        const auto lattice = build_lattice(L);
        const auto& I = lattice.ideals[std::uniform_int_distribution<std::size_t>(0, lattice.ideals.size() - 1)(rng)];
        const Quotient<GaloisField> q = quotient(L, I);
        CHECK(!verify_leibniz(q.algebra));
        CHECK(q.algebra.dim() == L.dim() - I.dim());
        const auto u = random_vector(f, L.dim(), rng), v = random_vector(f, L.dim(), rng);
        CHECK(mat_vec(q.projection, L.multiply(u, v)) ==
              q.algebra.multiply(mat_vec(q.projection, u), mat_vec(q.projection, v)));
        CHECK(preimage(q, I, q.algebra.zero()) == I);
        CHECK(preimage(q, I, q.algebra.whole()).is_full());
    }
    const GaloisField f(2);
    const auto H = fixture("H3", f);
    CHECK(error_kind([&] { quotient(H, Subspace<GaloisField>::span(f, 3, {{1, 0, 0}})); }) == "NotAnIdeal");
}

TEST_CASE("series terms are nested and the lower nilpotent series sits inside the derived series") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 40; ++t) {
        const Algebra<Rationals> L = random_algebra(Rationals(), 5, rng);
        for (auto kind : {SeriesKind::derived, SeriesKind::lower_central, SeriesKind::lower_nilpotent}) {
            const auto s = series(L, kind);
            for (std::size_t i = 1; i < s.terms.size(); ++i) {
                CHECK(s.terms[i - 1].contains(s.terms[i]));
                CHECK(is_ideal(L, s.terms[i]));
            }
        }
        const auto d = series(L, SeriesKind::derived), n = series(L, SeriesKind::lower_nilpotent);
        for (std::size_t i = 0; i < std::min(d.terms.size(), n.terms.size()); ++i) CHECK(d.terms[i].contains(n.terms[i]));
        const auto up = upper_central_series(L);
        for (std::size_t i = 0; i < up.size(); ++i) {
            CHECK(is_ideal(L, up[i]));
            if (i > 0) CHECK(up[i].contains(up[i - 1]));
        }
    }
}

TEST_CASE("lattice, socle, Frattini ideal and nilradical agree with brute force") {
    const auto corpus = oracle_corpus();
    REQUIRE(corpus.size() > 50);
    for (const auto& [name, L] : corpus) {
        CAPTURE(name);
        const Oracle o(L);
        const auto lattice = build_lattice(L);
        CHECK(as_sets(o, lattice.subalgebras) == sorted_sets(o.subalgebras()));
        CHECK(as_sets(o, lattice.ideals) == sorted_sets(o.ideals()));
        CHECK(o.from(centre(L).carrier) == o.centre());
        CHECK(o.from(nilradical(L, lattice).subspace) == o.nilradical());
        const auto soc = socle_analysis(L, lattice);
        CHECK(as_sets(o, soc.minimal_ideals) == sorted_sets(o.minimal_ideals()));
        CHECK(soc.monolithic == (o.minimal_ideals().size() == 1));
        CHECK(o.from(frattini_ideal(L, lattice).ideal) == o.frattini());
        CHECK(as_sets(o, maximal_nilpotent_subalgebras(L, lattice)) == sorted_sets(o.maximal_nilpotent()));
        CHECK(as_sets(o, cartan_subalgebras(L, lattice)) == sorted_sets(o.cartans()));
    }
}

TEST_CASE("closures, centralizers and normalizers") {
    const GaloisField f(3);
    const auto H = fixture("H3", f);
    const auto x = H.basis_vector(0), y = H.basis_vector(1);
    CHECK(subalgebra_closure(H, {x, y}).carrier.is_full());
    CHECK(subalgebra_closure(H, {x}).dim() == 1);
    CHECK(ideal_closure(H, {x}).dim() == 2);
    const auto Zx = centralizer(H, Subspace<GaloisField>::span(f, 3, {x}));
    CHECK(Zx.carrier == Subspace<GaloisField>::span(f, 3, {x, H.basis_vector(2)}));
    CHECK(normalizer(H, Subspace<GaloisField>::span(f, 3, {x})).dim() == 2);
    const auto S = direct_sum(H, fixture("r2", f));
    CHECK(S.dim() == 5);
    CHECK(!verify_leibniz(S));
    CHECK(error_kind([&] { direct_sum(H, fixture("r2", GaloisField(5))); }) == "FieldMismatch");
}

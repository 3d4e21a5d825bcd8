#include "leibniz/cyclic.hpp"
#include "support.hpp"
#include "test_util.hpp"

using namespace leibniz;
using namespace testing_support;

namespace {

// Independent check of a refutation: the witness is a nilpotent, non-abelian subalgebra.
template <ExactField F>
void check_witness(const Algebra<F>& L, const AVerdict<F>& v) {
    REQUIRE(v.witness);
    const Subspace<F>& W = v.witness->carrier;
    CHECK(is_subalgebra(L, W));
    CHECK(!product_space(L, W, W).is_zero());
    const auto R = restrict_to(L, W);
    CHECK(predicates(R.algebra).is_nilpotent);
}

CyclicSpec<GaloisField> gf_cyclic(std::uint32_t q, std::size_t n, std::vector<std::uint32_t> alphas) {
    return {GaloisField(q), n, std::move(alphas)};
}

CyclicSpec<Rationals> q_cyclic(std::size_t n, const std::vector<std::string>& alphas) {
    const Rationals Q;
    std::vector<mpq_class> a;
    for (const auto& s : alphas) a.push_back(Q.parse(s));
    return {Q, n, std::move(a)};
}

} // namespace

TEST_CASE("exhaustive verdicts agree with brute force") {
    for (const auto& [name, L] : oracle_corpus()) {
        CAPTURE(name);
        const auto v = is_a_algebra(L);
        CHECK(v.value != Verdict::unknown);
        CHECK((v.value == Verdict::yes) == Oracle(L).is_a_algebra());
        if (v.value == Verdict::no) check_witness(L, v);
        else CHECK(!v.witness);
    }
}

TEST_CASE("random algebras over GF(2) and GF(3) against brute force") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 60; ++t) {
        const GaloisField f(t % 2 ? 3 : 2);
        const auto L = random_algebra(f, f.p() == 2 ? 5 : 4, rng);
        const auto v = is_a_algebra(L);
        CHECK((v.value == Verdict::yes) == Oracle(L).is_a_algebra());
        if (v.value == Verdict::no) check_witness(L, v);
        const auto s = shortcut_verdict(L);
        if (s.value != Verdict::unknown) CHECK(s.value == v.value);
        if (s.value == Verdict::no) check_witness(L, s);
    }
}

TEST_CASE("invertible extensions over Q are certified") {
    std::mt19937_64 rng(102);
    const Rationals Q;
    for (int t = 0; t < 20; ++t) {
        const auto L = random_invertible_extension(Q, std::uniform_int_distribution<std::size_t>(1, 3)(rng), rng);
        const auto cert = invertible_complement_certificate(L);
        CHECK(cert.certified);
        REQUIRE(cert.complement);
        CHECK(cert.complement->dim() == 1);
        const auto v = is_a_algebra(L);
        CHECK(v.value == Verdict::yes);
        CHECK(v.method == "invertible_complement");
    }
}

TEST_CASE("nilpotent non-abelian algebras are refuted with a witness") {
    const Rationals Q;
    const auto H = fixture("H3", Q);
    const auto v = is_a_algebra(H);
    CHECK(v.value == Verdict::no);
    check_witness(H, v);
    CHECK(v.to_json()["value"] == "False");

    const auto C3a = fixture("C3a", Q);
    CHECK(!invertible_complement_certificate(C3a).certified);
    const auto w = is_a_algebra(C3a);
    CHECK(w.value == Verdict::no);
    check_witness(C3a, w);

    CHECK_THROWS_AS(refuted(H, Subspace<Rationals>::span(Q, 3, {{1, 0, 0}}), "test"), std::logic_error);
    CHECK(is_a_algebra(Algebra<Rationals>::abelian(Q, 1)).value == Verdict::yes);
}

TEST_CASE("the battery has no failures on A-algebras") {
    for (const char* tag : {"q", "gf2", "gf3"})
        for (const char* name : {"A2", "r2", "C2", "C3b"}) {
            CAPTURE(tag);
            CAPTURE(name);
            std::visit(
                [](const auto& L) {
                    const Report rep = a_algebra_battery(L);
                    CHECK(!rep.has_failure());
                    CHECK(rep.data()["verdict"]["value"] == "True");
                },
                fixture(name, parse_field(tag)));
        }
    const Report h = a_algebra_battery(fixture("H3", GaloisField(3)));
    CHECK(!h.has_failure());
    for (const auto& c : h.clauses())
        if (c.status == ClauseStatus::not_applicable) CHECK(!c.reason.empty());
}

TEST_CASE("left powers sit inside right powers") {
    std::mt19937_64 rng(103);
    const GaloisField f(3);
    std::size_t tried = 0;
    for (int t = 0; t < 40; ++t) {
        const auto L = random_algebra(f, 4, rng);
        const auto lattice = build_lattice(L);
        for (const auto& A : lattice.ideals) {
            if (!is_abelian(L, A)) continue;
            for (int s = 0; s < 4; ++s) {
                const auto x = random_vector(f, L.dim(), rng);
                if (!A.contains(L.multiply(x, x))) continue;
                ++tried;
                CHECK(left_powers_inside_right_powers(L, A, x));
            }
        }
    }
    CHECK(tried > 100);
}

TEST_CASE("cyclic structure constants and companion matrix") {
    const auto spec = gf_cyclic(3, 4, {1, 2, 0});
    const auto L = build_cyclic(spec);
    CHECK(!verify_leibniz(L));
    const auto a = L.basis_vector(0);
    for (std::size_t i = 0; i + 1 < 4; ++i) CHECK(L.multiply(L.basis_vector(i), a) == L.basis_vector(i + 1));
    CHECK(L.multiply(L.basis_vector(3), a) == Vector<GaloisField>{0, 1, 2, 0});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 1; j < 4; ++j) CHECK(is_zero_vector(spec.field, L.multiply(L.basis_vector(i), L.basis_vector(j))));
    const auto p = cyclic_polynomial(spec);
    CHECK(mult_operator(L, a, Side::right) == companion_matrix(p));
    const auto b = cyclic_complement(spec);
    CHECK(is_zero_vector(spec.field, L.multiply(b, b)));

    CHECK(error_kind([] { build_cyclic(gf_cyclic(2, 1, {})); }) == "BadSpec");
    CHECK(error_kind([] { build_cyclic(gf_cyclic(2, 3, {1})); }) == "BadSpec");
}

TEST_CASE("cyclic classification over GF(2)") {
    const Report rep = classify_cyclic(gf_cyclic(2, 3, {1, 0}));
    CHECK(!rep.has_failure());
    CHECK(rep.data()["factorization"] == "x(x + 1)^2");
    CHECK(rep.data()["monolithic"] == true);
    CHECK(rep.data()["phi_free"] == false);
    CHECK(rep.data()["verdict"]["value"] == "True");

    const Report nil = classify_cyclic(gf_cyclic(2, 3, {0, 1}));
    CHECK(!nil.has_failure());
    CHECK(nil.data()["verdict"]["value"] == "False");
}

TEST_CASE("cyclic classification over Q") {
    for (const char* a2 : {"1", "2", "-3", "1/2"}) {
        CAPTURE(a2);
        const Report rep = classify_cyclic(q_cyclic(2, {a2}));
        CHECK(!rep.has_failure());
        const Clause* c = rep.find("rescaled_generator_square");
        REQUIRE(c);
        CHECK(c->status == ClauseStatus::pass);
    }
    const Report five = classify_cyclic(q_cyclic(5, {"1", "0", "0", "2"}));
    CHECK(!five.has_failure());
    CHECK(!five.data()["factorization"].is_null());
    const Report six = classify_cyclic(q_cyclic(6, {"1", "0", "0", "0", "1"})); // x(x⁵ − x⁴ − 1)
    CHECK(six.data()["factorization"].is_null());
    CHECK(six.data().contains("unsupported"));
    CHECK(!six.has_failure());
}

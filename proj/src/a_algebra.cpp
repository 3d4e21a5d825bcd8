#include "leibniz/a_algebra.hpp"

#include <random>
#include <stdexcept>
#include <type_traits>

namespace leibniz {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "True";
    case Verdict::no: return "False";
    case Verdict::unknown: return "Unknown";
    }
    return "Unknown";
}

template <ExactField F>
json AVerdict<F>::to_json() const {
    json j{{"value", to_string(value)}, {"method", method}};
    if (witness) j["witness"] = subspace_to_json(witness->carrier);
    if (!checks.empty()) j["checks"] = checks;
    return j;
}

template <ExactField F>
AVerdict<F> refuted(const Algebra<F>& L, const Subspace<F>& U, std::string method) {
    if (!is_subalgebra(L, U) || !is_nilpotent_sub(L, U) || is_abelian(L, U))
        throw std::logic_error("witness is not a nilpotent non-abelian subalgebra");
    return {Verdict::no, std::move(method), make_handle(L, U), {}};
}

template <ExactField F>
AVerdict<F> exhaustive_verdict(const Algebra<F>& L, const Lattice<F>& lattice) {
    for (const auto& S : lattice.subalgebras)
        if (!is_abelian(L, S) && is_nilpotent_sub(L, S)) return refuted(L, S, "exhaustive");
    return {Verdict::yes, "exhaustive", std::nullopt, {}};
}

template <ExactField F>
std::optional<SubHandle<F>> witness_search(const Algebra<F>& L, const SearchOptions& opts) {
    const F& f = L.field();
    const std::size_t n = L.dim();
    auto is_witness = [&](const Subspace<F>& U) {
        return U.dim() >= 2 && is_subalgebra(L, U) && !is_abelian(L, U) && is_nilpotent_sub(L, U);
    };
    std::vector<Subspace<F>> structured{L.whole(), leib_kernel(L).carrier};
    for (auto kind : {SeriesKind::derived, SeriesKind::lower_central, SeriesKind::lower_nilpotent})
        for (auto& t : series(L, kind).terms) structured.push_back(std::move(t));
    for (auto& z : upper_central_series(L)) structured.push_back(std::move(z));
    for (const auto& U : structured)
        if (is_witness(U)) return make_handle(L, U);

    for (const auto& x : sample_elements(L.whole(), opts)) {
        const Subspace<F> null = generalized_kernel(mult_operator(L, x, Side::right), n);
        if (is_witness(null)) return make_handle(L, null);
        const Subspace<F> gen = subalgebra_closure(L, {x}).carrier;
        if (is_witness(gen)) return make_handle(L, gen);
    }

    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    auto random_element = [&] {
        Vector<F> v = zero_vector(f, n);
        if constexpr (std::is_same_v<F, GaloisField>) {
            std::uniform_int_distribution<std::uint32_t> dist(0, std::uint32_t(f.order() - 1));
            for (auto& c : v) c = dist(rng);
        } else {
            std::uniform_int_distribution<int> dist(-3, 3);
            for (auto& c : v) c = f.from_int(dist(rng));
        }
        return v;
    };
    for (unsigned t = 0; t < opts.random_tries; ++t) {
        std::vector<Vector<F>> gens{random_element(), random_element()};
        if (t % 2 == 1) gens.push_back(random_element());
        const Subspace<F> U = subalgebra_closure(L, gens).carrier;
        if (is_witness(U)) return make_handle(L, U);
    }
    return std::nullopt;
}

namespace {

/// Calls visit(coefficients) for every nonzero vector of F^d; false when the field is
/// infinite or q^d exceeds the budget.
template <ExactField F>
bool for_each_nonzero(const F& f, std::size_t d, std::uint64_t budget, const std::function<bool(const Vector<F>&)>& visit) {
    if constexpr (!std::is_same_v<F, GaloisField>) {
        (void)f, (void)d, (void)budget, (void)visit;
        return false;
    } else {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) {
            total *= f.order();
            if (total > budget) return false;
        }
        Vector<F> v(d, 0);
        for (std::uint64_t t = 1; t < total; ++t) {
            for (std::size_t i = d; i-- > 0;) {
                if (++v[i] < f.order()) break;
                v[i] = 0;
            }
            if (!visit(v)) break;
        }
        return true;
    }
}

} // namespace

template <ExactField F>
ComplementCertificate<F> invertible_complement_certificate(const Algebra<F>& L, const SearchOptions& opts) {
    const Predicates pred = predicates(L);
    if (!pred.is_metabelian) return {false, "L is not metabelian", std::nullopt};
    const Subspace<F> square = product_space(L, L.whole(), L.whole());
    if (square.is_zero()) return {true, "L² = 0", L.whole()};

    std::optional<Subspace<F>> B;
    auto is_complement = [&](const Subspace<F>& S) {
        return S.dim() + square.dim() == L.dim() && independent(S, square) && is_subalgebra(L, S);
    };
    try {
        const auto tri = triangular_decomposition(L, opts);
        if (tri.components.size() == 2 && is_complement(tri.components[0])) B = tri.components[0];
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DecompositionFailed && e.kind() != ErrorKind::CartanSearchFailed) throw;
    }
    if (!B) {
        try {
            Subspace<F> C = cartan_subalgebra(L, opts);
            if (is_complement(C)) B = std::move(C);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CartanSearchFailed) throw;
        }
    }
    if (!B) return {false, "no subalgebra complement to L² found", std::nullopt};

    const F& f = L.field();
    auto singular = [&](const Vector<F>& b) {
        return f.is_zero(determinant(restrict_operator(mult_operator(L, b, Side::right), square)));
    };
    std::optional<Vector<F>> bad;
    const bool decided = for_each_nonzero<F>(f, B->dim(), opts.budget, [&](const Vector<F>& c) {
        Vector<F> b = zero_vector(f, L.dim());
        for (std::size_t i = 0; i < c.size(); ++i) axpy(f, b, c[i], B->vector(i));
        if (singular(b)) {
            bad = b;
            return false;
        }
        return true;
    });
    if (decided) {
        if (bad) return {false, "R_b is singular on L² for b = " + vector_to_json(f, *bad).dump(), B};
        return {true, "R_b invertible on L² for every nonzero b in B", B};
    }
    if (B->dim() == 1) {
        if (singular(B->vector(0))) return {false, "R_b is singular on L²", B};
        return {true, "R_b invertible on L² (dim B = 1)", B};
    }
    return {false, "undecidable-at-budget", B};
}

template <ExactField F>
AVerdict<F> shortcut_verdict(const Algebra<F>& L, const SearchOptions& opts) {
    if (L.dim() <= 1) return {Verdict::yes, "dim<=1-trivial", std::nullopt, {}};
    const Predicates pred = predicates(L);
    if (pred.is_nilpotent && !pred.is_abelian) return refuted(L, L.whole(), "nilpotent-non-abelian");
    if (auto w = witness_search(L, opts)) return refuted(L, w->carrier, "witness-search");

    std::vector<std::string> checks{"witness search: none found"};
    bool necessary_failed = false;
    const bool series_equal =
        series(L, SeriesKind::derived).terms == series(L, SeriesKind::lower_nilpotent).terms;
    checks.push_back(std::string("derived series = lower nilpotent series: ") + (series_equal ? "pass" : "fail"));
    necessary_failed |= !series_equal;
    if (pred.is_solvable) {
        const bool meet =
            intersect(centre(L).carrier, product_space(L, L.whole(), L.whole())).is_zero();
        checks.push_back(std::string("Z(L) ∩ L² = 0: ") + (meet ? "pass" : "fail"));
        necessary_failed |= !meet;
    } else {
        checks.push_back("Z(L) ∩ L² = 0: not applicable (not solvable)");
    }
    const auto cert = invertible_complement_certificate(L, opts);
    checks.push_back("invertible complement: " + cert.detail);
    if (cert.certified && !necessary_failed) return {Verdict::yes, "invertible_complement", std::nullopt, std::move(checks)};
    return {Verdict::unknown, "battery", std::nullopt, std::move(checks)};
}

template <ExactField F>
AVerdict<F> is_a_algebra(const Algebra<F>& L, const SearchOptions& opts) {
    if (L.field().is_finite()) {
        try {
            return exhaustive_verdict(L, build_lattice(L, opts.budget));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            AVerdict<F> v = shortcut_verdict(L, opts);
            v.checks.insert(v.checks.begin(), e.what());
            return v;
        }
    }
    return shortcut_verdict(L, opts);
}

template <ExactField F>
AVerdict<F> is_a_algebra(const Analysis<F>& ctx) {
    if (ctx.lattice) return exhaustive_verdict(ctx.L, *ctx.lattice);
    AVerdict<F> v = shortcut_verdict(ctx.L, ctx.opts);
    if (!ctx.lattice_note.empty()) v.checks.insert(v.checks.begin(), ctx.lattice_note);
    return v;
}

template <ExactField F>
bool left_powers_inside_right_powers(const Algebra<F>& L, const Subspace<F>& A, const Vector<F>& x) {
    const Matrix<F> Lx = mult_operator(L, x, Side::left);
    const Matrix<F> Rx = mult_operator(L, x, Side::right);
    Subspace<F> left = A, right = A; // L_x^0(A), R_x^0(A)
    for (std::size_t k = 1; k <= L.dim(); ++k) {
        left = map_subspace(Lx, left);
        if (!right.contains(left)) return false; // right = R_x^{k-1}(A)
        right = map_subspace(Rx, right);
    }
    return true;
}

namespace {

template <ExactField F>
json predicates_json(const Predicates& p) {
    json j{{"is_nilpotent", p.is_nilpotent},
           {"is_solvable", p.is_solvable},
           {"is_completely_solvable", p.is_completely_solvable},
           {"is_metabelian", p.is_metabelian},
           {"is_abelian", p.is_abelian}};
    j["nilpotency_class"] = p.nilpotency_class ? json(*p.nilpotency_class) : json();
    j["derived_length"] = p.derived_length ? json(*p.derived_length) : json();
    return j;
}

template <ExactField F>
json table_json(const Algebra<F>& L) {
    json t = json::array();
    for (std::size_t i = 0; i < L.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < L.dim(); ++j) row.push_back(vector_to_json(L.field(), L.product(i, j)));
        t.push_back(std::move(row));
    }
    return json{{"field", L.field().name()}, {"dim", L.dim()}, {"table", t}};
}

/// Ideals available without enumeration: series terms, centre, Leib(L).
template <ExactField F>
std::vector<Subspace<F>> known_ideals(const Algebra<F>& L) {
    std::vector<Subspace<F>> cands{L.zero(), L.whole(), centre(L).carrier, leib_kernel(L).carrier};
    for (auto kind : {SeriesKind::derived, SeriesKind::lower_central})
        for (auto& t : series(L, kind).terms) cands.push_back(std::move(t));
    for (auto& z : upper_central_series(L)) cands.push_back(std::move(z));
    std::vector<Subspace<F>> out;
    for (auto& c : cands) {
        if (!is_ideal(L, c)) continue;
        bool dup = false;
        for (const auto& o : out) dup = dup || o == c;
        if (!dup) out.push_back(std::move(c));
    }
    return out;
}

} // namespace

template <ExactField F>
Report a_algebra_battery(const Algebra<F>& L, const SearchOptions& opts) {
    Report rep("battery");
    const Analysis<F> ctx = Analysis<F>::build(L, opts);
    const AVerdict<F> v = is_a_algebra(ctx);
    const bool finite = ctx.lattice.has_value();
    rep.data()["verdict"] = v.to_json();
    rep.data()["predicates"] = predicates_json<F>(ctx.pred);

    const auto violation = verify_leibniz(L);
    rep.check("leibniz_identity", "[x,[y,z]] = [[x,y],z] − [[x,z],y]", !violation, "identity fails on a basis triple");

    const auto cert = invertible_complement_certificate(L, opts);
    rep.data()["invertible_complement"] = cert.detail;
    rep.check("invertible_complement_implies_a", "L = L² ∔ B metabelian, R_b invertible on L² ⟹ A-algebra",
              !cert.certified || v.value != Verdict::no, "certificate holds but a witness exists",
              v.witness ? json{{"witness", subspace_to_json(v.witness->carrier)}} : json::object());
    if (finite) {
        const AVerdict<F> s = shortcut_verdict(L, opts);
        rep.data()["shortcut_verdict"] = s.to_json();
        rep.check("shortcut_agrees_with_enumeration", "shortcut verdict ∈ {Unknown, exhaustive verdict}",
                  s.value == Verdict::unknown || s.value == v.value, "shortcut contradicts enumeration");
    }

    const bool a = v.value == Verdict::yes;
    rep.merge(structure_report(ctx, a));
    rep.merge(max_nilpotent_analysis(ctx, a));
    if (!a) {
        rep.skip("a_only_clauses", "L is an A-algebra", "verdict is " + to_string(v.value));
        return rep;
    }

    const auto lower_nil = series(L, SeriesKind::lower_nilpotent);
    rep.check("lower_nilpotent_equals_derived", "N_i(L) = L^(i) for every i", lower_nil.terms == ctx.derived.terms,
              "series differ");

    if (ctx.pred.is_solvable) {
        const std::size_t len = *ctx.pred.derived_length;
        const std::string stmt = "derived length of a solvable A-algebra ≤ 3";
        if (len >= 4)
            rep.finding("derived_length_at_most_three", stmt, "derived length " + std::to_string(len),
                        {{"algebra", table_json(L)}});
        else
            rep.check("derived_length_at_most_three", stmt, true);
        if (!L.field().is_finite())
            rep.check("char0_solvable_metabelian", "solvable A-algebra in characteristic 0 has derived length ≤ 2",
                      len <= 2, "derived length " + std::to_string(len), {{"algebra", table_json(L)}});
        if (ctx.pred.is_completely_solvable)
            rep.check("completely_solvable_metabelian", "L² nilpotent ⟹ derived length ≤ 2", len <= 2,
                      "derived length " + std::to_string(len));
    }

    check_derived_quotient_cartans(ctx, rep);

    const std::vector<Subspace<F>> ideals = finite ? ctx.lattice->ideals : known_ideals(L);
    rep.data()["ideals_checked"] = ideals.size();

    if (ctx.triangular) {
        bool ok = true;
        json wit = json::object();
        for (const auto& K : ideals) {
            try {
                ideal_decomposition(L, K, *ctx.triangular);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DecompositionFailed) throw;
                ok = false;
                wit = {{"K", subspace_to_json(K)}};
                break;
            }
        }
        rep.check("ideal_splits_over_components", "K = (K ∩ A_n) ∔ … ∔ (K ∩ A_0) for every ideal K", ok,
                  "an ideal does not split", wit);
    }

    // Quotients L/K: exhaustive verdicts over finite fields, shortcut verdicts over Q.
    std::vector<Verdict> quotient_verdict(ideals.size(), Verdict::unknown);
    {
        bool ok = true;
        json wit = json::object();
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            if (ideals[i].is_zero()) {
                quotient_verdict[i] = v.value;
                continue;
            }
            const Algebra<F> Q = quotient(L, ideals[i]).algebra;
            const AVerdict<F> qv = finite ? is_a_algebra(Q, opts) : shortcut_verdict(Q, opts);
            quotient_verdict[i] = qv.value;
            const bool bad = finite ? qv.value != Verdict::yes : qv.value == Verdict::no;
            if (bad && ok) {
                ok = false;
                wit = {{"ideal", subspace_to_json(ideals[i])}, {"quotient_verdict", qv.to_json()}};
            }
        }
        rep.check("quotients_are_a", "L/K is an A-algebra for every ideal K", ok, "a quotient is not an A-algebra",
                  wit);
    }

    if (!finite) {
        rep.skip("intersection_quotient_is_a", "L/B, L/C A-algebras ⟹ L/(B ∩ C) A-algebra", ctx.lattice_note);
        return rep;
    }

    {
        bool ok = true;
        json wit = json::object();
        for (std::size_t i = 0; i < ideals.size() && ok; ++i) {
            if (quotient_verdict[i] != Verdict::yes) continue;
            for (std::size_t j = i + 1; j < ideals.size() && ok; ++j) {
                if (quotient_verdict[j] != Verdict::yes) continue;
                const Subspace<F> I = intersect(ideals[i], ideals[j]);
                for (std::size_t k = 0; k < ideals.size(); ++k)
                    if (ideals[k] == I && quotient_verdict[k] != Verdict::yes) {
                        ok = false;
                        wit = {{"B", subspace_to_json(ideals[i])}, {"C", subspace_to_json(ideals[j])}};
                    }
            }
        }
        rep.check("intersection_quotient_is_a", "L/B, L/C A-algebras ⟹ L/(B ∩ C) A-algebra", ok, "mismatch", wit);
    }

    {
        std::vector<Subspace<F>> cent, own_centre;
        for (const auto& I : ideals) {
            cent.push_back(centralizer(L, I).carrier);
            own_centre.push_back(intersect(cent.back(), I));
        }
        bool ok = true;
        json wit = json::object();
        for (std::size_t i = 0; i < ideals.size() && ok; ++i)
            for (std::size_t j = 0; j < ideals.size() && ok; ++j) {
                const bool lhs = cent[j].contains(ideals[i]);
                const bool rhs = intersect(own_centre[i], own_centre[j]).contains(intersect(ideals[i], ideals[j]));
                if (lhs != rhs) {
                    ok = false;
                    wit = {{"B", subspace_to_json(ideals[i])}, {"D", subspace_to_json(ideals[j])}};
                }
            }
        rep.check("centralizing_ideals", "B ⊆ Z_L(D) ⟺ B ∩ D ⊆ Z(B) ∩ Z(D) for ideals B, D", ok, "mismatch", wit);
    }

    {
        bool ok = true;
        std::string why;
        json wit = json::object();
        const Subspace<F>& N = ctx.nilradical->subspace;
        if (!is_abelian(L, N)) ok = false, why = "nilradical not abelian";
        std::vector<const Subspace<F>*> abelian_ideals;
        for (const auto& I : ideals)
            if (is_abelian(L, I)) abelian_ideals.push_back(&I);
        for (const auto* I : abelian_ideals)
            if (ok && !N.contains(*I)) ok = false, why = "abelian ideal outside N", wit = {{"ideal", subspace_to_json(*I)}};
        for (const auto* B : abelian_ideals)
            for (const auto* C : abelian_ideals)
                if (ok && !product_space(L, *B, *C).is_zero())
                    ok = false, why = "[B,C] ≠ 0", wit = {{"B", subspace_to_json(*B)}, {"C", subspace_to_json(*C)}};
        rep.check("abelian_ideals_in_nilradical",
                  "N is the unique maximal abelian ideal and [B,C] = 0 for abelian ideals B, C", ok, why, wit);
    }

    {
        bool ok = true;
        json wit = json::object();
        for (const auto& S : ctx.lattice->subalgebras) {
            if (S.dim() > 3 || is_abelian(L, S)) continue;
            const auto R = restrict_to(L, S);
            if (is_a_algebra(R.algebra, opts).value != Verdict::yes) {
                ok = false;
                wit = {{"subalgebra", subspace_to_json(S)}};
                break;
            }
        }
        rep.check("subalgebras_are_a", "every subalgebra of dimension ≤ 3 is an A-algebra", ok, "mismatch", wit);
    }

    if (ctx.socle && ctx.socle->monolithic && ctx.pred.is_completely_solvable) {
        const std::string stmt = "monolithic completely solvable A-algebra: R_b invertible on L² for b ≠ 0 in B";
        if (cert.detail == "undecidable-at-budget")
            rep.skip("monolithic_invertible_complement", stmt, cert.detail);
        else
            rep.check("monolithic_invertible_complement", stmt, cert.certified, cert.detail);
    }
    return rep;
}

#define LEIBNIZ_INSTANTIATE_A(F)                                                                         \
    template struct AVerdict<F>;                                                                         \
    template AVerdict<F> refuted(const Algebra<F>&, const Subspace<F>&, std::string);                    \
    template AVerdict<F> is_a_algebra(const Algebra<F>&, const SearchOptions&);                          \
    template AVerdict<F> is_a_algebra(const Analysis<F>&);                                               \
    template AVerdict<F> exhaustive_verdict(const Algebra<F>&, const Lattice<F>&);                       \
    template AVerdict<F> shortcut_verdict(const Algebra<F>&, const SearchOptions&);                      \
    template std::optional<SubHandle<F>> witness_search(const Algebra<F>&, const SearchOptions&);        \
    template ComplementCertificate<F> invertible_complement_certificate(const Algebra<F>&,               \
                                                                        const SearchOptions&);           \
    template Report a_algebra_battery(const Algebra<F>&, const SearchOptions&);                            \
    template bool left_powers_inside_right_powers(const Algebra<F>&, const Subspace<F>&, const Vector<F>&);

LEIBNIZ_INSTANTIATE_A(Rationals)
LEIBNIZ_INSTANTIATE_A(GaloisField)

} // namespace leibniz

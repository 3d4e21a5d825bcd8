#include "leibniz/structure.hpp"

#include <algorithm>

namespace leibniz {

namespace {

template <ExactField F>
bool has_member(const std::vector<Subspace<F>>& set, const Subspace<F>& S) {
    return std::find(set.begin(), set.end(), S) != set.end();
}

template <ExactField F>
bool same_set(const std::vector<Subspace<F>>& a, const std::vector<Subspace<F>>& b) {
    for (const auto& s : a)
        if (!has_member(b, s)) return false;
    for (const auto& s : b)
        if (!has_member(a, s)) return false;
    return true;
}

template <ExactField F>
json subspace_list(const std::vector<Subspace<F>>& list) {
    json out = json::array();
    for (const auto& s : list) out.push_back(subspace_to_json(s));
    return out;
}

template <ExactField F>
Subspace<F> in_coordinates(const Subspace<F>& S, const Subspace<F>& U) {
    std::vector<Vector<F>> gens;
    for (const auto& v : U.basis()) gens.push_back(S.coordinates(v));
    return Subspace<F>::span(S.field(), S.dim(), std::move(gens));
}

/// Complement of L² used by the completely solvable clauses: A_0 of the triangular
/// decomposition (L itself when L is abelian).
template <ExactField F>
std::optional<Subspace<F>> square_complement(const Analysis<F>& ctx) {
    if (!ctx.triangular) return std::nullopt;
    const auto& comps = ctx.triangular->components;
    if (comps.size() == 1) return comps[0];
    if (comps.size() == 2) return comps[0];
    return std::nullopt;
}

} // namespace

namespace {

// The monolithic statements place the monolith inside L². When L² = 0 (the one-dimensional
// algebra) a failure is recorded as a finding.
void monolithic_check(Report& rep, bool square_zero, std::string id, std::string statement, bool ok,
                      std::string reason, json witnesses) {
    if (ok || !square_zero) {
        rep.check(std::move(id), std::move(statement), ok, std::move(reason), std::move(witnesses));
        return;
    }
    rep.finding(std::move(id), std::move(statement), "L² = 0, so the monolith does not lie in L²; " + reason,
                std::move(witnesses));
}

} // namespace

template <ExactField F>
Analysis<F> Analysis<F>::build(const Algebra<F>& L, const SearchOptions& opts) {
    Analysis a{L,
               opts,
               predicates(L),
               series(L, SeriesKind::derived),
               product_space(L, L.whole(), L.whole()),
               leibniz::centre(L).carrier,
               std::nullopt,
               {},
               std::nullopt,
               std::nullopt,
               {},
               ErrorKind::DecompositionFailed,
               std::nullopt,
               std::nullopt};
    if (L.field().is_finite()) {
        try {
            a.lattice = build_lattice(L, opts.budget);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            a.lattice_note = e.message();
        }
    } else {
        a.lattice_note = "subalgebra enumeration needs a finite field";
    }
    if (a.lattice) {
        a.nilradical = leibniz::nilradical(L, *a.lattice);
        a.socle = socle_analysis(L, *a.lattice);
        a.frattini = frattini_ideal(L, *a.lattice);
    } else if (!L.field().is_finite()) {
        a.nilradical = leibniz::nilradical(L, opts.budget);
    }
    if (a.pred.is_solvable) {
        try {
            a.triangular = triangular_decomposition(L, opts);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DecompositionFailed && e.kind() != ErrorKind::CartanSearchFailed) throw;
            a.triangular_note = e.message();
            a.triangular_error = e.kind();
        }
    }
    return a;
}

template <ExactField F>
Report structure_report(const Analysis<F>& ctx, bool a_certified) {
    Report rep("structure");
    const Algebra<F>& L = ctx.L;
    if (!ctx.pred.is_solvable) {
        rep.skip("structure", "L solvable", "L is not solvable");
        return rep;
    }
    if (ctx.nilradical) {
        rep.data()["nilradical"] = subspace_to_json(ctx.nilradical->subspace);
        rep.data()["nilradical_status"] = to_string(ctx.nilradical->status);
    }
    if (ctx.triangular) {
        json comps = json::array();
        for (const auto& A : ctx.triangular->components) comps.push_back(subspace_to_json(A));
        rep.data()["components"] = comps;
    }

    if (ctx.nilradical_exact()) {
        const Subspace<F>& N = ctx.nilradical->subspace;
        const Subspace<F> Z = centralizer(L, N).carrier;
        rep.check("nilradical_self_centralizing", "Z_L(N) ⊆ N", N.contains(Z), "the centralizer of N leaves N",
                  {{"N", subspace_to_json(N)}, {"Z_L(N)", subspace_to_json(Z)}});
    } else {
        rep.skip("nilradical_self_centralizing", "Z_L(N) ⊆ N", "nilradical only bounded");
    }

    if (!a_certified) {
        rep.skip("a_algebra_clauses", "L is an A-algebra", "not certified as an A-algebra");
        return rep;
    }

    const Subspace<F> centre_square = intersect(ctx.centre, ctx.square);
    rep.check("centre_meets_square", "Z(L) ∩ L² = 0", centre_square.is_zero(), "nonzero central element in L²",
              {{"Z(L) ∩ L²", subspace_to_json(centre_square)}});

    if (ctx.triangular)
        rep.check("triangular_decomposition", "L^(i) = A_n ∔ … ∔ A_i with abelian subalgebras A_i", true);
    else
        rep.check("triangular_decomposition", "L^(i) = A_n ∔ … ∔ A_i with abelian subalgebras A_i", false,
                  ctx.triangular_note);

    const bool have_n = ctx.nilradical_exact();
    if (ctx.triangular && have_n) {
        const auto& comps = ctx.triangular->components;
        const auto& D = ctx.triangular->derived;
        const Subspace<F>& N = ctx.nilradical->subspace;
        const std::size_t n = comps.size() - 1;

        Subspace<F> acc = comps[n];
        std::size_t acc_dim = comps[n].dim();
        for (std::size_t i = 0; i < n; ++i) {
            const Subspace<F> piece = intersect(N, comps[i]);
            acc = sum(acc, piece);
            acc_dim += piece.dim();
        }
        rep.check("nilradical_components", "N = A_n ⊕ (N ∩ A_{n-1}) ⊕ … ⊕ (N ∩ A_0)",
                  acc == N && acc_dim == N.dim() && N.contains(comps[n]), "pieces do not rebuild N",
                  {{"N", subspace_to_json(N)}, {"sum", subspace_to_json(acc)}});

        bool ok = true;
        json wit = json::object();
        for (std::size_t i = 0; i <= n && ok; ++i) {
            const Subspace<F> Zi = intersect(centralizer(L, D[i]).carrier, D[i]);
            const Subspace<F> NAi = intersect(N, comps[i]);
            if (!(Zi == NAi)) {
                ok = false;
                wit = {{"i", i}, {"Z(L^(i))", subspace_to_json(Zi)}, {"N ∩ A_i", subspace_to_json(NAi)}};
            }
        }
        rep.check("centre_of_derived_terms", "Z(L^(i)) = N ∩ A_i for every i", ok, "mismatch at some i", wit);

        if (ctx.socle) {
            ok = true;
            for (const auto& M : ctx.socle->minimal_ideals) {
                bool found = false;
                for (std::size_t i = 0; i <= n && !found; ++i) found = intersect(N, comps[i]).contains(M);
                if (!found) {
                    ok = false;
                    wit = {{"minimal_ideal", subspace_to_json(M)}};
                    break;
                }
            }
            rep.check("minimal_ideal_in_component", "every minimal ideal lies in some N ∩ A_i", ok,
                      "a minimal ideal lies in no N ∩ A_i", wit);
        } else {
            rep.skip("minimal_ideal_in_component", "every minimal ideal lies in some N ∩ A_i", ctx.lattice_note);
        }
    } else {
        rep.skip("nilradical_components", "N = A_n ⊕ (N ∩ A_{n-1}) ⊕ … ⊕ (N ∩ A_0)",
                 have_n ? "no triangular decomposition" : "nilradical only bounded");
    }

    if (ctx.pred.is_completely_solvable) {
        const auto B = square_complement(ctx);
        const bool split = B && is_subalgebra(L, *B) && is_abelian(L, *B) && is_abelian(L, ctx.square) &&
                           independent(*B, ctx.square) && B->dim() + ctx.square.dim() == L.dim();
        rep.check("square_abelian_complement", "L = L² ∔ B with L² and B abelian", split,
                  "no abelian complement to an abelian L²",
                  {{"L²", subspace_to_json(ctx.square)}, {"B", B ? subspace_to_json(*B) : json()}});
        if (have_n) {
            const Subspace<F>& N = ctx.nilradical->subspace;
            const Subspace<F> S = sum(ctx.square, ctx.centre);
            rep.check("nilradical_square_plus_centre", "N = L² ⊕ Z(L)",
                      S == N && independent(ctx.square, ctx.centre), "N differs from L² ⊕ Z(L)",
                      {{"N", subspace_to_json(N)}, {"L² + Z(L)", subspace_to_json(S)}});
        } else {
            rep.skip("nilradical_square_plus_centre", "N = L² ⊕ Z(L)", "nilradical only bounded");
        }
        if (ctx.socle && B) {
            bool i_ok = true, ii_ok = true, iii_ok = true;
            json wi, wii, wiii;
            for (const auto& M : ctx.socle->minimal_ideals) {
                const bool in_sq = ctx.square.contains(M);
                const bool in_b = B->contains(M);
                if (!in_sq && !in_b && i_ok) i_ok = false, wi = subspace_to_json(M);
                if ((in_b != ctx.centre.contains(M) || (in_b && M.dim() != 1)) && ii_ok)
                    ii_ok = false, wii = subspace_to_json(M);
                if (in_sq != (product_space(L, M, L.whole()) == M) && iii_ok) iii_ok = false, wiii = subspace_to_json(M);
            }
            rep.check("minimal_ideal_in_square_or_complement", "A ⊆ L² or A ⊆ B for every minimal ideal A", i_ok,
                      "minimal ideal outside L² and B", {{"A", wi}});
            rep.check("minimal_ideal_central_iff_in_complement", "A ⊆ B ⟺ A ⊆ Z(L), and then dim A = 1", ii_ok,
                      "mismatch", {{"A", wii}});
            rep.check("minimal_ideal_in_square_iff_right_stable", "A ⊆ L² ⟺ [A,L] = A", iii_ok, "mismatch",
                      {{"A", wiii}});
            const bool phi_free = ctx.frattini->ideal.is_zero();
            const bool sq_in_asoc = ctx.socle->asoc.contains(ctx.square);
            rep.check("phi_free_iff_square_in_asoc", "φ(L) = 0 ⟺ L² ⊆ Asoc L", phi_free == sq_in_asoc, "mismatch",
                      {{"φ(L)", subspace_to_json(ctx.frattini->ideal)}, {"Asoc L", subspace_to_json(ctx.socle->asoc)}});
        } else {
            rep.skip("minimal_ideal_in_square_or_complement", "A ⊆ L² or A ⊆ B for every minimal ideal A",
                     ctx.socle ? "no complement" : ctx.lattice_note);
        }
    }

    if (ctx.socle && ctx.socle->monolithic) {
        const Subspace<F>& W = *ctx.socle->monolith;
        rep.data()["monolith"] = subspace_to_json(W);
        rep.check("monolith_abelian", "[W,W] = 0", is_abelian(L, W), "monolith not abelian",
                  {{"W", subspace_to_json(W)}});
        const bool stable = product_space(L, L.whole(), W) == W || product_space(L, W, L.whole()) == W;
        monolithic_check(rep, ctx.square.is_zero(), "monolith_centre_trivial",
                         "Z(L) = 0 and ([L,W] = W or [W,L] = W)", ctx.centre.is_zero() && stable,
                         "centre nonzero or W not stable", {{"Z(L)", subspace_to_json(ctx.centre)}});
        if (ctx.triangular && have_n) {
            const Subspace<F>& N = ctx.nilradical->subspace;
            const auto& comps = ctx.triangular->components;
            const auto& D = ctx.triangular->derived;
            rep.check("nilradical_is_last_derived_term", "N = A_n = L^(n)", N == comps.back() && N == D.back(),
                      "mismatch", {{"N", subspace_to_json(N)}, {"L^(n)", subspace_to_json(D.back())}});
            const Subspace<F> ZW = centralizer(L, W).carrier;
            rep.check("nilradical_centralizes_monolith", "N = Z_L(W)", N == ZW, "mismatch",
                      {{"N", subspace_to_json(N)}, {"Z_L(W)", subspace_to_json(ZW)}});
            rep.check("phi_free_iff_monolith_is_nilradical", "φ(L) = 0 ⟺ W = N",
                      ctx.frattini->ideal.is_zero() == (W == N), "mismatch",
                      {{"φ(L)", subspace_to_json(ctx.frattini->ideal)}});
        }
    }
    return rep;
}

template <ExactField F>
Report max_nilpotent_analysis(const Analysis<F>& ctx, bool a_certified) {
    Report rep("max_nilpotent");
    const Algebra<F>& L = ctx.L;
    if (!ctx.lattice) {
        rep.skip("max_nilpotent_square_splitting", "L² = (U ∩ L²) ⊕ K, K ideal, [K,U] = K", ctx.lattice_note);
        return rep;
    }
    const auto maxnil = maximal_nilpotent_subalgebras(L, *ctx.lattice);
    rep.data()["maximal_nilpotent"] = subspace_list(maxnil);

    if (ctx.pred.is_metabelian) {
        bool ok = true;
        json wit = json::object();
        for (const auto& U : maxnil) {
            const Subspace<F> I = intersect(U, ctx.square);
            std::string why;
            try {
                const Subspace<F> K = fitting_family(L, U).one_part;
                if (!is_ideal(L, I) || !is_abelian(L, I)) why = "U ∩ L² is not an abelian ideal";
                else if (!ctx.square.contains(K) || !independent(I, K) || I.dim() + K.dim() != ctx.square.dim())
                    why = "L² ≠ (U ∩ L²) ⊕ K";
                else if (!is_ideal(L, K)) why = "K is not an ideal";
                else if (!(product_space(L, K, U) == K)) why = "[K,U] ≠ K";
                if (!why.empty()) wit = {{"U", subspace_to_json(U)}, {"K", subspace_to_json(K)}};
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NotDecomposing) throw;
                why = e.what();
                wit = {{"U", subspace_to_json(U)}};
            }
            if (!why.empty()) {
                ok = false;
                rep.check("max_nilpotent_square_splitting", "L² = (U ∩ L²) ⊕ K, K ideal, [K,U] = K", false, why, wit);
                break;
            }
        }
        if (ok) rep.check("max_nilpotent_square_splitting", "L² = (U ∩ L²) ⊕ K, K ideal, [K,U] = K", true);
    } else {
        rep.skip("max_nilpotent_square_splitting", "L² = (U ∩ L²) ⊕ K, K ideal, [K,U] = K", "L is not metabelian");
    }

    if (!a_certified || !ctx.pred.is_completely_solvable) {
        rep.skip("max_nilpotent_cartan_splitting", "U = (U ∩ L²) ⊕ (U ∩ C) for a Cartan subalgebra C",
                 "needs a completely solvable A-algebra");
        return rep;
    }
    const auto cartans = cartan_subalgebras(L, *ctx.lattice);
    rep.data()["cartan_subalgebras"] = subspace_list(cartans);
    bool ok = true;
    json wit = json::object();
    for (const auto& U : maxnil) {
        const Subspace<F> I = intersect(U, ctx.square);
        bool found = false;
        for (const auto& C : cartans) {
            const Subspace<F> J = intersect(U, C);
            if (I.dim() + J.dim() == U.dim() && independent(I, J)) {
                found = true;
                break;
            }
        }
        if (!found) {
            ok = false;
            wit = {{"U", subspace_to_json(U)}};
            break;
        }
    }
    rep.check("max_nilpotent_cartan_splitting", "U = (U ∩ L²) ⊕ (U ∩ C) for a Cartan subalgebra C", ok,
              "no Cartan subalgebra splits U", wit);

    if (ctx.socle && ctx.socle->monolithic) {
        std::vector<Subspace<F>> expected = cartans;
        if (!has_member(expected, ctx.square)) expected.push_back(ctx.square);
        monolithic_check(rep, ctx.square.is_zero(), "max_nilpotent_are_square_and_cartans",
                         "maximal nilpotent subalgebras = {L²} ∪ {Cartan subalgebras}", same_set(maxnil, expected),
                         "sets differ",
                         {{"maximal_nilpotent", subspace_list(maxnil)}, {"expected", subspace_list(expected)}});
        const auto comps = complements(L, ctx.square, *ctx.lattice);
        rep.check("cartans_are_square_complements", "Cartan subalgebras = subalgebras complementary to L²",
                  same_set(cartans, comps), "sets differ", {{"complements", subspace_list(comps)}});
    }
    return rep;
}

template <ExactField F>
void check_derived_quotient_cartans(const Analysis<F>& ctx, Report& rep) {
    const std::string id = "cartans_of_derived_quotients_are_complements";
    const std::string statement = "Cartan subalgebras of L^(i)/L^(i+2) = complements of L^(i+1)/L^(i+2)";
    if (!ctx.L.field().is_finite() || !ctx.pred.is_solvable) {
        rep.skip(id, statement, "needs a solvable algebra over a finite field");
        return;
    }
    const auto& T = ctx.derived.terms;
    try {
        for (std::size_t i = 0; i + 1 < T.size(); ++i) {
            const Subspace<F> next2 = i + 2 < T.size() ? T[i + 2] : ctx.L.zero();
            const auto R = restrict_to(ctx.L, T[i]);
            const auto Q = quotient(R.algebra, in_coordinates(T[i], next2));
            const Subspace<F> Q2 = map_subspace(Q.projection, in_coordinates(T[i], T[i + 1]));
            const auto lat = build_lattice(Q.algebra, ctx.opts.budget);
            const auto cartans = cartan_subalgebras(Q.algebra, lat);
            const auto comps = complements(Q.algebra, Q2, lat);
            if (!same_set(cartans, comps)) {
                rep.check(id, statement, false, "sets differ at i = " + std::to_string(i),
                          {{"i", i}, {"cartans", subspace_list(cartans)}, {"complements", subspace_list(comps)}});
                return;
            }
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        rep.skip(id, statement, e.what());
        return;
    }
    rep.check(id, statement, true);
}

#define LEIBNIZ_INSTANTIATE_STRUCTURE(F)                                       \
    template struct Analysis<F>;                                               \
    template Report structure_report(const Analysis<F>&, bool);                \
    template Report max_nilpotent_analysis(const Analysis<F>&, bool);          \
    template void check_derived_quotient_cartans(const Analysis<F>&, Report&);

LEIBNIZ_INSTANTIATE_STRUCTURE(Rationals)
LEIBNIZ_INSTANTIATE_STRUCTURE(GaloisField)

} // namespace leibniz

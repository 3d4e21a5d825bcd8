#pragma once

#include <optional>
#include <string>

#include "leibniz/decompose.hpp"
#include "leibniz/report.hpp"

namespace leibniz {

/// Data shared by the structure checks, computed once per algebra. Enumeration-backed
/// members are empty over Q or when the subspace count exceeds the budget.
template <ExactField F>
struct Analysis {
    Algebra<F> L;
    SearchOptions opts;
    Predicates pred;
    SeriesReport<F> derived;
    Subspace<F> square;
    Subspace<F> centre;
    std::optional<Lattice<F>> lattice;
    std::string lattice_note;
    std::optional<RadicalResult<F>> nilradical;
    std::optional<TriangularDecomposition<F>> triangular;
    std::string triangular_note;
    ErrorKind triangular_error = ErrorKind::DecompositionFailed;
    std::optional<SocleAnalysis<F>> socle;
    std::optional<FrattiniResult<F>> frattini;

    static Analysis build(const Algebra<F>& L, const SearchOptions& opts = {});
    bool nilradical_exact() const { return nilradical && nilradical->status == RadicalStatus::exact; }
};

/// Equalities and containments relating the nilradical, the centre, minimal ideals,
/// the monolith and the Frattini ideal to the triangular decomposition. Clauses whose
/// conclusion needs L to be an A-algebra are skipped unless `a_certified`.
template <ExactField F>
Report structure_report(const Analysis<F>& ctx, bool a_certified);

/// Maximal nilpotent subalgebras (finite fields): splitting of L² along each of them,
/// and their relation to the Cartan subalgebras.
template <ExactField F>
Report max_nilpotent_analysis(const Analysis<F>& ctx, bool a_certified);

/// Cartan subalgebras of L^(i)/L^(i+2) against complements of L^(i+1)/L^(i+2), for every i
/// (finite fields). Adds one clause to `rep`.
template <ExactField F>
void check_derived_quotient_cartans(const Analysis<F>& ctx, Report& rep);

} // namespace leibniz

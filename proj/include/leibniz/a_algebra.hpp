#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/structure.hpp"

namespace leibniz {

enum class Verdict { yes, no, unknown };

/// "True", "False" or "Unknown".
std::string to_string(Verdict v);

/// Whether every nilpotent subalgebra of L is abelian.
template <ExactField F>
struct AVerdict {
    Verdict value = Verdict::unknown;
    /// exhaustive | invertible_complement | dim<=1-trivial | nilpotent-non-abelian | witness-search
    std::string method;
    /// Present exactly when value == no: a nilpotent, non-abelian subalgebra.
    std::optional<SubHandle<F>> witness;
    /// Checks passed, failed or inapplicable on the way to an Unknown verdict.
    std::vector<std::string> checks;

    json to_json() const;
};

/// A `no` verdict; re-verifies that U is a nilpotent non-abelian subalgebra (throws
/// std::logic_error otherwise).
template <ExactField F>
AVerdict<F> refuted(const Algebra<F>& L, const Subspace<F>& U, std::string method);

/// Finite fields: exhaustive over the subalgebra lattice (first non-abelian nilpotent
/// subalgebra in canonical order is the witness). Over Q, or above the budget, the
/// shortcut verdict below.
template <ExactField F>
AVerdict<F> is_a_algebra(const Algebra<F>& L, const SearchOptions& opts = {});
template <ExactField F>
AVerdict<F> is_a_algebra(const Analysis<F>& ctx);
template <ExactField F>
AVerdict<F> exhaustive_verdict(const Algebra<F>& L, const Lattice<F>& lattice);

/// Verdict from shortcuts only: dim ≤ 1, nilpotent non-abelian L, witness search,
/// necessary conditions (derived = lower nilpotent series, Z(L) ∩ L² = 0 when solvable)
/// and the invertible-complement certificate. `no` only with a witness.
template <ExactField F>
AVerdict<F> shortcut_verdict(const Algebra<F>& L, const SearchOptions& opts = {});

/// Structured, then random, search for a nilpotent non-abelian subalgebra.
template <ExactField F>
std::optional<SubHandle<F>> witness_search(const Algebra<F>& L, const SearchOptions& opts = {});

template <ExactField F>
struct ComplementCertificate {
    bool certified = false;
    std::string detail;
    std::optional<Subspace<F>> complement;
};

/// L metabelian, L = L² ∔ B with B a subalgebra, and R_b invertible on L² for every
/// nonzero b in B. Decided exactly over finite fields (all b, within budget) or when
/// dim B = 1; otherwise not certified with detail "undecidable-at-budget".
template <ExactField F>
ComplementCertificate<F> invertible_complement_certificate(const Algebra<F>& L, const SearchOptions& opts = {});

/// Every applicable structural property of an A-algebra, checked against L. Clauses
/// that need the A-property are skipped unless the verdict is True; the derived-length
/// probe reports a finding instead of a failure.
template <ExactField F>
Report a_algebra_battery(const Algebra<F>& L, const SearchOptions& opts = {});

/// L_x^k(A) ⊆ R_x^{k-1}(A) for 1 ≤ k ≤ dim L, where A is an abelian ideal and x² ∈ A.
template <ExactField F>
bool left_powers_inside_right_powers(const Algebra<F>& L, const Subspace<F>& A, const Vector<F>& x);

} // namespace leibniz

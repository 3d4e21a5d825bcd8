#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/enumerate.hpp"

namespace leibniz {

enum class SeriesKind { derived, lower_central, lower_nilpotent };

std::string to_string(SeriesKind kind);

/// terms[0] = L; the sequence stops at the first zero term or at the first repeated term
/// (which is not stored twice).
template <ExactField F>
struct SeriesReport {
    SeriesKind kind;
    std::vector<Subspace<F>> terms;
    bool reaches_zero = false;
    /// Number of steps needed to reach zero (derived length, nilpotency class, ...).
    std::optional<std::size_t> length;
};

template <ExactField F>
SeriesReport<F> series(const Algebra<F>& L, SeriesKind kind);

/// Z_1 = Z(L), Z_{k+1} = { x : [x, L] + [L, x] in Z_k }, until stable.
template <ExactField F>
std::vector<Subspace<F>> upper_central_series(const Algebra<F>& L);

struct Predicates {
    bool is_nilpotent = false;
    std::optional<std::size_t> nilpotency_class;
    bool is_solvable = false;
    std::optional<std::size_t> derived_length;
    bool is_completely_solvable = false;
    bool is_metabelian = false;
    bool is_abelian = false;
};

template <ExactField F>
Predicates predicates(const Algebra<F>& L);

/// Intersection of the lower central series (its stable term).
template <ExactField F>
Subspace<F> nilpotent_residual(const Algebra<F>& L);

enum class RadicalStatus { exact, lower_bound };

std::string to_string(RadicalStatus status);

template <ExactField F>
struct RadicalResult {
    Subspace<F> subspace;
    RadicalStatus status;
    std::string method;
    /// Infinite fields only: an ideal known to contain the nilradical.
    std::optional<Subspace<F>> upper_bound;
};

/// Largest nilpotent ideal. Finite fields: sum of all nilpotent ideals (enumeration).
/// Rationals: exact when L is nilpotent or when the trace-form upper bound is itself
/// nilpotent; otherwise a nilpotent lower bound. Throws BudgetExceeded.
template <ExactField F>
RadicalResult<F> nilradical(const Algebra<F>& L, std::uint64_t budget = kDefaultBudget);
template <ExactField F>
RadicalResult<F> nilradical(const Algebra<F>& L, const Lattice<F>& lattice);

/// Largest solvable ideal. Throws InfiniteFieldUnsupported for non-solvable algebras over Q.
template <ExactField F>
RadicalResult<F> radical(const Algebra<F>& L, std::uint64_t budget = kDefaultBudget);
template <ExactField F>
RadicalResult<F> radical(const Algebra<F>& L, const Lattice<F>& lattice);

/// Largest ideal of L contained in the subspace U.
template <ExactField F>
Subspace<F> ideal_core(const Algebra<F>& L, const Subspace<F>& U);

} // namespace leibniz

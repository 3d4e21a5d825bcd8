#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

inline constexpr std::uint64_t kDefaultBudget = 1000000;

enum class EnumKind { subspaces, subalgebras, ideals };

/// Number of subspaces of GF(q)^n (sum of Gaussian binomials), saturating at UINT64_MAX.
std::uint64_t subspace_count(std::uint64_t q, std::size_t n);

/// Visits every subspace of F^n in canonical order: dimension, pivot columns, then
/// free entries with the last entry varying fastest (the order of canonical_less).
/// The visitor returns false to stop early.
/// Throws InfiniteFieldUnsupported, or BudgetExceeded when the count exceeds `budget`.
template <ExactField F>
void for_each_subspace(const F& field, std::size_t n, std::uint64_t budget,
                       const std::function<bool(const Subspace<F>&)>& visit);

template <ExactField F>
std::vector<SubHandle<F>> enumerate(EnumKind kind, const Algebra<F>& L, std::uint64_t budget = kDefaultBudget);

/// Subalgebras and ideals of L from a single sweep, both in canonical order.
template <ExactField F>
struct Lattice {
    std::vector<Subspace<F>> subalgebras;
    std::vector<Subspace<F>> ideals;
    std::uint64_t visited = 0;
};

template <ExactField F>
Lattice<F> build_lattice(const Algebra<F>& L, std::uint64_t budget = kDefaultBudget);

template <ExactField F>
struct SocleAnalysis {
    std::vector<Subspace<F>> minimal_ideals;
    Subspace<F> asoc; // sum of the abelian minimal ideals
    bool monolithic = false;
    std::optional<Subspace<F>> monolith;
};

template <ExactField F>
SocleAnalysis<F> socle_analysis(const Algebra<F>& L, const Lattice<F>& lattice);

template <ExactField F>
struct FrattiniResult {
    Subspace<F> ideal;                          // largest ideal inside every maximal subalgebra
    Subspace<F> intersection;                   // plain intersection of the maximal subalgebras
    std::vector<Subspace<F>> maximal_subalgebras;
    bool intersection_is_ideal = false;
};

template <ExactField F>
FrattiniResult<F> frattini_ideal(const Algebra<F>& L, const Lattice<F>& lattice);

/// Nilpotent subalgebras that are maximal under inclusion among nilpotent subalgebras.
template <ExactField F>
std::vector<Subspace<F>> maximal_nilpotent_subalgebras(const Algebra<F>& L, const Lattice<F>& lattice);

} // namespace leibniz

#pragma once

#include <cstdint>
#include <vector>

#include "leibniz/series.hpp"

namespace leibniz {

/// L = null_part ∔ one_part relative to one operator or a family of operators.
template <ExactField F>
struct FittingPair {
    Subspace<F> null_part;
    Subspace<F> one_part;
};

/// null part = ker T^n, one part = im T^n; both checked (direct, invariant,
/// T nilpotent on the first and invertible on the second). Throws ShapeMismatch.
template <ExactField F>
FittingPair<F> fitting(const Matrix<F>& T);

/// Fitting decomposition relative to the family { R_c : c in a basis of C }, acting on
/// the subspace V (the whole algebra by default). The one part is the stable term of
/// V, R_C(V), R_C(R_C(V)), ...; the null part collects the vectors killed by all long
/// enough words. Throws NotDecomposing when the two parts do not decompose V.
template <ExactField F>
FittingPair<F> fitting_family(const Algebra<F>& L, const Subspace<F>& C);
template <ExactField F>
FittingPair<F> fitting_family(const Algebra<F>& L, const Subspace<F>& C, const Subspace<F>& V);

/// Nilpotent and equal to its own normalizer.
template <ExactField F>
bool is_cartan(const Algebra<F>& L, const Subspace<F>& C);

struct SearchOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = 1000000;
    /// Random candidates tried per refinement step over infinite fields.
    unsigned random_tries = 64;
};

/// Nonzero elements of K in the fixed search order: basis vectors, sums and differences
/// of two basis vectors, then every element (finite fields within budget) or
/// `random_tries` seeded random small combinations.
template <ExactField F>
std::vector<Vector<F>> sample_elements(const Subspace<F>& K, const SearchOptions& opts);

/// A Cartan subalgebra of a solvable algebra, by repeated Fitting refinement
/// K <- null part of R_x on K. Throws NotSolvable or CartanSearchFailed.
template <ExactField F>
Subspace<F> cartan_subalgebra(const Algebra<F>& L, const SearchOptions& opts = {});

template <ExactField F>
struct TriangularDecomposition {
    /// components[i] = A_i, so L^(i) = A_n ∔ ... ∔ A_i with n = components.size() - 1.
    std::vector<Subspace<F>> components;
    std::vector<Subspace<F>> derived; // L^(0), ..., L^(n)
};

/// Splits L over its derived series recursively (Cartan subalgebra of L^(n-1),
/// Fitting decomposition relative to it, recurse into the null part), then checks
/// every claimed property. Throws NotSolvable or DecompositionFailed.
template <ExactField F>
TriangularDecomposition<F> triangular_decomposition(const Algebra<F>& L, const SearchOptions& opts = {});

/// [K ∩ A_0, ..., K ∩ A_n]; throws NotAnIdeal, or DecompositionFailed when the
/// pieces do not add up to K.
template <ExactField F>
std::vector<Subspace<F>> ideal_decomposition(const Algebra<F>& L, const Subspace<F>& K,
                                             const TriangularDecomposition<F>& D);

/// Subalgebras of L complementary to the subspace V.
template <ExactField F>
std::vector<Subspace<F>> complements(const Algebra<F>& L, const Subspace<F>& V, const Lattice<F>& lattice);

/// All Cartan subalgebras of L (finite fields).
template <ExactField F>
std::vector<Subspace<F>> cartan_subalgebras(const Algebra<F>& L, const Lattice<F>& lattice);

} // namespace leibniz

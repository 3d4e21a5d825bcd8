#pragma once

#include <vector>

#include "leibniz/a_algebra.hpp"
#include "leibniz/poly.hpp"

namespace leibniz {

/// Basis a, a², …, aⁿ with [aⁱ, a] = aⁱ⁺¹ (i < n), [aⁿ, a] = α₂a² + … + αₙaⁿ and
/// every product with right factor in span{a², …, aⁿ} zero.
template <ExactField F>
struct CyclicSpec {
    F field;
    std::size_t n;
    std::vector<typename F::value_type> alphas; // α₂, …, αₙ
};

/// Throws BadSpec (n < 2 or wrong number of alphas).
template <ExactField F>
Algebra<F> build_cyclic(const CyclicSpec<F>& spec);

/// p(x) = xⁿ − αₙx^{n−1} − … − α₂x
template <ExactField F>
Poly<F> cyclic_polynomial(const CyclicSpec<F>& spec);

/// Companion matrix of a monic polynomial (ones below the diagonal, last column −coefficients).
template <ExactField F>
Matrix<F> companion_matrix(const Poly<F>& p);

/// aⁿ − αₙa^{n−1} − … − α₂a, spanning a complement of L².
template <ExactField F>
Vector<F> cyclic_complement(const CyclicSpec<F>& spec);

/// Classification: p(x), its factorization, the A-property (α₂ ≠ 0), the complement,
/// and the monolithic / φ-free claims, cross-checked against enumeration when the field
/// is finite and the subspace count is within budget. Over Q a polynomial that cannot
/// be factored is reported with data "factorization": null and the factor-count
/// clauses skipped.
template <ExactField F>
Report classify_cyclic(const CyclicSpec<F>& spec, const SearchOptions& opts = {});

} // namespace leibniz

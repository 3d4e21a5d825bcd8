#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

enum class Checked { yes, no };
enum class Side { right, left };

/// A finite-dimensional algebra given by structure constants:
/// product(i, j) holds the coordinates of [b_i, b_j].
template <ExactField F>
class Algebra {
public:
    using value_type = typename F::value_type;

    /// `table` has dim*dim entries, row-major in (i, j). With Checked::yes a table that
    /// violates the Leibniz identity is rejected with NotLeibniz.
    static Algebra create(F field, std::size_t dim, std::vector<std::string> names, std::vector<Vector<F>> table,
                          Checked checked = Checked::yes);
    /// The zero product on F^dim.
    static Algebra abelian(const F& field, std::size_t dim, std::vector<std::string> names = {});

    const F& field() const { return data_->field; }
    std::size_t dim() const { return data_->dim; }
    const std::vector<std::string>& names() const { return data_->names; }
    const Vector<F>& product(std::size_t i, std::size_t j) const { return data_->table[i * data_->dim + j]; }
    const std::vector<Vector<F>>& table() const { return data_->table; }

    /// Bilinear extension of the table. Throws DimensionMismatch.
    Vector<F> multiply(const Vector<F>& u, const Vector<F>& v) const;
    Vector<F> basis_vector(std::size_t i) const { return unit_vector(field(), dim(), i); }
    Subspace<F> whole() const { return Subspace<F>::full(field(), dim()); }
    Subspace<F> zero() const { return Subspace<F>(field(), dim()); }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.field() == b.field() && a.dim() == b.dim() && a.table() == b.table();
    }

private:
    struct Data {
        F field;
        std::size_t dim;
        std::vector<std::string> names;
        std::vector<Vector<F>> table;
    };
    explicit Algebra(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

template <ExactField F>
struct Violation {
    std::size_t i, j, k;
    Vector<F> lhs; // [b_i, [b_j, b_k]]
    Vector<F> rhs; // [[b_i, b_j], b_k] - [[b_i, b_k], b_j]
};

/// First failing basis triple in lexicographic order, if any.
template <ExactField F>
std::optional<Violation<F>> verify_leibniz(const Algebra<F>& L);

/// Right (column j = [b_j, x]) or left (column j = [x, b_j]) multiplication operator.
template <ExactField F>
Matrix<F> mult_operator(const Algebra<F>& L, const Vector<F>& x, Side side);

/// span{ [u, v] : u in U, v in V }
template <ExactField F>
Subspace<F> product_space(const Algebra<F>& L, const Subspace<F>& U, const Subspace<F>& V);

template <ExactField F>
bool is_subalgebra(const Algebra<F>& L, const Subspace<F>& U);
template <ExactField F>
bool is_left_ideal(const Algebra<F>& L, const Subspace<F>& U);
template <ExactField F>
bool is_right_ideal(const Algebra<F>& L, const Subspace<F>& U);
template <ExactField F>
bool is_ideal(const Algebra<F>& L, const Subspace<F>& U) {
    return is_left_ideal(L, U) && is_right_ideal(L, U);
}
/// [U, U] = 0
template <ExactField F>
bool is_abelian(const Algebra<F>& L, const Subspace<F>& U);
/// U^1 = U, U^{k+1} = [U^k, U] reaches zero. U must be a subalgebra.
template <ExactField F>
bool is_nilpotent_sub(const Algebra<F>& L, const Subspace<F>& U);
/// U^(0) = U, U^(k+1) = [U^(k), U^(k)] reaches zero. U must be a subalgebra.
template <ExactField F>
bool is_solvable_sub(const Algebra<F>& L, const Subspace<F>& U);

template <ExactField F>
struct SubHandle {
    Algebra<F> algebra;
    Subspace<F> carrier;
    bool is_subalgebra = false;
    bool is_left_ideal = false;
    bool is_right_ideal = false;
    bool is_ideal = false;

    std::size_t dim() const { return carrier.dim(); }
};

template <ExactField F>
SubHandle<F> make_handle(const Algebra<F>& L, Subspace<F> U);

/// span{ x^2 : x in L }; checked to be an ideal with antisymmetric quotient.
template <ExactField F>
SubHandle<F> leib_kernel(const Algebra<F>& L);
template <ExactField F>
SubHandle<F> centre(const Algebra<F>& L);
/// { x : [x, U] = [U, x] = 0 }
template <ExactField F>
SubHandle<F> centralizer(const Algebra<F>& L, const Subspace<F>& U);
/// { x : [x, U] + [U, x] in U }
template <ExactField F>
SubHandle<F> normalizer(const Algebra<F>& L, const Subspace<F>& U);

template <ExactField F>
SubHandle<F> subalgebra_closure(const Algebra<F>& L, const std::vector<Vector<F>>& generators);
template <ExactField F>
SubHandle<F> ideal_closure(const Algebra<F>& L, const std::vector<Vector<F>>& generators);

template <ExactField F>
struct Quotient {
    Algebra<F> algebra;
    Matrix<F> projection; // (dim L - dim I) x dim L
    std::vector<std::size_t> coordinates; // non-pivot columns of the ideal's echelon basis
};

/// Throws NotAnIdeal.
template <ExactField F>
Quotient<F> quotient(const Algebra<F>& L, const Subspace<F>& I);
/// Full preimage of a subspace of L/I under the projection.
template <ExactField F>
Subspace<F> preimage(const Quotient<F>& q, const Subspace<F>& I, const Subspace<F>& image);

/// Block-diagonal product. Throws FieldMismatch.
template <ExactField F>
Algebra<F> direct_sum(const Algebra<F>& a, const Algebra<F>& b);

template <ExactField F>
struct Restriction {
    Algebra<F> algebra;
    Matrix<F> embedding; // dim L x dim S, columns = basis of S
};

/// The subalgebra S as an algebra in its own right, in S's echelon basis.
/// Throws DimensionMismatch if S is not a subalgebra.
template <ExactField F>
Restriction<F> restrict_to(const Algebra<F>& L, const Subspace<F>& S);

} // namespace leibniz

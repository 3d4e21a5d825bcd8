#pragma once

#include <cstddef>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

template <class F>
using Vector = std::vector<typename F::value_type>;

// Small vector helpers. All of them take the field explicitly because
// GF(p^k) scalars are bare codes.
template <ExactField F>
Vector<F> zero_vector(const F& f, std::size_t n) {
    return Vector<F>(n, f.zero());
}

template <ExactField F>
Vector<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
    Vector<F> v(n, f.zero());
    v[i] = f.one();
    return v;
}

template <ExactField F>
bool is_zero_vector(const F& f, const Vector<F>& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

/// dst += c * src
template <ExactField F>
void axpy(const F& f, Vector<F>& dst, const typename F::value_type& c, const Vector<F>& src) {
    if (f.is_zero(c)) return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (!f.is_zero(src[i])) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

template <ExactField F>
Vector<F> add(const F& f, const Vector<F>& a, const Vector<F>& b) {
    Vector<F> r = a;
    axpy(f, r, f.one(), b);
    return r;
}

template <ExactField F>
Vector<F> sub(const F& f, const Vector<F>& a, const Vector<F>& b) {
    Vector<F> r = a;
    axpy(f, r, f.neg(f.one()), b);
    return r;
}

template <ExactField F>
Vector<F> scale(const F& f, const typename F::value_type& c, const Vector<F>& v) {
    Vector<F> r(v.size(), f.zero());
    axpy(f, r, c, v);
    return r;
}

template <ExactField F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix identity(const F& field, std::size_t n);
    static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows);
    static Matrix from_columns(const F& field, std::size_t rows, const std::vector<Vector<F>>& cols);

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector<F> row(std::size_t r) const;
    Vector<F> column(std::size_t c) const;
    std::vector<Vector<F>> row_list() const;
    std::vector<Vector<F>> column_list() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<value_type> data_;
};

template <ExactField F>
struct Rref {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
};

template <ExactField F>
Rref<F> rref(const Matrix<F>& m);

template <ExactField F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b);
template <ExactField F>
Vector<F> mat_vec(const Matrix<F>& a, const Vector<F>& v);
template <ExactField F>
Matrix<F> transpose(const Matrix<F>& a);
template <ExactField F>
Matrix<F> power(const Matrix<F>& a, std::size_t k);
template <ExactField F>
typename F::value_type determinant(const Matrix<F>& a);
template <ExactField F>
std::size_t rank(const Matrix<F>& a);
template <ExactField F>
bool is_nilpotent(const Matrix<F>& a);

/// A subspace of F^n stored by its reduced row-echelon basis. Two subspaces are
/// equal exactly when their stored bases are identical.
template <ExactField F>
class Subspace {
public:
    using value_type = typename F::value_type;

    /// The zero subspace of F^ambient.
    Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

    static Subspace span(const F& field, std::size_t ambient, std::vector<Vector<F>> generators);
    static Subspace full(const F& field, std::size_t ambient);
    /// No validation: `rows` must already be reduced echelon with the given pivots.
    static Subspace from_echelon(const F& field, std::size_t ambient, std::vector<Vector<F>> rows,
                                 std::vector<std::size_t> pivots);

    const F& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }
    const std::vector<Vector<F>>& basis() const { return basis_; }
    const Vector<F>& vector(std::size_t i) const { return basis_[i]; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::size_t> non_pivots() const;

    /// v minus its component along the basis, read off the pivot columns.
    Vector<F> reduce(Vector<F> v) const;
    bool contains(const Vector<F>& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the stored basis; throws NoSolution if v is not in the subspace.
    Vector<F> coordinates(const Vector<F>& v) const;
    /// Basis as the columns of an ambient x dim matrix.
    Matrix<F> embedding() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    F field_;
    std::size_t ambient_;
    std::vector<Vector<F>> basis_;
    std::vector<std::size_t> pivots_;
};

/// Total order used for canonical listings: dimension, then pivots, then entries.
template <ExactField F>
bool canonical_less(const Subspace<F>& a, const Subspace<F>& b);

template <ExactField F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v);
template <ExactField F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v);

/// Direct (as vector spaces): u ∩ v = 0.
template <ExactField F>
bool independent(const Subspace<F>& u, const Subspace<F>& v) {
    return u.dim() + v.dim() == sum(u, v).dim();
}

template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m);
/// Column space, as a subspace of F^rows.
template <ExactField F>
Subspace<F> image(const Matrix<F>& m);
template <ExactField F>
Subspace<F> generalized_kernel(const Matrix<F>& m, std::size_t power);
/// One solution of m x = rhs (free variables set to zero). Throws NoSolution.
template <ExactField F>
Vector<F> solve(const Matrix<F>& m, const Vector<F>& rhs);
/// span{ m u : u in U }
template <ExactField F>
Subspace<F> map_subspace(const Matrix<F>& m, const Subspace<F>& u);
/// Matrix of m restricted to an invariant subspace U, in U's stored basis.
/// Throws DimensionMismatch if U is not invariant.
template <ExactField F>
Matrix<F> restrict_operator(const Matrix<F>& m, const Subspace<F>& u);
/// The annihilator { w : w . u = 0 for all u in U } as a list of row functionals;
/// v lies in U iff every returned functional vanishes on v.
template <ExactField F>
std::vector<Vector<F>> annihilator(const Subspace<F>& u);

/// { w in W : m w in target for every m in ops }
template <ExactField F>
Subspace<F> constrained_subspace(const Subspace<F>& w, const std::vector<Matrix<F>>& ops, const Subspace<F>& target);

} // namespace leibniz

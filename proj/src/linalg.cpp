#include "leibniz/linalg.hpp"

#include <algorithm>

namespace leibniz {

namespace {

/// In-place reduction to reduced row-echelon form; zero rows are dropped.
template <ExactField F>
std::vector<std::size_t> echelonize(const F& f, std::vector<Vector<F>>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && f.is_zero(rows[sel][c])) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        if (!f.eq(rows[r][c], f.one())) {
            const auto inv = f.inv(rows[r][c]);
            for (auto& x : rows[r])
                if (!f.is_zero(x)) x = f.mul(x, inv);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || f.is_zero(rows[i][c])) continue;
            const auto factor = f.neg(rows[i][c]);
            axpy(f, rows[i], factor, rows[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace

// ---------------------------------------------------------------- Matrix

template <ExactField F>
Matrix<F> Matrix<F>::identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

template <ExactField F>
Matrix<F> Matrix<F>::from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length differs from column count");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

template <ExactField F>
Matrix<F> Matrix<F>::from_columns(const F& field, std::size_t rows, const std::vector<Vector<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw Error(ErrorKind::ShapeMismatch, "column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

template <ExactField F>
Vector<F> Matrix<F>::row(std::size_t r) const {
    return Vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

template <ExactField F>
Vector<F> Matrix<F>::column(std::size_t c) const {
    Vector<F> v(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

template <ExactField F>
std::vector<Vector<F>> Matrix<F>::row_list() const {
    std::vector<Vector<F>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

template <ExactField F>
std::vector<Vector<F>> Matrix<F>::column_list() const {
    std::vector<Vector<F>> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

template <ExactField F>
bool Matrix<F>::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const value_type& x) { return field_.is_zero(x); });
}

template <ExactField F>
Rref<F> rref(const Matrix<F>& m) {
    auto rows = m.row_list();
    auto pivots = echelonize(m.field(), rows, m.cols());
    Matrix<F> reduced(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = rows[r][c];
    return {std::move(reduced), std::move(pivots)};
}

template <ExactField F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shapes");
    const F& f = a.field();
    Matrix<F> out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& x = a(i, k);
            if (f.is_zero(x)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!f.is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
    return out;
}

template <ExactField F>
Vector<F> mat_vec(const Matrix<F>& a, const Vector<F>& v) {
    if (a.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matrix-vector shapes");
    const F& f = a.field();
    Vector<F> out(a.rows(), f.zero());
    for (std::size_t k = 0; k < a.cols(); ++k) {
        if (f.is_zero(v[k])) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!f.is_zero(a(i, k))) out[i] = f.add(out[i], f.mul(a(i, k), v[k]));
    }
    return out;
}

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& a) {
    Matrix<F> t(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

template <ExactField F>
Matrix<F> power(const Matrix<F>& a, std::size_t k) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "power of a non-square matrix");
    Matrix<F> result = Matrix<F>::identity(a.field(), a.rows());
    Matrix<F> base = a;
    while (k) {
        if (k & 1) result = multiply(result, base);
        k >>= 1;
        if (k) base = multiply(base, base);
    }
    return result;
}

template <ExactField F>
typename F::value_type determinant(const Matrix<F>& a) {
    if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    const F& f = a.field();
    auto rows = a.row_list();
    const std::size_t n = rows.size();
    auto det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && f.is_zero(rows[sel][c])) ++sel;
        if (sel == n) return f.zero();
        if (sel != c) {
            std::swap(rows[sel], rows[c]);
            det = f.neg(det);
        }
        det = f.mul(det, rows[c][c]);
        const auto inv = f.inv(rows[c][c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (f.is_zero(rows[r][c])) continue;
            const auto factor = f.neg(f.mul(rows[r][c], inv));
            axpy(f, rows[r], factor, rows[c]);
        }
    }
    return det;
}

template <ExactField F>
std::size_t rank(const Matrix<F>& a) {
    auto rows = a.row_list();
    return echelonize(a.field(), rows, a.cols()).size();
}

template <ExactField F>
bool is_nilpotent(const Matrix<F>& a) {
    return power(a, a.rows()).is_zero();
}

// ---------------------------------------------------------------- Subspace

template <ExactField F>
Subspace<F> Subspace<F>::span(const F& field, std::size_t ambient, std::vector<Vector<F>> generators) {
    for (const auto& g : generators)
        if (g.size() != ambient) throw Error(ErrorKind::AmbientMismatch, "generator length differs from ambient dimension");
    Subspace s(field, ambient);
    s.pivots_ = echelonize(field, generators, ambient);
    s.basis_ = std::move(generators);
    return s;
}

template <ExactField F>
Subspace<F> Subspace<F>::full(const F& field, std::size_t ambient) {
    Subspace s(field, ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vector(field, ambient, i));
        s.pivots_.push_back(i);
    }
    return s;
}

template <ExactField F>
Subspace<F> Subspace<F>::from_echelon(const F& field, std::size_t ambient, std::vector<Vector<F>> rows,
                                      std::vector<std::size_t> pivots) {
    Subspace s(field, ambient);
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
}

template <ExactField F>
std::vector<std::size_t> Subspace<F>::non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c) {
            ++p;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

template <ExactField F>
Vector<F> Subspace<F>::reduce(Vector<F> v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto c = v[pivots_[i]];
        if (!field_.is_zero(c)) axpy(field_, v, field_.neg(c), basis_[i]);
    }
    return v;
}

template <ExactField F>
bool Subspace<F>::contains(const Vector<F>& v) const {
    if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
    if (basis_.size() == ambient_) return true;
    return is_zero_vector(field_, reduce(v));
}

template <ExactField F>
bool Subspace<F>::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::AmbientMismatch, "subspaces of different ambient spaces");
    if (other.dim() > dim()) return false;
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

template <ExactField F>
Vector<F> Subspace<F>::coordinates(const Vector<F>& v) const {
    if (!contains(v)) throw Error(ErrorKind::NoSolution, "vector is not in the subspace");
    Vector<F> c(basis_.size(), field_.zero());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

template <ExactField F>
Matrix<F> Subspace<F>::embedding() const {
    return Matrix<F>::from_columns(field_, ambient_, basis_);
}

template <ExactField F>
bool canonical_less(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
    return a.basis() < b.basis();
}

template <ExactField F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient() != v.ambient()) throw Error(ErrorKind::AmbientMismatch, "sum of subspaces of different ambient spaces");
    if (v.is_zero() || u.is_full()) return u;
    if (u.is_zero() || v.is_full()) return v;
    std::vector<Vector<F>> gens = u.basis();
    gens.insert(gens.end(), v.basis().begin(), v.basis().end());
    return Subspace<F>::span(u.field(), u.ambient(), std::move(gens));
}

template <ExactField F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient() != v.ambient())
        throw Error(ErrorKind::AmbientMismatch, "intersection of subspaces of different ambient spaces");
    if (u.is_full()) return v;
    if (v.is_full()) return u;
    const F& f = u.field();
    if (u.is_zero() || v.is_zero()) return Subspace<F>(f, u.ambient());
    // Solve sum a_i u_i - sum b_j v_j = 0; the a-part spans the intersection.
    const std::size_t n = u.ambient(), du = u.dim(), dv = v.dim();
    Matrix<F> m(f, n, du + dv);
    for (std::size_t i = 0; i < du; ++i)
        for (std::size_t r = 0; r < n; ++r) m(r, i) = u.vector(i)[r];
    for (std::size_t j = 0; j < dv; ++j)
        for (std::size_t r = 0; r < n; ++r) m(r, du + j) = f.neg(v.vector(j)[r]);
    const Subspace<F> rel = kernel(m);
    std::vector<Vector<F>> gens;
    for (const auto& coeffs : rel.basis()) {
        Vector<F> x = zero_vector(f, n);
        for (std::size_t i = 0; i < du; ++i) axpy(f, x, coeffs[i], u.vector(i));
        gens.push_back(std::move(x));
    }
    return Subspace<F>::span(f, n, std::move(gens));
}

template <ExactField F>
Subspace<F> kernel(const Matrix<F>& m) {
    const F& f = m.field();
    auto rows = m.row_list();
    const auto pivots = echelonize(f, rows, m.cols());
    std::vector<Vector<F>> gens;
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (p < pivots.size() && pivots[p] == c) {
            ++p;
            continue;
        }
        Vector<F> x = zero_vector(f, m.cols());
        x[c] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(rows[r][c]);
        gens.push_back(std::move(x));
    }
    return Subspace<F>::span(f, m.cols(), std::move(gens));
}

template <ExactField F>
Subspace<F> image(const Matrix<F>& m) {
    return Subspace<F>::span(m.field(), m.rows(), m.column_list());
}

template <ExactField F>
Subspace<F> generalized_kernel(const Matrix<F>& m, std::size_t pw) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "generalized kernel of a non-square matrix");
    if (pw == 0) throw Error(ErrorKind::ShapeMismatch, "generalized kernel needs power >= 1");
    return kernel(power(m, pw));
}

template <ExactField F>
Vector<F> solve(const Matrix<F>& m, const Vector<F>& rhs) {
    if (rhs.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length");
    const F& f = m.field();
    std::vector<Vector<F>> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector<F> row = m.row(r);
        row.push_back(rhs[r]);
        rows.push_back(std::move(row));
    }
    const auto pivots = echelonize(f, rows, m.cols() + 1);
    if (!pivots.empty() && pivots.back() == m.cols()) throw Error(ErrorKind::NoSolution, "inconsistent linear system");
    Vector<F> x = zero_vector(f, m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][m.cols()];
    return x;
}

template <ExactField F>
Subspace<F> map_subspace(const Matrix<F>& m, const Subspace<F>& u) {
    if (m.cols() != u.ambient()) throw Error(ErrorKind::ShapeMismatch, "operator and subspace shapes");
    std::vector<Vector<F>> gens;
    for (const auto& v : u.basis()) gens.push_back(mat_vec(m, v));
    return Subspace<F>::span(m.field(), m.rows(), std::move(gens));
}

template <ExactField F>
Matrix<F> restrict_operator(const Matrix<F>& m, const Subspace<F>& u) {
    if (!m.is_square() || m.cols() != u.ambient()) throw Error(ErrorKind::ShapeMismatch, "operator and subspace shapes");
    std::vector<Vector<F>> cols;
    for (const auto& v : u.basis()) {
        const Vector<F> image_v = mat_vec(m, v);
        if (!u.contains(image_v)) throw Error(ErrorKind::DimensionMismatch, "subspace is not invariant under the operator");
        cols.push_back(u.coordinates(image_v));
    }
    return Matrix<F>::from_columns(m.field(), u.dim(), cols);
}

template <ExactField F>
std::vector<Vector<F>> annihilator(const Subspace<F>& u) {
    const Matrix<F> m = Matrix<F>::from_rows(u.field(), u.ambient(), u.basis());
    return kernel(m).basis();
}

template <ExactField F>
Subspace<F> constrained_subspace(const Subspace<F>& w, const std::vector<Matrix<F>>& ops, const Subspace<F>& target) {
    const F& f = w.field();
    if (w.is_zero() || target.is_full() || ops.empty()) return w;
    const auto functionals = annihilator(target);
    // Rows over the coordinates c of w = sum c_j w_j: phi(m w_j).
    std::vector<Vector<F>> rows;
    for (const auto& m : ops) {
        std::vector<Vector<F>> images;
        for (const auto& v : w.basis()) images.push_back(mat_vec(m, v));
        for (const auto& phi : functionals) {
            Vector<F> row(w.dim(), f.zero());
            for (std::size_t j = 0; j < w.dim(); ++j)
                for (std::size_t c = 0; c < phi.size(); ++c)
                    if (!f.is_zero(phi[c]) && !f.is_zero(images[j][c]))
                        row[j] = f.add(row[j], f.mul(phi[c], images[j][c]));
            if (!is_zero_vector(f, row)) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return w;
    const Subspace<F> coeffs = kernel(Matrix<F>::from_rows(f, w.dim(), rows));
    std::vector<Vector<F>> gens;
    for (const auto& c : coeffs.basis()) {
        Vector<F> x = zero_vector(f, w.ambient());
        for (std::size_t j = 0; j < w.dim(); ++j) axpy(f, x, c[j], w.vector(j));
        gens.push_back(std::move(x));
    }
    return Subspace<F>::span(f, w.ambient(), std::move(gens));
}

#define LEIBNIZ_INSTANTIATE_LINALG(F)                                                   \
    template class Matrix<F>;                                                           \
    template class Subspace<F>;                                                         \
    template Rref<F> rref(const Matrix<F>&);                                            \
    template Matrix<F> multiply(const Matrix<F>&, const Matrix<F>&);                    \
    template Vector<F> mat_vec(const Matrix<F>&, const Vector<F>&);                       \
    template Matrix<F> transpose(const Matrix<F>&);                                     \
    template Matrix<F> power(const Matrix<F>&, std::size_t);                            \
    template typename F::value_type determinant(const Matrix<F>&);                      \
    template std::size_t rank(const Matrix<F>&);                                        \
    template bool is_nilpotent(const Matrix<F>&);                                       \
    template bool canonical_less(const Subspace<F>&, const Subspace<F>&);               \
    template Subspace<F> sum(const Subspace<F>&, const Subspace<F>&);                   \
    template Subspace<F> intersect(const Subspace<F>&, const Subspace<F>&);             \
    template Subspace<F> kernel(const Matrix<F>&);                                      \
    template Subspace<F> image(const Matrix<F>&);                                       \
    template Subspace<F> generalized_kernel(const Matrix<F>&, std::size_t);             \
    template Vector<F> solve(const Matrix<F>&, const Vector<F>&);                       \
    template Subspace<F> map_subspace(const Matrix<F>&, const Subspace<F>&);            \
    template Matrix<F> restrict_operator(const Matrix<F>&, const Subspace<F>&);         \
    template std::vector<Vector<F>> annihilator(const Subspace<F>&);                   \
    template Subspace<F> constrained_subspace(const Subspace<F>&, const std::vector<Matrix<F>>&, const Subspace<F>&);

LEIBNIZ_INSTANTIATE_LINALG(Rationals)
LEIBNIZ_INSTANTIATE_LINALG(GaloisField)

} // namespace leibniz

#include "leibniz/enumerate.hpp"

#include <limits>
#include <type_traits>

namespace leibniz {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

/// Odometer step, last digit fastest; false once every digit wrapped around.
bool advance(std::vector<std::uint32_t>& digits, std::uint64_t q) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        if (++digits[t] < q) return true;
        digits[t] = 0;
    }
    return false;
}

} // namespace

std::uint64_t subspace_count(std::uint64_t q, std::size_t n) {
    // Gaussian binomials via [m, d] = [m-1, d-1] + q^d [m-1, d].
    std::vector<std::uint64_t> row{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::uint64_t> next(m + 1, 0);
        std::uint64_t qd = 1;
        for (std::size_t d = 0; d <= m; ++d) {
            const std::uint64_t left = d > 0 ? row[d - 1] : 0;
            const std::uint64_t right = d < m ? sat_mul(qd, row[d]) : 0;
            next[d] = sat_add(left, right);
            qd = sat_mul(qd, q);
        }
        row = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto c : row) total = sat_add(total, c);
    return total;
}

template <ExactField F>
void for_each_subspace(const F& field, std::size_t n, std::uint64_t budget,
                       const std::function<bool(const Subspace<F>&)>& visit) {
    if constexpr (!std::is_same_v<F, GaloisField>) {
        (void)n, (void)budget, (void)visit;
        throw Error(ErrorKind::InfiniteFieldUnsupported, "subspace enumeration needs a finite field, got " + field.name());
    } else {
        const std::uint64_t q = field.order();
        const std::uint64_t total = subspace_count(q, n);
        if (total > budget)
            throw Error(ErrorKind::BudgetExceeded, std::to_string(total) + " subspaces of " + field.name() + "^" +
                                                       std::to_string(n) + " exceed the budget of " +
                                                       std::to_string(budget));
        for (std::size_t d = 0; d <= n; ++d) {
            std::vector<std::size_t> piv(d);
            for (std::size_t i = 0; i < d; ++i) piv[i] = i;
            for (;;) {
                // Free positions, row-major: (row, column) with column > pivot, not a pivot column.
                std::vector<std::pair<std::size_t, std::size_t>> free;
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t c = piv[r] + 1, p = r + 1; c < n; ++c) {
                        if (p < d && piv[p] == c) {
                            ++p;
                            continue;
                        }
                        free.emplace_back(r, c);
                    }
                std::vector<std::uint32_t> digits(free.size(), 0);
                do {
                    std::vector<Vector<F>> rows(d, Vector<F>(n, 0));
                    for (std::size_t r = 0; r < d; ++r) rows[r][piv[r]] = 1;
                    for (std::size_t t = 0; t < free.size(); ++t) rows[free[t].first][free[t].second] = digits[t];
                    if (!visit(Subspace<F>::from_echelon(field, n, std::move(rows), piv))) return;
                } while (advance(digits, q));
                // Next pivot combination in lexicographic order.
                std::size_t i = d;
                while (i > 0 && piv[i - 1] == n - d + i - 1) --i;
                if (i == 0) break;
                ++piv[i - 1];
                for (std::size_t j = i; j < d; ++j) piv[j] = piv[j - 1] + 1;
            }
        }
    }
}

template <ExactField F>
std::vector<SubHandle<F>> enumerate(EnumKind kind, const Algebra<F>& L, std::uint64_t budget) {
    std::vector<SubHandle<F>> out;
    for_each_subspace<F>(L.field(), L.dim(), budget, [&](const Subspace<F>& U) {
        bool keep = true;
        if (kind == EnumKind::subalgebras) keep = is_subalgebra(L, U);
        if (kind == EnumKind::ideals) keep = is_ideal(L, U);
        if (keep) out.push_back(make_handle(L, U));
        return true;
    });
    return out;
}

template <ExactField F>
Lattice<F> build_lattice(const Algebra<F>& L, std::uint64_t budget) {
    Lattice<F> lat;
    for_each_subspace<F>(L.field(), L.dim(), budget, [&](const Subspace<F>& U) {
        ++lat.visited;
        if (!is_subalgebra(L, U)) return true;
        lat.subalgebras.push_back(U);
        if (is_ideal(L, U)) lat.ideals.push_back(U);
        return true;
    });
    return lat;
}

template <ExactField F>
SocleAnalysis<F> socle_analysis(const Algebra<F>& L, const Lattice<F>& lattice) {
    SocleAnalysis<F> out{{}, L.zero(), false, std::nullopt};
    for (const auto& I : lattice.ideals) {
        if (I.is_zero()) continue;
        bool minimal = true;
        for (const auto& J : lattice.ideals) {
            if (J.dim() >= I.dim()) break;
            if (!J.is_zero() && I.contains(J)) {
                minimal = false;
                break;
            }
        }
        if (!minimal) continue;
        out.minimal_ideals.push_back(I);
        if (is_abelian(L, I)) out.asoc = sum(out.asoc, I);
    }
    out.monolithic = out.minimal_ideals.size() == 1;
    if (out.monolithic) out.monolith = out.minimal_ideals.front();
    return out;
}

template <ExactField F>
FrattiniResult<F> frattini_ideal(const Algebra<F>& L, const Lattice<F>& lattice) {
    FrattiniResult<F> out{L.zero(), L.whole(), {}, false};
    const std::size_t n = L.dim();
    for (const auto& S : lattice.subalgebras) {
        if (S.dim() == n) continue;
        bool maximal = true;
        for (const auto& T : lattice.subalgebras) {
            if (T.dim() <= S.dim() || T.dim() == n) continue;
            if (T.contains(S)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.maximal_subalgebras.push_back(S);
    }
    if (out.maximal_subalgebras.empty()) out.intersection = L.zero();
    for (const auto& M : out.maximal_subalgebras) out.intersection = intersect(out.intersection, M);
    out.intersection_is_ideal = is_ideal(L, out.intersection);
    if (out.intersection_is_ideal) {
        out.ideal = out.intersection;
    } else {
        for (const auto& I : lattice.ideals)
            if (out.intersection.contains(I)) out.ideal = sum(out.ideal, I);
    }
    return out;
}

template <ExactField F>
std::vector<Subspace<F>> maximal_nilpotent_subalgebras(const Algebra<F>& L, const Lattice<F>& lattice) {
    std::vector<Subspace<F>> nil;
    for (const auto& S : lattice.subalgebras)
        if (is_nilpotent_sub(L, S)) nil.push_back(S);
    std::vector<Subspace<F>> out;
    for (const auto& S : nil) {
        bool maximal = true;
        for (const auto& T : nil)
            if (T.dim() > S.dim() && T.contains(S)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(S);
    }
    return out;
}

#define LEIBNIZ_INSTANTIATE_ENUMERATE(F)                                                                   \
    template void for_each_subspace(const F&, std::size_t, std::uint64_t,                                  \
                                    const std::function<bool(const Subspace<F>&)>&);                       \
    template std::vector<SubHandle<F>> enumerate(EnumKind, const Algebra<F>&, std::uint64_t);              \
    template Lattice<F> build_lattice(const Algebra<F>&, std::uint64_t);                                   \
    template SocleAnalysis<F> socle_analysis(const Algebra<F>&, const Lattice<F>&);                        \
    template FrattiniResult<F> frattini_ideal(const Algebra<F>&, const Lattice<F>&);                       \
    template std::vector<Subspace<F>> maximal_nilpotent_subalgebras(const Algebra<F>&, const Lattice<F>&);

LEIBNIZ_INSTANTIATE_ENUMERATE(Rationals)
LEIBNIZ_INSTANTIATE_ENUMERATE(GaloisField)

} // namespace leibniz

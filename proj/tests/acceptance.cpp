// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leibniz/corpus.hpp"

using namespace leibniz;

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kCorpusSeconds = 10.0;
constexpr double kSweepSeconds = 60.0;
constexpr std::size_t kSweepMaxN = 4;
constexpr std::size_t kFittingPairs = 200;
constexpr std::size_t kMaxTriples = 500;
constexpr std::size_t kTriplesPerAlgebra = 3;
constexpr std::uint64_t kSeed = 20240611;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void print(int id, const std::string& name, const Outcome& o) {
    std::printf("criterion %2d  %-32s %s  %s\n", id, name.c_str(), o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

struct Failures {
    std::size_t count = 0;
    std::vector<std::string> names;
    void add(const std::string& name) {
        ++count;
        if (names.size() < 3) names.push_back(name);
    }
    std::string describe() const {
        if (count == 0) return "";
        std::string s = "; first:";
        for (const auto& n : names) s += " " + n;
        return s;
    }
};

template <ExactField F>
typename F::value_type random_scalar(const F& f, std::mt19937_64& rng) {
    if constexpr (std::is_same_v<F, GaloisField>) {
        return std::uniform_int_distribution<std::uint32_t>(0, std::uint32_t(f.order() - 1))(rng);
    } else {
        return f.from_int(std::uniform_int_distribution<long>(-3, 3)(rng));
    }
}

template <ExactField F>
Vector<F> random_vector(const F& f, std::size_t n, std::mt19937_64& rng) {
    Vector<F> v(n, f.zero());
    for (auto& c : v) c = random_scalar(f, rng);
    return v;
}

// Centre of a subalgebra S computed inside S itself and mapped back into L.
template <ExactField F>
Subspace<F> centre_of(const Algebra<F>& L, const Subspace<F>& S) {
    if (S.is_zero()) return S;
    const Restriction<F> R = restrict_to(L, S);
    return map_subspace(R.embedding, centre(R.algebra).carrier);
}

bool all_sorted_equal(auto a, auto b) {
    auto less = [](const auto& x, const auto& y) { return canonical_less(x, y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

// ---------------------------------------------------------------- criterion 1

Outcome leibniz_validity(const std::vector<CorpusEntry>& corpus, double generation_seconds) {
    const auto t0 = Clock::now();
    Failures bad, companion_bad, roundtrip_bad;
    for (const auto& e : corpus) {
        std::visit(
            [&](const auto& L) {
                using F = std::decay_t<decltype(L.field())>;
                if (verify_leibniz(L)) bad.add(e.name);
                const AnyAlgebra back = parse_algebra(serialize_algebra(e.algebra), Checked::no);
                const auto* same = std::get_if<Algebra<F>>(&back);
                if (!same || !(*same == L)) roundtrip_bad.add(e.name);
                if (!e.cyclic.is_null()) {
                    CyclicSpec<F> spec{L.field(), e.cyclic["n"].template get<std::size_t>(), {}};
                    for (const auto& a : e.cyclic["alphas"]) spec.alphas.push_back(L.field().parse(a.template get<std::string>()));
                    if (!(mult_operator(L, L.basis_vector(0), Side::right) == companion_matrix(cyclic_polynomial(spec))))
                        companion_bad.add(e.name);
                }
            },
            e.algebra);
    }
    const double total = generation_seconds + seconds_since(t0);
    Outcome o;
    o.pass = bad.count == 0 && companion_bad.count == 0 && roundtrip_bad.count == 0 && total < kCorpusSeconds;
    o.detail = std::to_string(corpus.size() - bad.count) + "/" + std::to_string(corpus.size()) +
               " pass the identity, " + std::to_string(companion_bad.count) + " companion mismatches, " +
               std::to_string(roundtrip_bad.count) + " round-trip mismatches, " + fmt_seconds(total) + " (limit " +
               fmt_seconds(kCorpusSeconds) + ")" + bad.describe() + companion_bad.describe() + roundtrip_bad.describe();
    return o;
}

// ---------------------------------------------------------------- criteria 2-4

struct SweepOutcome {
    Outcome a_property, monolithic, phi_free;
};

SweepOutcome cyclic_sweeps() {
    const auto t0 = Clock::now();
    std::size_t total = 0, sub = 0;
    Failures a_bad, mono_bad, phi_bad;
    for (const char* tag : {"gf2", "gf3"}) {
        const GaloisField f = std::get<GaloisField>(parse_field(tag));
        for (const auto& spec : cyclic_sweep(f, kSweepMaxN)) {
            ++total;
            const Algebra<GaloisField> L = build_cyclic(spec);
            const auto lattice = build_lattice(L);
            const bool alpha2 = !f.is_zero(spec.alphas[0]);
            const std::string name = std::string(tag) + ":n" + std::to_string(spec.n) + ":" + [&] {
                std::string s;
                for (auto a : spec.alphas) s += f.to_string(a);
                return s;
            }();
            if ((exhaustive_verdict(L, lattice).value == Verdict::yes) != alpha2) a_bad.add(name);
            if (!alpha2) continue;
            ++sub;
            const Poly<GaloisField> p = cyclic_polynomial(spec);
            const auto fac = poly_factor(p);
            const auto soc = socle_analysis(L, lattice);
            if (soc.monolithic != (fac.factors.size() == 2)) mono_bad.add(name);
            const auto qr = divmod(p, Poly<GaloisField>::x(f));
            const bool x_times_irreducible = qr.remainder.is_zero() && is_irreducible(qr.quotient);
            const bool phi_free = frattini_ideal(L, lattice).ideal.is_zero();
            if ((soc.monolithic && phi_free) != x_times_irreducible) phi_bad.add(name);
        }
    }
    const double secs = seconds_since(t0);
    SweepOutcome out;
    out.a_property.pass = a_bad.count == 0 && secs < kSweepSeconds;
    out.a_property.detail = std::to_string(total - a_bad.count) + "/" + std::to_string(total) +
                            " cyclic algebras over GF(2), GF(3) with n <= " + std::to_string(kSweepMaxN) +
                            " agree, " + fmt_seconds(secs) + " (limit " + fmt_seconds(kSweepSeconds) + ")" +
                            a_bad.describe();
    out.monolithic.pass = mono_bad.count == 0;
    out.monolithic.detail =
        std::to_string(sub - mono_bad.count) + "/" + std::to_string(sub) + " with α₂ ≠ 0 agree" + mono_bad.describe();
    out.phi_free.pass = phi_bad.count == 0;
    out.phi_free.detail =
        std::to_string(sub - phi_bad.count) + "/" + std::to_string(sub) + " with α₂ ≠ 0 agree" + phi_bad.describe();
    return out;
}

// ---------------------------------------------------------------- criteria 5-10, 12, 13

struct Tally {
    std::size_t a_certified = 0;
    Failures series_bad;
    std::size_t solvable_a = 0;
    Failures centre_bad;
    std::size_t split_checked = 0, ideals_checked = 0;
    Failures split_bad;
    std::size_t cs_a = 0;
    Failures ss_bad;
    std::size_t maxn_checked = 0, maxn_subalgebras = 0, monolithic_checked = 0;
    Failures maxn_bad;
    std::size_t monolithic_square_zero = 0;
    std::size_t compared = 0;
    Failures contradictions;
    std::size_t triples = 0;
    Failures leftideal_bad;
    std::size_t probed = 0;
    std::vector<std::string> findings;
    Failures char0_bad;
};

template <ExactField F>
void check_split(const std::string& name, const Analysis<F>& ctx, Tally& t) {
    const Algebra<F>& L = ctx.L;
    ++t.split_checked;
    if (!ctx.triangular) {
        t.split_bad.add(name + "(no decomposition: " + ctx.triangular_note + ")");
        return;
    }
    const auto& A = ctx.triangular->components;
    const auto& D = ctx.triangular->derived;
    const std::size_t n = A.size() - 1;
    bool ok = D.size() == n + 1;
    const auto derived = series(L, SeriesKind::derived);
    for (std::size_t i = 0; ok && i <= n; ++i) {
        ok = ok && D[i] == derived.terms[i] && is_subalgebra(L, A[i]) && is_abelian(L, A[i]);
        Subspace<F> acc(L.field(), L.dim());
        std::size_t dims = 0;
        for (std::size_t j = i; j <= n; ++j) {
            acc = sum(acc, A[j]);
            dims += A[j].dim();
        }
        ok = ok && acc == D[i] && dims == D[i].dim();
    }
    if (!ok) {
        t.split_bad.add(name + "(triangular)");
        return;
    }
    for (const auto& K : ctx.lattice->ideals) {
        ++t.ideals_checked;
        Subspace<F> acc(L.field(), L.dim());
        std::size_t dims = 0;
        for (const auto& Ai : A) {
            const auto piece = intersect(K, Ai);
            acc = sum(acc, piece);
            dims += piece.dim();
        }
        if (!(acc == K) || dims != K.dim()) {
            t.split_bad.add(name + "(ideal)");
            return;
        }
    }
    const Subspace<F>& N = ctx.nilradical->subspace;
    for (std::size_t i = 0; i <= n; ++i)
        if (!(centre_of(L, D[i]) == intersect(N, A[i]))) {
            t.split_bad.add(name + "(centre of L^(" + std::to_string(i) + "))");
            return;
        }
    for (const auto& M : ctx.socle->minimal_ideals) {
        bool found = false;
        for (std::size_t i = 0; i <= n && !found; ++i) found = intersect(N, A[i]).contains(M);
        if (!found) {
            t.split_bad.add(name + "(minimal ideal)");
            return;
        }
    }
}

template <ExactField F>
void check_max_nilpotent(const std::string& name, const Analysis<F>& ctx, Tally& t) {
    const Algebra<F>& L = ctx.L;
    ++t.maxn_checked;
    const auto maxn = maximal_nilpotent_subalgebras(L, *ctx.lattice);
    const auto cartans = cartan_subalgebras(L, *ctx.lattice);
    for (const auto& U : maxn) {
        ++t.maxn_subalgebras;
        const auto US = intersect(U, ctx.square);
        bool split = false;
        for (const auto& C : cartans) {
            const auto UC = intersect(U, C);
            if (sum(US, UC) == U && US.dim() + UC.dim() == U.dim()) {
                split = true;
                break;
            }
        }
        if (!split) {
            t.maxn_bad.add(name + "(splitting)");
            return;
        }
    }
    if (ctx.socle->monolithic) {
        ++t.monolithic_checked;
        auto expected = cartans;
        expected.push_back(ctx.square);
        if (!all_sorted_equal(maxn, expected)) {
            t.maxn_bad.add(name + "(monolithic set)");
            if (ctx.square.is_zero()) ++t.monolithic_square_zero;
        }
    }
}

template <ExactField F>
void check_left_ideal(const std::string& name, const Analysis<F>& ctx, std::mt19937_64& rng, Tally& t) {
    const Algebra<F>& L = ctx.L;
    std::vector<Subspace<F>> abelian;
    for (const auto& I : ctx.lattice->ideals)
        if (is_abelian(L, I)) abelian.push_back(I);
    if (abelian.empty()) return;
    std::vector<Vector<F>> xs;
    for (const auto& x : sample_elements(L.whole(), SearchOptions{kSeed, 4096, 16})) xs.push_back(x);
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t a = 0; a < abelian.size(); ++a)
        for (std::size_t k = 0; k < xs.size(); ++k)
            if (abelian[a].contains(L.multiply(xs[k], xs[k]))) candidates.emplace_back(a, k);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (std::size_t c = 0; c < candidates.size() && c < kTriplesPerAlgebra && t.triples < kMaxTriples; ++c) {
        ++t.triples;
        const auto& A = abelian[candidates[c].first];
        const auto& x = xs[candidates[c].second];
        const Matrix<F> Lx = mult_operator(L, x, Side::left);
        const Matrix<F> Rx = mult_operator(L, x, Side::right);
        Subspace<F> left = map_subspace(Lx, A), right = A;
        bool ok = right.contains(left);
        for (std::size_t k = 2; ok && k <= L.dim(); ++k) {
            left = map_subspace(Lx, left);
            right = map_subspace(Rx, right);
            ok = right.contains(left);
        }
        if (!ok) t.leftideal_bad.add(name);
    }
}

template <ExactField F>
void corpus_member(const std::string& name, const Algebra<F>& L, std::mt19937_64& rng, Tally& t) {
    const SearchOptions opts{kSeed, kDefaultBudget, 64};
    const Analysis<F> ctx = Analysis<F>::build(L, opts);
    const AVerdict<F> verdict = is_a_algebra(ctx);
    const bool a = verdict.value == Verdict::yes;
    const Subspace<F> square = product_space(L, L.whole(), L.whole());
    const Subspace<F> Z = centre(L).carrier;

    if (ctx.lattice) {
        ++t.compared;
        const AVerdict<F> quick = shortcut_verdict(L, opts);
        const bool clash = (quick.value == Verdict::yes && verdict.value == Verdict::no) ||
                           (quick.value == Verdict::no && verdict.value == Verdict::yes);
        if (clash) t.contradictions.add(name + "(" + quick.method + ")");
        if (t.triples < kMaxTriples) check_left_ideal(name, ctx, rng, t);
    }
    if (!a) return;
    ++t.a_certified;

    const auto derived = series(L, SeriesKind::derived);
    const auto lower = series(L, SeriesKind::lower_nilpotent);
    if (derived.terms != lower.terms) t.series_bad.add(name);

    if (!ctx.pred.is_solvable) return;
    ++t.solvable_a;
    if (!intersect(Z, square).is_zero()) t.centre_bad.add(name);

    ++t.probed;
    const std::size_t length = ctx.pred.derived_length.value_or(0);
    if (length >= 4) t.findings.push_back(name + " has derived length " + std::to_string(length));
    if (!L.field().is_finite() && length > 2) t.char0_bad.add(name);

    if (ctx.lattice) check_split(name, ctx, t);

    if (!ctx.pred.is_completely_solvable) return;
    ++t.cs_a;
    if (ctx.nilradical_exact()) {
        const Subspace<F>& N = ctx.nilradical->subspace;
        if (!(N == sum(square, Z)) || !independent(square, Z)) t.ss_bad.add(name);
    } else {
        t.ss_bad.add(name + "(nilradical not exact)");
    }
    if (ctx.lattice) check_max_nilpotent(name, ctx, t);
}

// ---------------------------------------------------------------- criterion 11

template <ExactField F>
bool fitting_holds(const Algebra<F>& L, const Vector<F>& x) {
    const Matrix<F> T = mult_operator(L, x, Side::right);
    const FittingPair<F> fp = fitting(T);
    const std::size_t n = L.dim();
    if (fp.null_part.dim() + fp.one_part.dim() != n || !sum(fp.null_part, fp.one_part).is_full()) return false;
    if (!fp.null_part.contains(map_subspace(T, fp.null_part))) return false;
    if (!fp.one_part.contains(map_subspace(T, fp.one_part))) return false;
    const Matrix<F> Tn = power(T, n);
    for (const auto& v : fp.null_part.basis())
        if (!is_zero_vector(L.field(), mat_vec(Tn, v))) return false;
    if (!fp.one_part.is_zero()) {
        const Matrix<F> T1 = restrict_operator(T, fp.one_part);
        if (L.field().is_zero(determinant(T1))) return false;
    }
    return true;
}

Outcome fitting_pairs(const std::vector<CorpusEntry>& corpus) {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    Failures bad;
    std::size_t nontrivial = 0;
    for (std::size_t t = 0; t < kFittingPairs; ++t) {
        const CorpusEntry& e = corpus[pick(rng)];
        std::visit(
            [&](const auto& L) {
                const auto x = random_vector(L.field(), L.dim(), rng);
                const auto T = mult_operator(L, x, Side::right);
                if (!T.is_zero() && !is_nilpotent(T)) ++nontrivial;
                if (!fitting_holds(L, x)) bad.add(e.name);
            },
            e.algebra);
    }
    Outcome o;
    o.pass = bad.count == 0;
    o.detail = std::to_string(kFittingPairs - bad.count) + "/" + std::to_string(kFittingPairs) + " pairs (seed " +
               std::to_string(kSeed) + ", " + std::to_string(nontrivial) + " with both parts nonzero or R_x invertible)" +
               bad.describe();
    return o;
}

} // namespace

int main() {
    std::printf("acceptance run, seed %llu\n", static_cast<unsigned long long>(kSeed));

    const auto t0 = Clock::now();
    const std::vector<CorpusEntry> corpus = generate_corpus();
    const double generation = seconds_since(t0);
    print(1, "leibniz_validity", leibniz_validity(corpus, generation));

    const SweepOutcome sweep = cyclic_sweeps();
    print(2, "cyclic_a_iff_alpha2", sweep.a_property);
    print(3, "cyclic_monolithic_iff_two_factors", sweep.monolithic);
    print(4, "cyclic_phi_free_monolithic", sweep.phi_free);

    const auto t1 = Clock::now();
    Tally t;
    std::mt19937_64 rng(kSeed);
    for (const auto& e : corpus) std::visit([&](const auto& L) { corpus_member(e.name, L, rng, t); }, e.algebra);
    const double corpus_seconds = seconds_since(t1);

    auto summary = [](std::size_t checked, const Failures& f, const std::string& what) {
        Outcome o;
        o.pass = f.count == 0;
        o.detail = std::to_string(checked - std::min(checked, f.count)) + "/" + std::to_string(checked) + " " + what +
                   f.describe();
        return o;
    };
    print(5, "derived_equals_lower_nilpotent", summary(t.a_certified, t.series_bad, "A-certified algebras"));
    print(6, "centre_meets_square", summary(t.solvable_a, t.centre_bad, "solvable A-certified algebras"));
    {
        Outcome o = summary(t.split_checked, t.split_bad, "finite-field solvable A-certified algebras");
        o.detail += ", " + std::to_string(t.ideals_checked) + " ideals split";
        print(7, "triangular_split", o);
    }
    print(8, "nilradical_square_plus_centre", summary(t.cs_a, t.ss_bad, "completely solvable A-certified algebras"));
    {
        Outcome o = summary(t.maxn_checked, t.maxn_bad, "finite-field completely solvable A-certified algebras");
        o.detail += ", " + std::to_string(t.maxn_subalgebras) + " maximal nilpotent subalgebras, " +
                    std::to_string(t.monolithic_checked) + " monolithic, " +
                    std::to_string(t.monolithic_square_zero) + " of the failures have L² = 0";
        print(9, "max_nilpotent_splitting", o);
    }
    {
        Outcome o;
        o.pass = t.contradictions.count == 0;
        o.detail = std::to_string(t.contradictions.count) + " contradictions over " + std::to_string(t.compared) +
                   " finite-field algebras" + t.contradictions.describe();
        print(10, "shortcut_matches_enumeration", o);
    }
    print(11, "fitting_decomposition", fitting_pairs(corpus));
    {
        Outcome o = summary(t.triples, t.leftideal_bad, "(algebra, abelian ideal, x) triples");
        o.detail += " (cap " + std::to_string(kMaxTriples) + ")";
        print(12, "left_powers_in_right_powers", o);
    }
    {
        Outcome o;
        o.pass = t.char0_bad.count == 0;
        o.detail = std::to_string(t.probed) + " solvable A-certified algebras probed, " +
                   std::to_string(t.findings.size()) + " with derived length >= 4, " +
                   std::to_string(t.char0_bad.count) + " over Q with derived length > 2" + t.char0_bad.describe();
        print(13, "derived_length_probe", o);
        for (const auto& f : t.findings) std::printf("    finding: %s\n", f.c_str());
    }
    std::printf("corpus pass over %zu algebras took %s\n", corpus.size(), fmt_seconds(corpus_seconds).c_str());
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

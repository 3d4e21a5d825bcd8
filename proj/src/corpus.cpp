#include "leibniz/corpus.hpp"

#include <random>
#include <set>

namespace leibniz {

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"A2", "r2", "H3", "sl2", "C2", "C3a", "C3b"};
    return names;
}

template <ExactField F>
Algebra<F> fixture(const std::string& name, const F& f) {
    auto table_from = [&](std::size_t n, std::vector<std::string> names,
                          std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, long>> entries) {
        std::vector<Vector<F>> table(n * n, zero_vector(f, n));
        for (const auto& [i, j, k, c] : entries) table[i * n + j][k] = f.from_int(c);
        return Algebra<F>::create(f, n, std::move(names), std::move(table));
    };
    auto cyclic = [&](std::size_t n, std::vector<long> alphas) {
        CyclicSpec<F> spec{f, n, {}};
        for (long a : alphas) spec.alphas.push_back(f.from_int(a));
        return build_cyclic(spec);
    };
    if (name == "A2") return Algebra<F>::abelian(f, 2, {"e1", "e2"});
    if (name == "r2") return table_from(2, {"e1", "e2"}, {{0, 1, 0, 1}, {1, 0, 0, -1}});
    if (name == "H3") return table_from(3, {"x", "y", "z"}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
    if (name == "sl2")
        return table_from(3, {"e", "f", "h"},
                          {{0, 1, 2, 1}, {1, 0, 2, -1}, {2, 0, 0, 2}, {0, 2, 0, -2}, {2, 1, 1, -2}, {1, 2, 1, 2}});
    if (name == "C2") return cyclic(2, {1});
    if (name == "C3a") return cyclic(3, {0, 1});
    if (name == "C3b") return cyclic(3, {1, 0});
    throw Error(ErrorKind::BadSpec, "unknown fixture '" + name + "'");
}

AnyAlgebra fixture(const std::string& name, const FieldDescriptor& field) {
    return std::visit([&](const auto& f) -> AnyAlgebra { return fixture(name, f); }, field);
}

std::vector<CyclicSpec<GaloisField>> cyclic_sweep(const GaloisField& field, std::size_t max_n) {
    std::vector<CyclicSpec<GaloisField>> out;
    const std::uint32_t q = field.order();
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::vector<std::uint32_t> alphas(n - 1, 0);
        for (;;) {
            out.push_back({field, n, alphas});
            std::size_t t = alphas.size();
            while (t > 0 && ++alphas[t - 1] == q) alphas[--t] = 0;
            if (t == 0) break;
        }
    }
    return out;
}

namespace {

std::string dedup_key(const AnyAlgebra& L) {
    json j = algebra_to_json(L);
    j.erase("basis_names");
    return j.dump();
}

template <ExactField F>
json cyclic_info(const CyclicSpec<F>& spec) {
    json alphas = json::array();
    for (const auto& a : spec.alphas) alphas.push_back(spec.field.to_string(a));
    return json{{"n", spec.n}, {"alphas", alphas}};
}

template <ExactField F>
std::string alpha_tag(const CyclicSpec<F>& spec) {
    std::string s;
    for (const auto& a : spec.alphas) s += (s.empty() ? "" : "-") + spec.field.to_string(a);
    return s;
}

} // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusLimits& limits) {
    std::vector<CorpusEntry> out;
    std::set<std::string> seen;
    auto push = [&](std::string name, std::string origin, AnyAlgebra L, json cyc = nullptr) {
        seen.insert(dedup_key(L));
        out.push_back({std::move(name), std::move(origin), std::move(L), std::move(cyc)});
    };

    for (const auto& tag : limits.fixture_fields) {
        const FieldDescriptor f = parse_field(tag);
        for (const auto& name : fixture_names()) push(name + "." + tag, "fixture", fixture(name, f));
    }
    for (const auto& tag : limits.sweep_fields) {
        const FieldDescriptor f = parse_field(tag);
        if (!std::holds_alternative<GaloisField>(f)) throw Error(ErrorKind::Usage, "cyclic sweeps need a finite field");
        for (const auto& spec : cyclic_sweep(std::get<GaloisField>(f), limits.max_cyclic_n))
            push("cyclic." + tag + ".n" + std::to_string(spec.n) + "." + alpha_tag(spec), "cyclic", build_cyclic(spec),
                 cyclic_info(spec));
    }
    for (const auto& tag : limits.sum_fields) {
        const FieldDescriptor f = parse_field(tag);
        const auto& names = fixture_names();
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i; j < names.size(); ++j) {
                AnyAlgebra L = std::visit(
                    [&](const auto& fld) -> AnyAlgebra { return direct_sum(fixture(names[i], fld), fixture(names[j], fld)); },
                    f);
                push("sum." + tag + "." + names[i] + "+" + names[j], "sum", std::move(L));
            }
    }
    {
        std::mt19937_64 rng(limits.seed);
        std::uniform_int_distribution<int> dim(2, 4), coeff(-2, 2);
        const Rationals Q;
        for (std::size_t t = 0; t < limits.random_rational; ++t) {
            CyclicSpec<Rationals> spec{Q, std::size_t(dim(rng)), {}};
            for (std::size_t k = 1; k < spec.n; ++k) spec.alphas.push_back(Q.from_int(coeff(rng)));
            push("random-cyclic.q." + std::to_string(t) + ".n" + std::to_string(spec.n) + "." + alpha_tag(spec),
                 "random-cyclic", build_cyclic(spec), cyclic_info(spec));
        }
    }
    if (limits.quotients) {
        const std::size_t base = out.size();
        for (std::size_t idx = 0; idx < base; ++idx) {
            const auto* g = std::get_if<Algebra<GaloisField>>(&out[idx].algebra);
            if (!g) continue;
            const Algebra<GaloisField> L = *g;
            const std::string parent = out[idx].name;
            const auto lattice = build_lattice(L, limits.budget);
            std::size_t k = 0;
            for (const auto& I : lattice.ideals) {
                if (I.is_zero() || I.is_full()) continue;
                AnyAlgebra Q = quotient(L, I).algebra;
                const std::string key = dedup_key(Q);
                ++k;
                if (seen.count(key)) continue;
                push("quotient." + parent + "." + std::to_string(k), "quotient", std::move(Q));
            }
        }
    }
    return out;
}

template Algebra<Rationals> fixture(const std::string&, const Rationals&);
template Algebra<GaloisField> fixture(const std::string&, const GaloisField&);

} // namespace leibniz

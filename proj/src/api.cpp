#include "leibniz/api.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "leibniz/corpus.hpp"

namespace leibniz {

namespace {

struct Options {
    std::string command;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::string field;
    std::string output;
    std::string file;
    std::size_t n = 0;
    std::string alphas;
    std::string kind = "all";
    std::size_t max_n = 5;
    bool no_quotients = false;
};

struct Outcome {
    json results = json::object();
    int exit_code = 0;
    json findings = json::array();
};

SearchOptions search_options(const Options& o) { return SearchOptions{o.seed, o.budget, 64}; }

template <ExactField F>
json basics(const Algebra<F>& L) {
    return json{{"field", L.field().name()}, {"dim", L.dim()}, {"basis_names", L.names()}};
}

template <ExactField F>
json series_json(const SeriesReport<F>& s) {
    json terms = json::array();
    for (const auto& t : s.terms) terms.push_back(subspace_to_json(t));
    return json{{"terms", terms}, {"dims", [&] {
                    json d = json::array();
                    for (const auto& t : s.terms) d.push_back(t.dim());
                    return d;
                }()},
                {"reaches_zero", s.reaches_zero},
                {"length", s.length ? json(*s.length) : json()}};
}

template <ExactField F>
json radical_json(const RadicalResult<F>& r) {
    json j{{"subspace", subspace_to_json(r.subspace)}, {"dim", r.subspace.dim()}, {"status", to_string(r.status)},
           {"method", r.method}};
    if (r.upper_bound) j["upper_bound"] = subspace_to_json(*r.upper_bound);
    return j;
}

template <ExactField F>
json predicates_json(const Predicates& p) {
    return json{{"is_nilpotent", p.is_nilpotent},
                {"nilpotency_class", p.nilpotency_class ? json(*p.nilpotency_class) : json()},
                {"is_solvable", p.is_solvable},
                {"derived_length", p.derived_length ? json(*p.derived_length) : json()},
                {"is_completely_solvable", p.is_completely_solvable},
                {"is_metabelian", p.is_metabelian},
                {"is_abelian", p.is_abelian}};
}

json error_json(const Error& e) { return json{{"kind", to_string(e.kind())}, {"message", e.message()}}; }

template <ExactField F>
void require_leibniz(const Algebra<F>& L) {
    if (auto v = verify_leibniz(L))
        throw Error(ErrorKind::NotLeibniz, "identity fails on (" + L.names()[v->i] + ", " + L.names()[v->j] + ", " +
                                               L.names()[v->k] + ")");
}

template <ExactField F>
Outcome do_check(const Algebra<F>& L) {
    Outcome out;
    out.results = basics(L);
    const auto v = verify_leibniz(L);
    out.results["leibniz"] = !v.has_value();
    if (v) {
        out.results["violation"] = {{"triple", {v->i, v->j, v->k}},
                                    {"names", {L.names()[v->i], L.names()[v->j], L.names()[v->k]}},
                                    {"lhs", vector_to_json(L.field(), v->lhs)},
                                    {"rhs", vector_to_json(L.field(), v->rhs)},
                                    {"identity", "[x,[y,z]] = [[x,y],z] − [[x,z],y]"}};
        out.exit_code = 1;
    }
    return out;
}

template <ExactField F>
Outcome do_analyze(const Algebra<F>& L, const Options& o) {
    require_leibniz(L);
    Outcome out;
    out.results = basics(L);
    out.results["predicates"] = predicates_json<F>(predicates(L));
    json s = json::object();
    for (auto kind : {SeriesKind::derived, SeriesKind::lower_central, SeriesKind::lower_nilpotent})
        s[to_string(kind)] = series_json(series(L, kind));
    out.results["series"] = s;
    json upper = json::array();
    for (const auto& z : upper_central_series(L)) upper.push_back(subspace_to_json(z));
    out.results["upper_central_series"] = upper;
    out.results["centre"] = subspace_to_json(centre(L).carrier);
    out.results["leib_kernel"] = subspace_to_json(leib_kernel(L).carrier);
    out.results["nilpotent_residual"] = subspace_to_json(nilpotent_residual(L));
    try {
        out.results["nilradical"] = radical_json(nilradical(L, o.budget));
    } catch (const Error& e) {
        if (exit_code_for(e.kind()) != 2) throw;
        out.results["nilradical"] = json{{"error", error_json(e)}};
    }
    try {
        out.results["radical"] = radical_json(radical(L, o.budget));
    } catch (const Error& e) {
        if (exit_code_for(e.kind()) != 2) throw;
        out.results["radical"] = json{{"error", error_json(e)}};
    }
    return out;
}

template <ExactField F>
Outcome do_decompose(const Algebra<F>& L, const Options& o) {
    require_leibniz(L);
    Outcome out;
    out.results = basics(L);
    const Analysis<F> ctx = Analysis<F>::build(L, search_options(o));
    const AVerdict<F> v = is_a_algebra(ctx);
    out.results["verdict"] = v.to_json();
    if (!ctx.pred.is_solvable) throw Error(ErrorKind::NotSolvable, "triangular decomposition needs a solvable algebra");
    json derived = json::array();
    for (const auto& t : ctx.derived.terms) derived.push_back(subspace_to_json(t));
    out.results["derived_series"] = derived;
    const Report rep = structure_report(ctx, v.value == Verdict::yes);
    out.results["structure"] = rep.to_json();
    if (!ctx.triangular) {
        out.results["error"] = {{"kind", to_string(ctx.triangular_error)}, {"message", ctx.triangular_note}};
        out.exit_code = exit_code_for(ctx.triangular_error);
        return out;
    }
    json comps = json::array();
    for (std::size_t i = 0; i < ctx.triangular->components.size(); ++i)
        comps.push_back({{"index", i}, {"basis", subspace_to_json(ctx.triangular->components[i])}});
    out.results["components"] = comps;
    if (rep.has_failure()) out.exit_code = 1;
    return out;
}

template <ExactField F>
Outcome do_a_algebra(const Algebra<F>& L, const Options& o) {
    require_leibniz(L);
    Outcome out;
    out.results = basics(L);
    out.results["verdict"] = is_a_algebra(L, search_options(o)).to_json();
    return out;
}

template <ExactField F>
Outcome do_battery(const Algebra<F>& L, const Options& o) {
    require_leibniz(L);
    Outcome out;
    const Report rep = a_algebra_battery(L, search_options(o));
    out.results = basics(L);
    out.results["battery"] = rep.to_json();
    for (const auto* c : rep.findings())
        out.findings.push_back({{"id", c->id}, {"statement", c->statement}, {"reason", c->reason}, {"witnesses", c->witnesses}});
    if (rep.has_failure()) out.exit_code = 1;
    return out;
}

template <ExactField F>
Outcome do_frattini(const Algebra<F>& L, const Options& o) {
    require_leibniz(L);
    if (!L.field().is_finite())
        throw Error(ErrorKind::InfiniteFieldUnsupported, "the Frattini ideal needs subalgebra enumeration over a finite field");
    Outcome out;
    out.results = basics(L);
    const auto fr = frattini_ideal(L, build_lattice(L, o.budget));
    json maxs = json::array();
    for (const auto& M : fr.maximal_subalgebras) maxs.push_back(subspace_to_json(M));
    out.results["frattini"] = subspace_to_json(fr.ideal);
    out.results["phi_free"] = fr.ideal.is_zero();
    out.results["intersection"] = subspace_to_json(fr.intersection);
    out.results["intersection_is_ideal"] = fr.intersection_is_ideal;
    out.results["maximal_subalgebras"] = maxs;
    return out;
}

template <ExactField F>
Outcome do_enumerate(const Algebra<F>& L, const Options& o) {
    require_leibniz(L);
    if (!L.field().is_finite())
        throw Error(ErrorKind::InfiniteFieldUnsupported, "enumeration needs a finite field, got " + L.field().name());
    Outcome out;
    out.results = basics(L);
    const auto lat = build_lattice(L, o.budget);
    json counts{{"subspaces", lat.visited}, {"subalgebras", lat.subalgebras.size()}, {"ideals", lat.ideals.size()}};
    out.results["counts"] = counts;
    auto listing = [](const std::vector<Subspace<F>>& v) {
        json a = json::array();
        for (const auto& s : v) a.push_back(subspace_to_json(s));
        return a;
    };
    if (o.kind == "subalgebras" || o.kind == "all") out.results["subalgebras"] = listing(lat.subalgebras);
    if (o.kind == "ideals" || o.kind == "all") out.results["ideals"] = listing(lat.ideals);
    return out;
}

template <ExactField F>
Outcome do_cyclic(const F& f, const Options& o) {
    CyclicSpec<F> spec{f, o.n, {}};
    std::stringstream ss(o.alphas);
    std::string item;
    while (std::getline(ss, item, ',')) spec.alphas.push_back(f.parse(item));
    Outcome out;
    const Report rep = classify_cyclic(spec, search_options(o));
    out.results = rep.to_json();
    if (rep.has_failure()) out.exit_code = 1;
    else if (rep.data().contains("unsupported")) out.exit_code = 2;
    return out;
}

Outcome do_corpus(const Options& o) {
    CorpusLimits limits;
    limits.seed = o.seed;
    limits.budget = o.budget;
    limits.max_cyclic_n = o.max_n;
    limits.quotients = !o.no_quotients;
    if (!o.field.empty()) limits.fixture_fields = limits.sum_fields = {o.field};
    const auto corpus = generate_corpus(limits);
    const std::string dir = o.output.empty() ? "corpus" : o.output;
    std::filesystem::create_directories(dir);
    Outcome out;
    json index = json::array();
    json by_origin = json::object();
    std::size_t invalid = 0;
    for (const auto& e : corpus) {
        const bool ok = std::visit([](const auto& L) { return !verify_leibniz(L).has_value(); }, e.algebra);
        invalid += ok ? 0 : 1;
        const std::string file = e.name + ".json";
        write_text_file((std::filesystem::path(dir) / file).string(), serialize_algebra(e.algebra));
        json item{{"name", e.name}, {"origin", e.origin}, {"file", file}, {"field", field_name(field_of(e.algebra))},
                  {"dim", dim_of(e.algebra)}};
        if (!e.cyclic.is_null()) item["cyclic"] = e.cyclic;
        index.push_back(std::move(item));
        by_origin[e.origin] = by_origin.value(e.origin, 0) + 1;
    }
    write_text_file((std::filesystem::path(dir) / "index.json").string(), index.dump(2) + "\n");
    out.results = json{{"count", corpus.size()}, {"by_origin", by_origin}, {"output", dir}, {"invalid", invalid}};
    if (invalid > 0) out.exit_code = 1;
    return out;
}

AnyAlgebra load(const Options& o) {
    AnyAlgebra L = read_algebra_file(o.file, Checked::no);
    if (!o.field.empty()) L = change_field(L, parse_field(o.field));
    return L;
}

std::string digest_source(const Options& o) {
    if (!o.file.empty()) return read_text_file(o.file);
    if (o.command == "cyclic") return "cyclic|" + o.field + "|" + std::to_string(o.n) + "|" + o.alphas;
    return o.command + "|" + o.field + "|" + std::to_string(o.max_n) + "|" + (o.no_quotients ? "0" : "1");
}

Outcome dispatch(const Options& o) {
    if (o.command == "cyclic") {
        const FieldDescriptor f = parse_field(o.field.empty() ? "q" : o.field);
        return std::visit([&](const auto& fld) { return do_cyclic(fld, o); }, f);
    }
    if (o.command == "corpus") return do_corpus(o);
    const AnyAlgebra L = load(o);
    return std::visit(
        [&](const auto& A) -> Outcome {
            if (o.command == "check") return do_check(A);
            if (o.command == "analyze") return do_analyze(A, o);
            if (o.command == "decompose") return do_decompose(A, o);
            if (o.command == "a-algebra") return do_a_algebra(A, o);
            if (o.command == "battery") return do_battery(A, o);
            if (o.command == "frattini") return do_frattini(A, o);
            return do_enumerate(A, o);
        },
        L);
}

} // namespace

RunResult run_command(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Exact analysis of finite-dimensional Leibniz algebras", "leibniz"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", o.seed, "Seed for randomized searches");
    app.add_option("--budget", o.budget, "Maximum number of subspaces or elements to enumerate");
    app.add_option("--field", o.field, "Field: q, gfP or gfQ (change of scalars for file inputs)");
    app.add_option("--output", o.output, "Write the report (corpus: the directory) here");

    const std::vector<std::pair<std::string, std::string>> file_commands{
        {"check", "Verify the Leibniz identity"},
        {"analyze", "Series, predicates, centre, Leibniz kernel, nilradical"},
        {"decompose", "Triangular decomposition and structure checks"},
        {"a-algebra", "Decide whether every nilpotent subalgebra is abelian"},
        {"battery", "Run every structural check for A-algebras"},
        {"frattini", "Frattini ideal (finite fields)"},
        {"enumerate", "Count subspaces, subalgebras and ideals (finite fields)"}};
    for (const auto& [name, help] : file_commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "Algebra file")->required();
        if (name == "enumerate")
            sub->add_option("--kind", o.kind, "Listing to include")
                ->check(CLI::IsMember({"subspaces", "subalgebras", "ideals", "all"}));
    }
    auto* cyc = app.add_subcommand("cyclic", "Classify a cyclic Leibniz algebra");
    cyc->add_option("--n", o.n, "Dimension")->required();
    cyc->add_option("--alphas", o.alphas, "Comma-separated α₂,…,αₙ")->required();
    auto* corp = app.add_subcommand("corpus", "Generate the fixture and test corpus");
    corp->add_option("--max-n", o.max_n, "Largest cyclic dimension in the sweeps");
    corp->add_flag("--no-quotients", o.no_quotients, "Skip quotients by ideals");

    RunResult result;
    json report{{"command", nullptr}, {"findings", json::array()}};
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.format = "text";
        result.report = json{{"help", app.help()}, {"exit_status", 0}};
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 3;
        report["error"] = {{"kind", "Usage"}, {"message", e.what()}};
        report["exit_status"] = 3;
        result.report = report;
        return result;
    }
    for (auto* sub : app.get_subcommands()) o.command = sub->get_name();
    result.format = o.format;
    if (o.command != "corpus") result.output_path = o.output;
    report["command"] = o.command;
    report["seed"] = o.seed;
    report["budget"] = o.budget;
    if (!o.field.empty()) report["field"] = o.field;
    try {
        report["input_digest"] = fnv1a_hex(digest_source(o));
        Outcome out = dispatch(o);
        report["results"] = std::move(out.results);
        report["findings"] = std::move(out.findings);
        result.exit_code = out.exit_code;
    } catch (const Error& e) {
        report["error"] = error_json(e);
        result.exit_code = exit_code_for(e.kind());
    } catch (const std::logic_error& e) {
        report["error"] = {{"kind", "InternalCheck"}, {"message", e.what()}};
        result.exit_code = 1;
    }
    report["exit_status"] = result.exit_code;
    result.report = std::move(report);
    return result;
}

namespace {

bool is_leaf(const json& j) {
    if (!j.is_structured()) return true;
    if (j.is_object()) return j.empty();
    for (const auto& e : j)
        if (e.is_object()) return false;
    return true;
}

void render_into(std::ostringstream& out, const json& j, int indent) {
    const std::string pad(std::size_t(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_leaf(value)) {
                out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            } else {
                out << pad << key << ":\n";
                render_into(out, value, indent + 1);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (is_leaf(e)) {
                out << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
            } else {
                out << pad << "-\n";
                render_into(out, e, indent + 1);
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

} // namespace

std::string render_text(const json& report) {
    if (report.contains("help")) return report["help"].get<std::string>();
    std::ostringstream out;
    render_into(out, report, 0);
    return out.str();
}

std::string render(const RunResult& result) {
    if (result.format == "text" || result.report.contains("help")) return render_text(result.report);
    return result.report.dump(2) + "\n";
}

} // namespace leibniz

#pragma once

#include <string>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

enum class ClauseStatus { pass, fail, not_applicable, finding };

std::string to_string(ClauseStatus status);

/// One checked property: `id` is a stable property name, `statement` the formula checked.
struct Clause {
    std::string id;
    std::string statement;
    ClauseStatus status = ClauseStatus::not_applicable;
    std::string reason;
    json witnesses = json::object();
};

class Report {
public:
    explicit Report(std::string kind) : kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }
    json& data() { return data_; }
    const json& data() const { return data_; }
    const std::vector<Clause>& clauses() const { return clauses_; }

    void add(Clause c) { clauses_.push_back(std::move(c)); }
    /// pass when `ok`, otherwise fail with `reason` and `witnesses`.
    void check(std::string id, std::string statement, bool ok, std::string reason = {}, json witnesses = json::object());
    void skip(std::string id, std::string statement, std::string reason);
    void finding(std::string id, std::string statement, std::string reason, json witnesses = json::object());
    void merge(const Report& other);

    const Clause* find(const std::string& id) const;
    bool has_failure() const;
    std::vector<const Clause*> findings() const;
    json to_json() const;

private:
    std::string kind_;
    json data_ = json::object();
    std::vector<Clause> clauses_;
};

template <ExactField F>
json vector_to_json(const F& f, const Vector<F>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(f.to_string(x));
    return out;
}

/// Basis rows of the stored echelon form.
template <ExactField F>
json subspace_to_json(const Subspace<F>& U) {
    json out = json::array();
    for (const auto& v : U.basis()) out.push_back(vector_to_json(U.field(), v));
    return out;
}

template <ExactField F>
json matrix_to_json(const Matrix<F>& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.field(), m.row(r)));
    return out;
}

} // namespace leibniz

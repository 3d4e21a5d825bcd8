#include "leibniz/report.hpp"

namespace leibniz {

std::string to_string(ClauseStatus status) {
    switch (status) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "fail";
    case ClauseStatus::not_applicable: return "not_applicable";
    case ClauseStatus::finding: return "finding";
    }
    return "unknown";
}

void Report::check(std::string id, std::string statement, bool ok, std::string reason, json witnesses) {
    if (ok) {
        clauses_.push_back({std::move(id), std::move(statement), ClauseStatus::pass, {}, json::object()});
    } else {
        clauses_.push_back(
            {std::move(id), std::move(statement), ClauseStatus::fail, std::move(reason), std::move(witnesses)});
    }
}

void Report::skip(std::string id, std::string statement, std::string reason) {
    clauses_.push_back({std::move(id), std::move(statement), ClauseStatus::not_applicable, std::move(reason), json::object()});
}

void Report::finding(std::string id, std::string statement, std::string reason, json witnesses) {
    clauses_.push_back(
        {std::move(id), std::move(statement), ClauseStatus::finding, std::move(reason), std::move(witnesses)});
}

void Report::merge(const Report& other) {
    for (const auto& c : other.clauses_) clauses_.push_back(c);
    if (!other.data_.empty()) data_[other.kind_] = other.data_;
}

const Clause* Report::find(const std::string& id) const {
    for (const auto& c : clauses_)
        if (c.id == id) return &c;
    return nullptr;
}

bool Report::has_failure() const {
    for (const auto& c : clauses_)
        if (c.status == ClauseStatus::fail) return true;
    return false;
}

std::vector<const Clause*> Report::findings() const {
    std::vector<const Clause*> out;
    for (const auto& c : clauses_)
        if (c.status == ClauseStatus::finding) out.push_back(&c);
    return out;
}

json Report::to_json() const {
    json clauses = json::array();
    for (const auto& c : clauses_) {
        json j{{"id", c.id}, {"statement", c.statement}, {"status", to_string(c.status)}};
        if (!c.reason.empty()) j["reason"] = c.reason;
        if (!c.witnesses.empty()) j["witnesses"] = c.witnesses;
        clauses.push_back(std::move(j));
    }
    return json{{"kind", kind_}, {"data", data_}, {"clauses", std::move(clauses)}};
}

} // namespace leibniz

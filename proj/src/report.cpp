#include "qdk/report.hpp"

#include <algorithm>

namespace qdk {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skipped: return "SKIPPED";
        case Status::Info: return "INFO";
    }
    return "?";
}

CaseResult make_case(const std::string& name, bool ok, const std::string& details) {
    return {name, ok ? Status::Pass : Status::Fail, details, std::nullopt};
}

void Report::add(const std::string& name, bool ok, const std::string& details) {
    cases.push_back(make_case(name, ok, details));
}

bool Report::ok() const {
    return std::none_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == Status::Fail; });
}

std::size_t Report::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
}

Json Report::to_json() const {
    std::vector<const CaseResult*> sorted;
    for (const auto& c : cases) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CaseResult* a, const CaseResult* b) { return a->name < b->name; });
    Json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["status"] = ok() ? "PASS" : "FAIL";
    Json counts;
    for (auto s : {Status::Pass, Status::Fail, Status::Skipped, Status::Info}) counts[status_name(s)] = count(s);
    j["counts"] = counts;
    Json cs = Json::array();
    for (const auto* c : sorted) {
        Json e;
        e["name"] = c->name;
        e["status"] = status_name(c->status);
        e["details"] = c->details;
        if (c->witness) e["witness"] = *c->witness;
        cs.push_back(e);
    }
    j["cases"] = cs;
    return j;
}

std::string dims_string(const std::vector<std::size_t>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

}  // namespace qdk

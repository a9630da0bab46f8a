#pragma once

#include "qdk/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdk {

enum class Status { Pass, Fail, Skipped, Info };
std::string status_name(Status s);

struct CaseResult {
    std::string name;
    Status status = Status::Pass;
    std::string details;
    std::optional<Json> witness;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;

    void add(CaseResult c) { cases.push_back(std::move(c)); }
    void add(const std::string& name, bool ok, const std::string& details = "");
    bool ok() const;
    std::size_t count(Status s) const;
    // Cases sorted by name, no timing information.
    Json to_json() const;
};

CaseResult make_case(const std::string& name, bool ok, const std::string& details = "");
std::string dims_string(const std::vector<std::size_t>& d);

}  // namespace qdk

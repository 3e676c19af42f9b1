#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace goldgraph {

// Raised when a request exceeds a hard enumeration ceiling (degree bounds,
// partition bounds). Distinct from invalid_argument: the input is meaningful,
// just too expensive for this engine.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a verified statement fails on concrete input. This is never a
// bug signal: it means either a Goldbach counterexample or a defect in the
// verified claim, and it carries a machine-readable JSON report.
class theorem_violation : public std::runtime_error {
public:
    theorem_violation(const std::string& what, std::string report_json)
        : std::runtime_error(what), report_json_(std::move(report_json)) {}

    const std::string& report_json() const noexcept { return report_json_; }

private:
    std::string report_json_;
};

} // namespace goldgraph

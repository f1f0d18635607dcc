#pragma once

#include <string>
#include <vector>

namespace fracgreen {

struct PropertyResult {
    std::string name;
    bool pass;
    double worst; // worst-case residual measured
    double tol;   // threshold the residual is held to
};

// Named invariant suites: "ml", "green", "zeros", "asymptotics", "all".
// Throws DomainError for an unknown suite name.
std::vector<PropertyResult> verify_suite(const std::string& suite);

} // namespace fracgreen

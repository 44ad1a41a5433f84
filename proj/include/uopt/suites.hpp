#pragma once

// Registry of named property suites. Every property declares whether it is
// expected to hold or to be falsified; a suite is green when every property
// meets its expectation.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "uopt/proptest.hpp"

namespace uopt::suites {

struct Property {
    std::string name;
    Expect expect = Expect::Pass;
    std::function<CheckResult(std::size_t n, std::uint64_t seed)> run;
};

struct Report {
    std::string suite;
    std::string property;
    CheckResult result;

    /// "[suite] property: <summary line> (expected ..., ok|UNEXPECTED)"
    [[nodiscard]] std::string line() const;
};

/// Registered suite names, in run order.
const std::vector<std::string>& names();

bool exists(const std::string& suite);

/// The properties of `suite`. Throws std::out_of_range for unknown names.
std::vector<Property> properties(const std::string& suite);

/// Runs every property of `suite` ("all" runs every suite) with `n` cases.
std::vector<Report> run(const std::string& suite, std::size_t n, std::uint64_t seed);

/// Runs a single property by suite and name. Throws std::out_of_range if
/// either is unknown.
Report run_one(const std::string& suite, const std::string& property, std::size_t n, std::uint64_t seed);

bool all_met(const std::vector<Report>& reports);

}  // namespace uopt::suites

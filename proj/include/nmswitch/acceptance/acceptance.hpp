// acceptance.hpp: the end-to-end acceptance gate, shared by the acceptance
// test binary and `nmswitch selftest`.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nmswitch::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

struct AcceptanceOptions {
    std::uint64_t seed{42};
    // Mutation hook: perturbs A(t) of the closed form before it is compared
    // against the brute-force SWITCH. Used to check the gate can fail.
    bool corrupt_closed_form_a{false};
    // Criterion ids to run; empty runs all of them.
    std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// One "[PASS] n name: detail" line per criterion; returns true iff all passed.
bool print_results(std::ostream& os, const std::vector<CriterionResult>& results);

} // namespace nmswitch::acceptance

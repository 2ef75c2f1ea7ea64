/**
 * @file cli.hpp
 * Command-line front end and the invariant suite behind `check`.
 */
#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "chromatic/families.hpp"

namespace chromatic {

struct InvariantResult {
    std::string name;
    double value = 0.0;      // measured residual or ratio
    double tolerance = 0.0;  // pass iff value <= tolerance
    bool skipped = false;    // not applicable to this family
    std::string detail;
    bool passed() const { return skipped || value <= tolerance; }
};

std::vector<InvariantResult> run_invariant_suite(const FamilySpec& family, std::size_t orders);

// Exit codes: 0 success, 1 numeric/domain failure, 2 usage error.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromatic

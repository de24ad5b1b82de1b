#pragma once

#include "sepscope/kernel.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sepscope::cli {

// Exit codes: 0 success, 1 certificate verification failure, 2 parse error,
// 3 validation error, 4 builder precondition failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ghz:<1-8> | w | braid:<n>:<i> | ghzdiag:p1,...,p8 | two_param:<r1>,<r3> |
// four_qubit_xyz
DensityMatrix parse_state(const std::string& expr);

}  // namespace sepscope::cli

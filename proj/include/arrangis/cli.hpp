#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrangis {

/**
 * Command-line front end.  Subcommands:
 *
 *   combinatorics --arrangement PATH
 *   inner-cyclic  --arrangement PATH --order N
 *   wiring        --arrangement PATH [--seed K]
 *   invariant     (--arrangement PATH | --wiring PATH) --character PATH --cycle STR [--seed K]
 *   depth         --arrangement PATH --character PATH [--seed K]
 *
 * Common flags: --format json|text, --output PATH.  The enumeration cap
 * (default 10^7 candidates) can be overridden with ARRANGIS_ENUM_CAP.
 *
 * Exit codes: 0 success, 2 input error, 3 genericity exhaustion,
 * 4 enumeration cap exceeded.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrangis

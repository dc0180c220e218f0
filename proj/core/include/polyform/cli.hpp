#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "polyform/form.hpp"

namespace polyform {

// Command line entry point, separated from main() so tests can drive the
// whole surface in-process. args excludes the program name. Results go to
// out, diagnostics to err.
//
// Subcommands:
//   dual   --n N --form EXPR [--flavor P|Pminus] [--inverse]
//   basis  --n N --r R --k K --flavor F --context ambient|simplex|sphere
//   dims   --n N --rmax R
//   gram   --n N --r R --k K --flavor P|Pminus
//   verify [--suite all|tsiso|parity|appendixA|appendixB|pmker|examples] --n N
//
// Every subcommand accepts --json, which switches stdout to a versioned
// document (schema_version "1") that is byte-identical across runs for
// identical inputs. Exit codes: 0 success, 1 a computation or verification
// failed (a check failed, a Gram matrix was not positive definite, a
// dimension table had discrepancies, or an internal cross-check tripped),
// 2 the invocation or its inputs were invalid.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace polyform

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "loopkit/magma.hpp"

namespace loopkit::cli {

/// Runs one subcommand. `args` excludes the program name. Returns the exit
/// status: 0 on success, 1 on domain errors (reported on `err` as
/// `ERROR <kind>: ...`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The compiled-in order-12 C-loop used by the `demo` subcommand (also
/// shipped as tables/c12.tbl).
const CayleyTable& embedded_demo_table();

}  // namespace loopkit::cli

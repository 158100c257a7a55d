#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpa {

/// Dispatches the lpa-lab subcommands. Exit code 0 on success, 1 on input
/// errors, 2 when a search budget is exhausted without a witness.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fpg/graph_patterns.hpp"

namespace fpg {

/// Runs the command line without the program name.  Returns 0 on success,
/// 1 on a domain or I/O failure, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reference frequencies of undesirable structures, n = 3..11.
const std::vector<ClassifyRow>& reference_classify_rows();

}  // namespace fpg

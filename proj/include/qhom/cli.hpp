#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhom {

  // Runs one command; `args` excludes the program name. Returns the process
  // exit status: 0 success or true, 1 false or non-isomorphic, 2 usage or
  // input error.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace qhom

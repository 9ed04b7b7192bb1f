#ifndef TORSIONLAB_CLI_CLI_HPP_
#define TORSIONLAB_CLI_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace torsionlab {

  enum ExitCode : int {
    exit_pass      = 0,
    exit_failure   = 1,  // a counterexample was found
    exit_usage     = 2,  // bad arguments or unreadable input
    exit_ceiling   = 3,  // an enumeration gate refused to run
  };

  //! Runs one command line (without the program name). Reports go to `out`,
  //! diagnostics to `err`.
  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace torsionlab

#endif  // TORSIONLAB_CLI_CLI_HPP_

#ifndef SLIDER_CLI_HPP_
#define SLIDER_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace slider {

// Command-line entry point (argv without the program name). Returns 0 on
// success, 1 on verification failure, 2 on usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace slider

#endif  // SLIDER_CLI_HPP_

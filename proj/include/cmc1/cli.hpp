#ifndef CMC1_CLI_HPP
#define CMC1_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cmc1::cli {

// Entry point used by the binary and by the tests.  Returns the process
// exit code; failures print one machine-parsable line
// "error: E_<CATEGORY>: <message>" on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmc1::cli

#endif

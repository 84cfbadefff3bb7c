#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdt {

// Execute one command line (program name excluded). Returns the exit status:
// 0 success, 1 a verification check failed, 2 usage or unsupported request,
// 3 a feasibility guard refused the computation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mdt

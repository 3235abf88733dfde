#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hochkit {

/// Entry point of the hochkit command line. Exit codes: 0 when every
/// identity holds, 1 on a mismatch, 2 on usage or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace hochkit

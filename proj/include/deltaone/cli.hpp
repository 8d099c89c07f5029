// cli.hpp: command-line front end. Exit status contract:
//   0 = success / all asserted clauses pass
//   1 = a verification clause failed
//   2 = usage or input error
//   3 = enumeration cap exceeded
#pragma once

#include <iosfwd>

namespace deltaone {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deltaone

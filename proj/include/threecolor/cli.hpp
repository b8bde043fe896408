#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace threecolor {

/// Command-line front end. Exit codes: 0 colorable / verified / done,
/// 1 not colorable / verification failed / benchmark mismatch,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace threecolor

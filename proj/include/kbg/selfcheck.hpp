#ifndef KBG_SELFCHECK_HPP_
#define KBG_SELFCHECK_HPP_

#include <string>
#include <vector>

#include "kbg/checked.hpp"

namespace kbg {

enum class Profile { Quick, Full };

struct SuiteResult {
  std::string name;
  bool pass = false;
  i64 checks = 0;
  std::string detail;  // first failure, or a short summary
};

// Runs every invariant suite at the profile's bounds. Quick keeps the whole
// run within seconds; Full uses the large bounds.
std::vector<SuiteResult> run_selfcheck(Profile profile);

// The group-law conventions this library commits to, printed by the CLI so
// they are never implicit.
std::string conventions_note();

}  // namespace kbg

#endif  // KBG_SELFCHECK_HPP_

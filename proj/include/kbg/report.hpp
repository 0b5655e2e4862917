#ifndef KBG_REPORT_HPP_
#define KBG_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "kbg/certificate.hpp"
#include "kbg/closure.hpp"

namespace kbg {

// Insertion-ordered JSON keeps report serialization byte-stable.
using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The uniform CLI report: a command echo, inputs, a result payload, a check
// list and optional witness data. Exit status 0 iff all checks pass.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;
  Json witness;  // null unless set

  bool all_pass() const;
  int exit_status() const { return all_pass() ? 0 : 1; }
  Json to_json() const;
  std::string to_text() const;
};

Json json_of(const FreeWord& w);
Json json_of(const FreeAut& alpha);
Json json_of(const TransferReport& rep);
Json json_of(const Certificate& cert);
Json json_of(const ProbeReport& rep);
Json json_of(const B2ClosureReport& rep);

}  // namespace kbg

#endif  // KBG_REPORT_HPP_

#include "kbg/certificate.hpp"

#include <algorithm>

namespace kbg {

std::size_t Certificate::add_step(std::string claim, std::string check_id, bool pass,
                                  std::string witness, std::vector<std::size_t> refs) {
  for (std::size_t ref : refs) {
    if (ref >= steps_.size()) {
      throw DomainError("IndexOutOfRange", "certificate step references a later step");
    }
  }
  steps_.push_back({std::move(claim), std::move(check_id), pass, std::move(witness), std::move(refs)});
  return steps_.size() - 1;
}

bool Certificate::verify() const {
  return std::all_of(steps_.begin(), steps_.end(), [](const CertStep& s) { return s.pass; });
}

}  // namespace kbg

#ifndef KBG_CERTIFICATE_HPP_
#define KBG_CERTIFICATE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "kbg/error.hpp"

namespace kbg {

// One link of a machine-checked assertion chain: a claim, the id of the
// check that established it, the outcome, and printable witness data.
// `refs` lists the earlier steps the claim relies on.
struct CertStep {
  std::string claim;
  std::string check_id;
  bool pass = false;
  std::string witness;
  std::vector<std::size_t> refs;
};

class Certificate {
 public:
  // Returns the index of the new step. Refs must point at earlier steps.
  std::size_t add_step(std::string claim, std::string check_id, bool pass,
                       std::string witness, std::vector<std::size_t> refs = {});

  const std::vector<CertStep>& steps() const noexcept { return steps_; }

  // All steps pass (reference validity is enforced at insertion).
  bool verify() const;

 private:
  std::vector<CertStep> steps_;
};

}  // namespace kbg

#endif  // KBG_CERTIFICATE_HPP_

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace takeaway {

enum class ClaimStatus { Pass, Fail, Skipped };
std::string to_string(ClaimStatus s);

struct VerificationReport {
  std::string claim_id;
  std::string statement;  // the claim in words
  ClaimStatus status = ClaimStatus::Pass;
  std::string expected;
  std::string observed;
  std::string reason;  // why a claim failed or was skipped
  std::size_t instances = 0;
  double runtime_seconds = 0;
  std::vector<std::string> details;
};

}  // namespace takeaway

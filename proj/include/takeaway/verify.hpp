#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "takeaway/engine.hpp"
#include "takeaway/report.hpp"

namespace takeaway {

struct VerifyOptions {
  // Budget and move generation are taken from here; each claim decides the
  // shortcut flags itself.
  EngineOptions engine;
  std::filesystem::path data_dir;  // empty means default_data_dir()
  std::uint64_t seed = 20180817;
  // Wall-clock limit for the open-ended sequence claims; 0 means none.
  double time_limit_seconds = 600;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  bool acceptance = false;  // one of the twenty acceptance criteria
};

// Acceptance claims first, in criterion order, then the extra claims.
const std::vector<ClaimInfo>& claims();

// Throws InputError for an unknown id. Budget exhaustion becomes Skipped.
VerificationReport run_claim(std::string_view id, GrundyTable& table, const VerifyOptions& options = {});
// An empty selection runs every acceptance claim.
std::vector<VerificationReport> verify_suite(std::span<const std::string> ids, GrundyTable& table,
                                             const VerifyOptions& options = {});

}  // namespace takeaway

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodge/arrangement.hpp"
#include "hodge/io.hpp"

namespace hodge {

struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string details;  // left/right values on failure
};

struct VerifyReport {
  std::vector<CheckRecord> checks;
  std::string input_echo;  // canonical arrangement text, filled on failure

  bool all_passed() const;
  const CheckRecord* find(std::string_view name) const;
};

struct VerifyOptions {
  int random_twists = 20;  // random divisor classes per p for the duality check
  std::uint64_t seed = 0x5eed;
};

/// Runs dual-path, s-invariance, serre, euler-sum, ts-shift and
/// weight-duality on one arrangement of essential rank ≤ 4.
VerifyReport run_verify(const Arrangement& arr, const VerifyOptions& options = {});

std::string report_text(const VerifyReport& report);
io::Json report_json(const VerifyReport& report);

}  // namespace hodge

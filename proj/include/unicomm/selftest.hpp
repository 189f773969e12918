#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unicomm {

struct SelftestResult {
  std::string name;
  bool ok;
  std::string detail;
};

/// Reference examples with known answers plus a seeded factor/verify/JSON
/// round trip. Never throws; failures are reported per entry.
std::vector<SelftestResult> run_selftest(std::uint64_t seed = 1);

}  // namespace unicomm

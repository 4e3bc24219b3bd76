#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tsys {

struct VerifyOptions {
  int max_vertices = 9;           // grids above this are skipped
  std::size_t sample_cap = 10000; // per-system checks downgrade to a sample
  std::uint64_t seed = 0x7a5e17;  // sampling seed (deterministic)
  int max_chain = 4;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  std::vector<std::string> notices;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Exhaustive theorem suite over every enumerated system on the small grids
// and chains: hull routes agree, zigzag and smallest-vertex structure,
// rectangle top components, compatibility implies hull containment,
// saturated supersets are compatible, fast and oracle LSP verdicts agree,
// and the chain compatibility law. Logs one line per check when `log` is
// given.
VerifyResult run_verify(const VerifyOptions& opts, std::ostream* log);

}  // namespace tsys

#pragma once

#include <vector>

#include "tsys/transfer.hpp"

namespace tsys {

// A triple L <= K <= H with L -> H present but K -> H absent.
struct SaturationViolation {
  Vertex low, mid, high;
  friend auto operator<=>(const SaturationViolation&,
                          const SaturationViolation&) = default;
};

struct SaturationReport {
  bool saturated = false;
  // All violations, sorted; the front one is the canonical witness.
  std::vector<SaturationViolation> violations;
};

// Two-out-of-three check: saturated iff every long edge L -> H carries all
// its intermediate edges K -> H.
SaturationReport is_saturated(const TransferSystem& t);

// Smallest saturated transfer system containing t. Computed directly as
// the componentwise-complete relation: u -> v iff u <= v and u, v share a
// component of t.
TransferSystem hull(const TransferSystem& t);

// Independent route to the hull: least fixpoint alternating the saturation
// rule (L -> H forces K -> H for L <= K <= H) with transfer closure.
TransferSystem hull_fixpoint(const TransferSystem& t);

// True iff t has exactly one connected component; equivalently
// hull(t) == complete_relation(t.grid()).
bool is_connected(const TransferSystem& t);

}  // namespace tsys

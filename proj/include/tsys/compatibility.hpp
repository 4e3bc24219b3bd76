#pragma once

#include <span>
#include <vector>

#include "tsys/transfer.hpp"

namespace tsys {

// Witness against criterion 2: b -> a in T, meet(b,c) -> b in T', c <= a,
// but c -> a missing from T'. The degenerate choice c == b recovers the
// containment requirement T subset of T'.
struct CompatViolation {
  Vertex a, b, c, b_meet_c;
  friend auto operator<=>(const CompatViolation&, const CompatViolation&) =
      default;
};

struct CompatReport {
  bool compatible = false;
  // Edges of T absent from T' (criterion-1 failures), reported separately.
  std::vector<Edge> missing_containment;
  // Every criterion-2 witness, in deterministic scan order. Containment
  // failures appear here too, as the c == b instances.
  std::vector<CompatViolation> violations;
};

// Decides whether (t, tp) is a compatible pair. Quantifies over all
// triples a, b, c with b <= a and c <= a; the comparable cases reduce to
// containment and hull but are checked anyway.
CompatReport is_compatible(const TransferSystem& t, const TransferSystem& tp);

// The least transfer system containing t and s that is compatible with t.
// Runs the round-robin fixpoint over restriction, transitivity and the
// compatibility rule; when every edge of s starts at (0,0) the staged
// closure (restriction, then transitivity, then compatibility) is also
// computed and checked against the fixpoint.
TransferSystem min_compatible_extension(const TransferSystem& t,
                                        std::span<const Edge> s);

// Chains only (r = 0 or s = 0): the subsystem generated by the unit edges
// i -> i+1 of t; a disjoint union of complete intervals.
TransferSystem core_chain(const TransferSystem& t);

// Every transfer system containing t that is compatible with t, in
// canonical order. Always includes hull(t) and the complete system.
std::vector<TransferSystem> compatible_supersets(const TransferSystem& t,
                                                 int max_vertices = 12);

}  // namespace tsys

#pragma once

#include "tsys/lattice.hpp"
#include "tsys/relation.hpp"

// Internal closure primitives shared by the closure-based operations.
namespace tsys::detail {

// Restriction rule alone, to fixpoint.
void close_restriction(RelMatrix& m, const Grid& g);

// Transitive closure (one Warshall sweep suffices).
void close_transitive(RelMatrix& m);

// Round-robin fixpoint over restriction and transitivity.
void close_transfer(RelMatrix& m, const Grid& g);

}  // namespace tsys::detail

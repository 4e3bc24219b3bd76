#pragma once

#include <cstdint>
#include <vector>

#include "tsys/transfer.hpp"

namespace tsys {

struct EnumerationLimits {
  int max_vertices = 12;
};

// Every transfer system on g exactly once, in canonical order. Depth-first
// over candidate strict edges in lexicographic order, closing after each
// inclusion and pruning branches that would re-add an excluded edge.
std::vector<TransferSystem> enumerate_transfer_systems(
    const Grid& g, EnumerationLimits limits = {});

// Every transfer system containing `base`, in canonical order.
std::vector<TransferSystem> enumerate_supersets(const TransferSystem& base,
                                                EnumerationLimits limits = {});

std::uint64_t count_transfer_systems(const Grid& g,
                                     EnumerationLimits limits = {});

// Independent oracle: filter all subsets of the candidate strict edges
// through validate. Exponential; only for tiny candidate sets.
std::uint64_t count_transfer_systems_naive(const Grid& g,
                                           int max_candidate_edges = 20);

// |{(T, T') : T contained in T', (T, T') compatible}| by exhaustive search.
std::uint64_t count_compatible_pairs(const Grid& g,
                                     EnumerationLimits limits = {});

enum class SystemFilter { Saturated, Connected, Lsp };

std::uint64_t count_filtered(const Grid& g, SystemFilter filter,
                             EnumerationLimits limits = {});

}  // namespace tsys

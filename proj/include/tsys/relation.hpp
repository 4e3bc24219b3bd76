#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tsys::detail {

// Dense bit matrix over vertex indices. Row u holds the targets of u.
struct RelMatrix {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  RelMatrix() = default;
  explicit RelMatrix(int vertices)
      : n(vertices),
        words((vertices + 63) / 64),
        bits(static_cast<std::size_t>(vertices) * ((vertices + 63) / 64), 0) {}

  bool test(int u, int v) const {
    return (bits[static_cast<std::size_t>(u) * words + v / 64] >>
            (v % 64)) & 1u;
  }

  void set(int u, int v) {
    bits[static_cast<std::size_t>(u) * words + v / 64] |=
        std::uint64_t{1} << (v % 64);
  }

  void set_diagonal() {
    for (int v = 0; v < n; ++v) set(v, v);
  }

  // row(dst) |= row(src); reports whether anything changed.
  bool or_row(int dst, int src) {
    bool changed = false;
    auto* d = &bits[static_cast<std::size_t>(dst) * words];
    const auto* s = &bits[static_cast<std::size_t>(src) * words];
    for (int w = 0; w < words; ++w) {
      std::uint64_t merged = d[w] | s[w];
      changed |= merged != d[w];
      d[w] = merged;
    }
    return changed;
  }

  bool subset_of(const RelMatrix& other) const {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w] & ~other.bits[w]) return false;
    return true;
  }

  int popcount() const {
    int total = 0;
    for (std::uint64_t w : bits) total += std::popcount(w);
    return total;
  }

  friend bool operator==(const RelMatrix&, const RelMatrix&) = default;
};

}  // namespace tsys::detail

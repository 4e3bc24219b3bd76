#pragma once

#include <algorithm>
#include <compare>
#include <string>

#include "tsys/errors.hpp"

namespace tsys {

// A vertex (i,j) of the divisor grid stands for the subgroup of order
// p^i * q^j inside the cyclic group of order p^r * q^s.
struct Vertex {
  int i = 0;
  int j = 0;

  // Default comparison is lexicographic by (i,j), which is exactly the
  // column-major "lexicographically smaller" order on the grid.
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Coordinatewise (divisibility) order; the subgroup relation.
inline bool leq(Vertex u, Vertex v) { return u.i <= v.i && u.j <= v.j; }

// Coordinatewise minimum; the subgroup intersection.
inline Vertex meet(Vertex u, Vertex v) {
  return {std::min(u.i, v.i), std::min(u.j, v.j)};
}

// Strict total order: (a,b) <_L (c,d) iff a<c, or a=c and b<d.
inline bool lex_less(Vertex u, Vertex v) { return u < v; }

std::string to_string(Vertex v);

struct Edge {
  Vertex src;
  Vertex dst;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

// The (r+1) x (s+1) vertex grid for the cyclic group of order p^r * q^s.
// r = s = 0 is the one-vertex degenerate case.
class Grid {
 public:
  Grid(int r, int s) : r_(r), s_(s) {
    if (r < 0 || s < 0) throw InputError("grid exponents must be non-negative");
  }

  int r() const { return r_; }
  int s() const { return s_; }
  int vertex_count() const { return (r_ + 1) * (s_ + 1); }
  bool is_chain() const { return r_ == 0 || s_ == 0; }

  bool contains(Vertex v) const {
    return v.i >= 0 && v.i <= r_ && v.j >= 0 && v.j <= s_;
  }

  void require(Vertex v) const {
    if (!contains(v))
      throw InputError("vertex " + to_string(v) + " outside grid(" +
                       std::to_string(r_) + "," + std::to_string(s_) + ")");
  }

  // v = i*(s+1)+j: bit-matrix address and lexicographic rank in one.
  int index(Vertex v) const { return v.i * (s_ + 1) + v.j; }

  Vertex vertex_at(int index) const {
    return {index / (s_ + 1), index % (s_ + 1)};
  }

  Vertex bottom() const { return {0, 0}; }
  Vertex top() const { return {r_, s_}; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int r_;
  int s_;
};

class TransferSystem;

// The relation containing u -> v for every comparable pair u <= v.
TransferSystem complete_relation(const Grid& g);

}  // namespace tsys

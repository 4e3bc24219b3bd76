#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tsys/lattice.hpp"
#include "tsys/relation.hpp"

namespace tsys {

// A transfer system on a grid: a reflexive relation contained in the
// divisibility order and closed under transitivity and restriction
// (meet against every vertex). Values are immutable after construction.
//
// The diagonal is always stored but never counted or serialized; edge
// counts and edge lists mean strict edges throughout.
class TransferSystem {
 public:
  struct unchecked_t {};
  static constexpr unchecked_t unchecked{};

  // Wraps a relation the caller guarantees is a valid transfer system.
  TransferSystem(Grid g, detail::RelMatrix rel, unchecked_t)
      : grid_(g), rel_(std::move(rel)) {}

  static TransferSystem diagonal(const Grid& g);

  const Grid& grid() const { return grid_; }
  const detail::RelMatrix& rel() const { return rel_; }

  bool contains(Vertex u, Vertex v) const {
    return rel_.test(grid_.index(u), grid_.index(v));
  }
  bool contains(const Edge& e) const { return contains(e.src, e.dst); }

  std::size_t strict_edge_count() const;
  std::vector<Edge> strict_edges() const;  // sorted by (src, dst)

  bool subset_of(const TransferSystem& other) const;

  friend bool operator==(const TransferSystem&, const TransferSystem&) =
      default;

 private:
  Grid grid_;
  detail::RelMatrix rel_;
};

// Deterministic order on systems over one grid: lexicographic on the
// sorted strict-edge list.
bool canonical_less(const TransferSystem& a, const TransferSystem& b);

enum class Axiom { Subgroup, Transitivity, Restriction };

std::string to_string(Axiom a);

struct ValidationIssue {
  Axiom axiom;
  Edge missing;              // the required edge that is absent
  Vertex witness_u, witness_v, witness_w;  // the premise vertices
};

struct ValidationReport {
  std::vector<ValidationIssue> violations;
  bool valid() const { return violations.empty(); }
};

// Checks whether the reflexive closure of `edges` is a transfer system.
// Out-of-bounds vertices are input errors, not axiom violations.
ValidationReport validate(const Grid& g, std::span<const Edge> edges);

// Least transfer system containing `edges`: round-robin fixpoint over
// restriction and transitivity. Edges must satisfy the subgroup condition.
TransferSystem transfer_closure(const Grid& g, std::span<const Edge> edges);

// Wraps an edge set that is already a transfer system; throws InputError
// listing the first axiom violation otherwise.
TransferSystem require_transfer_system(const Grid& g,
                                       std::span<const Edge> edges);

struct ComponentPartition {
  std::vector<int> component_id;            // by vertex index
  std::vector<std::vector<Vertex>> members; // per id, in index order
  std::vector<Vertex> smallest;             // per id; lex and coordinatewise min
  int count = 0;

  int id_of(Vertex v, const Grid& g) const { return component_id[g.index(v)]; }
  bool same(Vertex u, Vertex v, const Grid& g) const {
    return id_of(u, g) == id_of(v, g);
  }
  // Ids are assigned in lexicographic order of their smallest vertices, so
  // equal id vectors mean equal partitions.
  friend bool operator==(const ComponentPartition&, const ComponentPartition&) =
      default;
};

// Partition by undirected reachability.
ComponentPartition components(const TransferSystem& t);

// An undirected path of length at most two: from <- mid -> to, where each
// leg is an edge of T or degenerate (mid equal to the endpoint).
struct ZigzagPath {
  Vertex from, mid, to;
  int length() const { return (mid != from ? 1 : 0) + (mid != to ? 1 : 0); }
};

// Returns a connecting path when u and v lie in one component, else nullopt.
std::optional<ZigzagPath> zigzag_path(const TransferSystem& t, Vertex u,
                                      Vertex v);

// The lexicographically smallest vertex of the component of v; it is also
// the coordinatewise minimum and has a direct edge to every member.
Vertex smallest_vertex(const TransferSystem& t, Vertex v);

// The p <-> q symmetry: grid(r,s) -> grid(s,r), (i,j) -> (j,i).
TransferSystem transpose(const TransferSystem& t);

}  // namespace tsys

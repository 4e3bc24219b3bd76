#include "tsys/lattice.hpp"

#include "tsys/transfer.hpp"

namespace tsys {

std::string to_string(Vertex v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string to_string(const Edge& e) {
  return to_string(e.src) + "->" + to_string(e.dst);
}

TransferSystem complete_relation(const Grid& g) {
  detail::RelMatrix rel(g.vertex_count());
  for (int u = 0; u < rel.n; ++u)
    for (int v = 0; v < rel.n; ++v)
      if (leq(g.vertex_at(u), g.vertex_at(v))) rel.set(u, v);
  return TransferSystem(g, std::move(rel), TransferSystem::unchecked);
}

}  // namespace tsys

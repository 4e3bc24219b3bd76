#include "tsys/saturation.hpp"

#include "closure_ops.hpp"

namespace tsys {

SaturationReport is_saturated(const TransferSystem& t) {
  const Grid& g = t.grid();
  const auto& m = t.rel();
  SaturationReport report;
  // Index order is lexicographic, so violations come out sorted by
  // (low, mid, high) and the front entry is the canonical witness.
  for (int l = 0; l < m.n; ++l) {
    Vertex vl = g.vertex_at(l);
    for (int k = 0; k < m.n; ++k) {
      if (k == l) continue;
      Vertex vk = g.vertex_at(k);
      if (!leq(vl, vk)) continue;
      for (int h = 0; h < m.n; ++h) {
        if (h == k) continue;
        Vertex vh = g.vertex_at(h);
        if (!leq(vk, vh)) continue;
        if (m.test(l, h) && !m.test(k, h))
          report.violations.push_back({vl, vk, vh});
      }
    }
  }
  report.saturated = report.violations.empty();
  return report;
}

TransferSystem hull(const TransferSystem& t) {
  const Grid& g = t.grid();
  ComponentPartition parts = components(t);
  detail::RelMatrix rel(g.vertex_count());
  for (int u = 0; u < rel.n; ++u)
    for (int v = 0; v < rel.n; ++v)
      if (parts.component_id[u] == parts.component_id[v] &&
          leq(g.vertex_at(u), g.vertex_at(v)))
        rel.set(u, v);
  return TransferSystem(g, std::move(rel), TransferSystem::unchecked);
}

TransferSystem hull_fixpoint(const TransferSystem& t) {
  const Grid& g = t.grid();
  detail::RelMatrix m = t.rel();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int l = 0; l < m.n; ++l) {
      Vertex vl = g.vertex_at(l);
      for (int h = 0; h < m.n; ++h) {
        if (l == h || !m.test(l, h)) continue;
        Vertex vh = g.vertex_at(h);
        for (int k = 0; k < m.n; ++k) {
          Vertex vk = g.vertex_at(k);
          if (leq(vl, vk) && leq(vk, vh) && !m.test(k, h)) {
            m.set(k, h);
            changed = true;
          }
        }
      }
    }
    if (changed) detail::close_transfer(m, g);
  }
  return TransferSystem(g, std::move(m), TransferSystem::unchecked);
}

bool is_connected(const TransferSystem& t) { return components(t).count == 1; }

}  // namespace tsys

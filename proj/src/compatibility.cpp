#include "tsys/compatibility.hpp"

#include <stdexcept>

#include "closure_ops.hpp"
#include "tsys/enumerate.hpp"

namespace tsys {

namespace {

// One sweep of the compatibility rule with respect to the fixed system t:
// for b -> a in t and c <= a, if m already relates meet(b,c) -> b then it
// must relate c -> a.
bool compatibility_pass(detail::RelMatrix& m, const TransferSystem& t) {
  const Grid& g = t.grid();
  bool changed = false;
  for (int b = 0; b < m.n; ++b) {
    Vertex vb = g.vertex_at(b);
    for (int a = 0; a < m.n; ++a) {
      if (a == b || !t.rel().test(b, a)) continue;
      Vertex va = g.vertex_at(a);
      for (int c = 0; c < m.n; ++c) {
        Vertex vc = g.vertex_at(c);
        if (!leq(vc, va)) continue;
        int d = g.index(meet(vb, vc));
        if (m.test(d, b) && !m.test(c, a)) {
          m.set(c, a);
          changed = true;
        }
      }
    }
  }
  return changed;
}

detail::RelMatrix seed_with_edges(const TransferSystem& t,
                                  std::span<const Edge> s) {
  const Grid& g = t.grid();
  detail::RelMatrix m = t.rel();
  for (const Edge& e : s) {
    g.require(e.src);
    g.require(e.dst);
    if (!leq(e.src, e.dst))
      throw InputError("edge " + to_string(e) +
                       " violates the subgroup condition");
    m.set(g.index(e.src), g.index(e.dst));
  }
  return m;
}

detail::RelMatrix extension_fixpoint(const TransferSystem& t,
                                     std::span<const Edge> s) {
  const Grid& g = t.grid();
  detail::RelMatrix m = seed_with_edges(t, s);
  bool changed = true;
  while (changed) {
    detail::close_transfer(m, g);
    changed = compatibility_pass(m, t);
  }
  return m;
}

// Staged closure for edge sets rooted at (0,0): restriction alone, then
// transitivity, then the compatibility rule alone.
detail::RelMatrix extension_staged(const TransferSystem& t,
                                   std::span<const Edge> s) {
  const Grid& g = t.grid();
  detail::RelMatrix m = seed_with_edges(t, s);
  detail::close_restriction(m, g);
  detail::close_transitive(m);
  while (compatibility_pass(m, t)) {
  }
  return m;
}

}  // namespace

CompatReport is_compatible(const TransferSystem& t, const TransferSystem& tp) {
  if (t.grid() != tp.grid())
    throw InputError("compatibility check requires systems on the same grid");
  const Grid& g = t.grid();
  const int n = t.rel().n;

  CompatReport report;
  for (const Edge& e : t.strict_edges())
    if (!tp.contains(e)) report.missing_containment.push_back(e);

  for (int b = 0; b < n; ++b) {
    Vertex vb = g.vertex_at(b);
    for (int a = 0; a < n; ++a) {
      if (a == b || !t.rel().test(b, a)) continue;
      Vertex va = g.vertex_at(a);
      for (int c = 0; c < n; ++c) {
        Vertex vc = g.vertex_at(c);
        if (!leq(vc, va)) continue;
        Vertex vd = meet(vb, vc);
        if (tp.contains(vd, vb) && !tp.contains(vc, va))
          report.violations.push_back({va, vb, vc, vd});
      }
    }
  }
  report.compatible = report.violations.empty();
  return report;
}

TransferSystem min_compatible_extension(const TransferSystem& t,
                                        std::span<const Edge> s) {
  const Grid& g = t.grid();
  detail::RelMatrix m = extension_fixpoint(t, s);

  bool rooted = true;
  for (const Edge& e : s) rooted &= e.src == Vertex{0, 0};
  if (rooted) {
    // The staged order is provably equivalent here; treat disagreement as
    // an internal error rather than picking one answer silently.
    detail::RelMatrix staged = extension_staged(t, s);
    if (!(staged == m))
      throw std::logic_error(
          "staged and fixpoint compatible extensions disagree");
  }
  return TransferSystem(g, std::move(m), TransferSystem::unchecked);
}

TransferSystem core_chain(const TransferSystem& t) {
  const Grid& g = t.grid();
  if (!g.is_chain())
    throw PreconditionError("core is defined for chains only (r=0 or s=0)");
  std::vector<Edge> units;
  int n = g.r() + g.s();
  for (int x = 0; x < n; ++x) {
    Vertex lo = g.s() == 0 ? Vertex{x, 0} : Vertex{0, x};
    Vertex hi = g.s() == 0 ? Vertex{x + 1, 0} : Vertex{0, x + 1};
    if (t.contains(lo, hi)) units.push_back({lo, hi});
  }
  return transfer_closure(g, units);
}

std::vector<TransferSystem> compatible_supersets(const TransferSystem& t,
                                                 int max_vertices) {
  if (t.grid().vertex_count() > max_vertices)
    throw ResourceError("compatible_supersets guard exceeded: " +
                        std::to_string(t.grid().vertex_count()) + " vertices");
  std::vector<TransferSystem> result;
  for (TransferSystem& candidate :
       enumerate_supersets(t, {.max_vertices = max_vertices}))
    if (is_compatible(t, candidate).compatible)
      result.push_back(std::move(candidate));
  return result;  // enumeration order is already canonical
}

}  // namespace tsys

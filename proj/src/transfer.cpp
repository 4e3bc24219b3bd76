#include "tsys/transfer.hpp"

#include <algorithm>
#include <set>

#include "closure_ops.hpp"

namespace tsys {

namespace {

// One sweep of the restriction rule: for every present edge u -> v and
// every vertex w, add meet(u,w) -> meet(v,w).
bool restriction_pass(detail::RelMatrix& m, const Grid& g) {
  bool changed = false;
  for (int u = 0; u < m.n; ++u) {
    for (int v = 0; v < m.n; ++v) {
      if (u == v || !m.test(u, v)) continue;
      Vertex vu = g.vertex_at(u), vv = g.vertex_at(v);
      for (int w = 0; w < m.n; ++w) {
        Vertex vw = g.vertex_at(w);
        int a = g.index(meet(vu, vw));
        int b = g.index(meet(vv, vw));
        if (!m.test(a, b)) {
          m.set(a, b);
          changed = true;
        }
      }
    }
  }
  return changed;
}

// Warshall sweep; leaves m transitively closed.
bool transitive_pass(detail::RelMatrix& m) {
  bool changed = false;
  for (int k = 0; k < m.n; ++k)
    for (int u = 0; u < m.n; ++u)
      if (u != k && m.test(u, k)) changed |= m.or_row(u, k);
  return changed;
}

}  // namespace

namespace detail {

void close_restriction(RelMatrix& m, const Grid& g) {
  while (restriction_pass(m, g)) {
  }
}

void close_transitive(RelMatrix& m) { transitive_pass(m); }

void close_transfer(RelMatrix& m, const Grid& g) {
  bool changed = true;
  while (changed) {
    changed = restriction_pass(m, g);
    changed |= transitive_pass(m);
  }
}

}  // namespace detail

TransferSystem TransferSystem::diagonal(const Grid& g) {
  detail::RelMatrix rel(g.vertex_count());
  rel.set_diagonal();
  return TransferSystem(g, std::move(rel), unchecked);
}

std::size_t TransferSystem::strict_edge_count() const {
  return static_cast<std::size_t>(rel_.popcount() - rel_.n);
}

std::vector<Edge> TransferSystem::strict_edges() const {
  std::vector<Edge> edges;
  edges.reserve(strict_edge_count());
  for (int u = 0; u < rel_.n; ++u)
    for (int v = 0; v < rel_.n; ++v)
      if (u != v && rel_.test(u, v))
        edges.push_back({grid_.vertex_at(u), grid_.vertex_at(v)});
  return edges;  // already sorted: index order is (src, dst) order
}

bool TransferSystem::subset_of(const TransferSystem& other) const {
  return grid_ == other.grid_ && rel_.subset_of(other.rel_);
}

bool canonical_less(const TransferSystem& a, const TransferSystem& b) {
  auto ea = a.strict_edges(), eb = b.strict_edges();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(),
                                      eb.end());
}

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Subgroup: return "subgroup";
    case Axiom::Transitivity: return "transitivity";
    case Axiom::Restriction: return "restriction";
  }
  return "?";
}

ValidationReport validate(const Grid& g, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    g.require(e.src);
    g.require(e.dst);
  }

  detail::RelMatrix m(g.vertex_count());
  m.set_diagonal();
  for (const Edge& e : edges) m.set(g.index(e.src), g.index(e.dst));

  ValidationReport report;
  // Dedupe by (axiom, missing edge); keep the first witness seen.
  std::set<std::pair<Axiom, Edge>> seen;
  auto add = [&](Axiom ax, Edge missing, Vertex u, Vertex v, Vertex w) {
    if (seen.insert({ax, missing}).second)
      report.violations.push_back({ax, missing, u, v, w});
  };

  for (const Edge& e : edges)
    if (e.src != e.dst && !leq(e.src, e.dst))
      add(Axiom::Subgroup, e, e.src, e.dst, e.src);

  const int n = m.n;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !m.test(u, v)) continue;
      Vertex vu = g.vertex_at(u), vv = g.vertex_at(v);
      for (int w = 0; w < n; ++w) {
        Vertex vw = g.vertex_at(w);
        if (w != u && w != v && m.test(v, w) && !m.test(u, w))
          add(Axiom::Transitivity, {vu, vw}, vu, vv, vw);
        Vertex a = meet(vu, vw), b = meet(vv, vw);
        if (a != b && !m.test(g.index(a), g.index(b)))
          add(Axiom::Restriction, {a, b}, vu, vv, vw);
      }
    }
  return report;
}

TransferSystem transfer_closure(const Grid& g, std::span<const Edge> edges) {
  detail::RelMatrix m(g.vertex_count());
  m.set_diagonal();
  for (const Edge& e : edges) {
    g.require(e.src);
    g.require(e.dst);
    if (!leq(e.src, e.dst))
      throw InputError("edge " + to_string(e) +
                       " violates the subgroup condition");
    m.set(g.index(e.src), g.index(e.dst));
  }
  detail::close_transfer(m, g);
  return TransferSystem(g, std::move(m), TransferSystem::unchecked);
}

TransferSystem require_transfer_system(const Grid& g,
                                       std::span<const Edge> edges) {
  ValidationReport report = validate(g, edges);
  if (!report.valid()) {
    const ValidationIssue& first = report.violations.front();
    throw InputError("edge set is not a transfer system (" +
                     std::to_string(report.violations.size()) +
                     " violations; first: " + to_string(first.axiom) +
                     " requires " + to_string(first.missing) + ")");
  }
  detail::RelMatrix m(g.vertex_count());
  m.set_diagonal();
  for (const Edge& e : edges) m.set(g.index(e.src), g.index(e.dst));
  return TransferSystem(g, std::move(m), TransferSystem::unchecked);
}

ComponentPartition components(const TransferSystem& t) {
  const Grid& g = t.grid();
  const auto& m = t.rel();
  const int n = m.n;

  ComponentPartition parts;
  parts.component_id.assign(n, -1);
  // Scanning vertices in index (= lexicographic) order means each new
  // component is discovered at its lexicographically smallest vertex.
  for (int seed = 0; seed < n; ++seed) {
    if (parts.component_id[seed] != -1) continue;
    int id = parts.count++;
    std::vector<int> stack{seed};
    parts.component_id[seed] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (parts.component_id[v] != -1) continue;
        if (m.test(u, v) || m.test(v, u)) {
          parts.component_id[v] = id;
          stack.push_back(v);
        }
      }
    }
    parts.smallest.push_back(g.vertex_at(seed));
  }
  parts.members.resize(parts.count);
  for (int v = 0; v < n; ++v)
    parts.members[parts.component_id[v]].push_back(g.vertex_at(v));
  return parts;
}

std::optional<ZigzagPath> zigzag_path(const TransferSystem& t, Vertex u,
                                      Vertex v) {
  t.grid().require(u);
  t.grid().require(v);
  if (u == v) return ZigzagPath{u, u, v};
  if (t.contains(u, v)) return ZigzagPath{u, u, v};
  if (t.contains(v, u)) return ZigzagPath{u, v, v};
  ComponentPartition parts = components(t);
  if (!parts.same(u, v, t.grid())) return std::nullopt;
  // The smallest vertex of the component has a direct edge to both.
  Vertex w = parts.smallest[parts.id_of(u, t.grid())];
  return ZigzagPath{u, w, v};
}

Vertex smallest_vertex(const TransferSystem& t, Vertex v) {
  t.grid().require(v);
  ComponentPartition parts = components(t);
  return parts.smallest[parts.id_of(v, t.grid())];
}

TransferSystem transpose(const TransferSystem& t) {
  Grid g(t.grid().s(), t.grid().r());
  detail::RelMatrix rel(g.vertex_count());
  for (int u = 0; u < rel.n; ++u)
    for (int v = 0; v < rel.n; ++v) {
      Vertex a = g.vertex_at(u), b = g.vertex_at(v);
      if (t.contains({a.j, a.i}, {b.j, b.i})) rel.set(u, v);
    }
  return TransferSystem(g, std::move(rel), TransferSystem::unchecked);
}

}  // namespace tsys

#include "tsys/classify.hpp"

#include <algorithm>

#include "tsys/enumerate.hpp"

namespace tsys {

std::string ShapeTag::name() const {
  switch (kind) {
    case Kind::Vl: return "V" + std::to_string(ell);
    case Kind::Hk: return "H" + std::to_string(k);
    case Kind::L:
      return "L(" + std::to_string(ell) + "," + std::to_string(k) + ")";
    case Kind::Rectangle:
      return "rectangle " + to_string(lo) + ".." + to_string(hi);
    case Kind::Irregular: return "irregular";
  }
  return "?";
}

ShapeTag shape_of(const TransferSystem& t, const ComponentPartition& parts,
                  int component_id) {
  if (component_id < 0 || component_id >= parts.count)
    throw InputError("no component with id " + std::to_string(component_id));
  const Grid& g = t.grid();
  const auto& members = parts.members[component_id];

  auto is_member = [&](Vertex v) {
    return parts.component_id[g.index(v)] == component_id;
  };

  Vertex lo = members.front(), hi = members.front();
  for (Vertex v : members) {
    lo = {std::min(lo.i, v.i), std::min(lo.j, v.j)};
    hi = {std::max(hi.i, v.i), std::max(hi.j, v.j)};
  }
  const std::size_t box_size =
      static_cast<std::size_t>(hi.i - lo.i + 1) * (hi.j - lo.j + 1);
  const bool is_box = members.size() == box_size;

  // V / H take precedence over the plain box so that origin components of
  // two-component systems get their structural tag; on chains this also
  // resolves the degenerate single-vertex component to the chain-appropriate
  // one (V0 when s = 0, H0 when r = 0).
  if (is_box && lo == Vertex{0, 0} && hi.j == g.s() && hi.i < g.r())
    return {.kind = ShapeTag::Kind::Vl, .ell = hi.i};
  if (is_box && lo == Vertex{0, 0} && hi.i == g.r() && hi.j < g.s())
    return {.kind = ShapeTag::Kind::Hk, .k = hi.j};

  if (lo == Vertex{0, 0} && hi == g.top()) {
    // Candidate L with nook (ell, k): columns 0..ell plus rows 0..k.
    int ell = -1, k = -1;
    while (ell + 1 <= g.r() && is_member({ell + 1, g.s()})) ++ell;
    while (k + 1 <= g.s() && is_member({g.r(), k + 1})) ++k;
    if (ell >= 0 && k >= 0 && ell < g.r() && k < g.s()) {
      std::size_t l_size = static_cast<std::size_t>(ell + 1) * (g.s() + 1) +
                           static_cast<std::size_t>(g.r() - ell) * (k + 1);
      bool matches = members.size() == l_size;
      for (Vertex v : members)
        matches &= v.i <= ell || v.j <= k;
      if (matches)
        return {.kind = ShapeTag::Kind::L, .ell = ell, .k = k};
    }
  }

  if (is_box)
    return {.kind = ShapeTag::Kind::Rectangle, .lo = lo, .hi = hi};
  return {.kind = ShapeTag::Kind::Irregular};
}

ShapeTag shape_of(const TransferSystem& t, int component_id) {
  return shape_of(t, components(t), component_id);
}

std::string lsp_reason_name(LspReason r) {
  switch (r) {
    case LspReason::Connected: return "connected";
    case LspReason::TwoCompH0orV0: return "two components, origin row/column";
    case LspReason::TwoCompThick: return "two components, thick rectangle";
    case LspReason::TwoCompL: return "two components, L-shaped";
    case LspReason::ThreePlusComponents: return "three or more components";
    case LspReason::OracleOnly: return "exhaustive oracle";
  }
  return "?";
}

namespace {

LspVerdict not_lsp_with_extension(const TransferSystem& t, LspReason reason,
                                  Vertex target) {
  const Edge added[] = {Edge{{0, 0}, target}};
  return {.is_lsp = false,
          .reason = reason,
          .witness = min_compatible_extension(t, added)};
}

}  // namespace

LspVerdict is_lsp_fast(const TransferSystem& t) {
  ComponentPartition parts = components(t);
  if (parts.count == 1)
    return {.is_lsp = true, .reason = LspReason::Connected};

  const Grid& g = t.grid();
  if (parts.count >= 3) {
    // Lexicographically smallest vertex outside the origin component; with
    // three or more components it never lies in the top component.
    for (int v = 0; v < g.vertex_count(); ++v)
      if (parts.component_id[v] != 0)
        return not_lsp_with_extension(t, LspReason::ThreePlusComponents,
                                      g.vertex_at(v));
    throw std::logic_error("multi-component system with a single component");
  }

  ShapeTag shape = shape_of(t, parts, 0);
  switch (shape.kind) {
    case ShapeTag::Kind::Vl:
      if (shape.ell == 0)
        return {.is_lsp = true, .reason = LspReason::TwoCompH0orV0};
      return not_lsp_with_extension(t, LspReason::TwoCompThick,
                                    {shape.ell + 1, 0});
    case ShapeTag::Kind::Hk:
      if (shape.k == 0)
        return {.is_lsp = true, .reason = LspReason::TwoCompH0orV0};
      return not_lsp_with_extension(t, LspReason::TwoCompThick,
                                    {0, shape.k + 1});
    case ShapeTag::Kind::L:
      return not_lsp_with_extension(t, LspReason::TwoCompL,
                                    {shape.ell + 1, shape.k + 1});
    default:
      // Two-component origin components are always V, H or L shaped.
      throw std::logic_error("unexpected origin component shape: " +
                             shape.name());
  }
}

LspVerdict is_lsp_oracle(const TransferSystem& t, int max_vertices) {
  std::vector<TransferSystem> supersets =
      compatible_supersets(t, max_vertices);
  TransferSystem h = hull(t);
  TransferSystem c = complete_relation(t.grid());
  for (TransferSystem& tp : supersets)
    if (!(tp == h) && !(tp == c))
      return {.is_lsp = false,
              .reason = LspReason::OracleOnly,
              .witness = std::move(tp)};
  return {.is_lsp = true, .reason = LspReason::OracleOnly};
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (unsigned idx = 1; idx <= k; ++idx) {
    result *= n - k + idx;
    result /= idx;  // exact: product of idx consecutive integers
  }
  return result;
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt fuss_catalan_A(unsigned m) {
  return binomial(3 * m + 1, m) / (3 * m + 1);
}

BigInt lsp_count_chain(unsigned n) {
  if (n < 1) throw InputError("lsp_count_chain requires n >= 1");
  return catalan(n) + catalan(n - 1);
}

BigRational lsp_proportion_chain(unsigned n) {
  if (n < 1) throw InputError("lsp_proportion_chain requires n >= 1");
  BigRational proportion(lsp_count_chain(n), catalan(n + 1));
  BigInt nn = n;
  BigRational closed_form(5 * nn * nn + 9 * nn - 2, 16 * nn * nn - 4);
  if (proportion != closed_form)
    throw std::logic_error("chain LSP proportion disagrees with closed form");
  return proportion;
}

long round_hundredths(const BigRational& x) {
  BigRational scaled = x * 100 + BigRational(1, 2);
  BigInt floored = numerator(scaled) / denominator(scaled);  // x >= 0 here
  return floored.convert_to<long>();
}

}  // namespace tsys

#include "tsys/enumerate.hpp"

#include <algorithm>
#include <set>

#include "closure_ops.hpp"
#include "tsys/classify.hpp"
#include "tsys/compatibility.hpp"
#include "tsys/saturation.hpp"

namespace tsys {

namespace {

std::vector<std::pair<int, int>> candidate_edges(const Grid& g) {
  std::vector<std::pair<int, int>> cands;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && leq(g.vertex_at(u), g.vertex_at(v)))
        cands.emplace_back(u, v);
  return cands;  // index order = lexicographic edge order
}

void check_guard(const Grid& g, const EnumerationLimits& limits) {
  if (g.vertex_count() > limits.max_vertices)
    throw ResourceError("enumeration guard exceeded: grid(" +
                        std::to_string(g.r()) + "," + std::to_string(g.s()) +
                        ") has " + std::to_string(g.vertex_count()) +
                        " vertices, limit " +
                        std::to_string(limits.max_vertices));
}

// Depth-first enumeration of all transfer systems containing `base`.
// Candidates are decided in order; inclusion closes immediately and any
// branch whose closure re-adds an excluded edge is pruned, so each closed
// set is produced exactly once. A canonical-form set guards the invariant.
class Enumerator {
 public:
  Enumerator(const Grid& g, detail::RelMatrix base)
      : grid_(g), cands_(candidate_edges(g)) {
    excluded_.assign(cands_.size(), false);
    dfs(std::move(base), 0);
    std::sort(out_.begin(), out_.end(), canonical_less);
  }

  std::vector<TransferSystem> take() { return std::move(out_); }

 private:
  void dfs(detail::RelMatrix m, std::size_t k) {
    while (k < cands_.size() && m.test(cands_[k].first, cands_[k].second)) ++k;
    if (k == cands_.size()) {
      emit(std::move(m));
      return;
    }
    excluded_[k] = true;
    dfs(m, k + 1);
    excluded_[k] = false;

    detail::RelMatrix with = m;
    with.set(cands_[k].first, cands_[k].second);
    detail::close_transfer(with, grid_);
    for (std::size_t j = 0; j < k; ++j)
      if (excluded_[j] && with.test(cands_[j].first, cands_[j].second)) return;
    dfs(std::move(with), k + 1);
  }

  void emit(detail::RelMatrix m) {
    if (!seen_.insert(m.bits).second) return;  // never hit; duplicate guard
    out_.emplace_back(grid_, std::move(m), TransferSystem::unchecked);
  }

  Grid grid_;
  std::vector<std::pair<int, int>> cands_;
  std::vector<bool> excluded_;
  std::set<std::vector<std::uint64_t>> seen_;
  std::vector<TransferSystem> out_;
};

}  // namespace

std::vector<TransferSystem> enumerate_transfer_systems(
    const Grid& g, EnumerationLimits limits) {
  check_guard(g, limits);
  detail::RelMatrix base(g.vertex_count());
  base.set_diagonal();
  return Enumerator(g, std::move(base)).take();
}

std::vector<TransferSystem> enumerate_supersets(const TransferSystem& base,
                                                EnumerationLimits limits) {
  check_guard(base.grid(), limits);
  return Enumerator(base.grid(), base.rel()).take();
}

std::uint64_t count_transfer_systems(const Grid& g, EnumerationLimits limits) {
  return enumerate_transfer_systems(g, limits).size();
}

std::uint64_t count_transfer_systems_naive(const Grid& g,
                                           int max_candidate_edges) {
  auto cands = candidate_edges(g);
  if (static_cast<int>(cands.size()) > max_candidate_edges)
    throw ResourceError("naive enumeration guard exceeded: " +
                        std::to_string(cands.size()) + " candidate edges");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cands.size());
       ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < cands.size(); ++b)
      if (mask >> b & 1)
        edges.push_back(
            {g.vertex_at(cands[b].first), g.vertex_at(cands[b].second)});
    if (validate(g, edges).valid()) ++count;
  }
  return count;
}

std::uint64_t count_compatible_pairs(const Grid& g, EnumerationLimits limits) {
  auto all = enumerate_transfer_systems(g, limits);
  std::uint64_t count = 0;
  for (const TransferSystem& t : all)
    for (const TransferSystem& tp : all)
      if (t.subset_of(tp) && is_compatible(t, tp).compatible) ++count;
  return count;
}

std::uint64_t count_filtered(const Grid& g, SystemFilter filter,
                             EnumerationLimits limits) {
  auto all = enumerate_transfer_systems(g, limits);
  std::uint64_t count = 0;
  for (const TransferSystem& t : all) {
    bool keep = false;
    switch (filter) {
      case SystemFilter::Saturated: keep = is_saturated(t).saturated; break;
      case SystemFilter::Connected: keep = is_connected(t); break;
      case SystemFilter::Lsp: keep = is_lsp_fast(t).is_lsp; break;
    }
    if (keep) ++count;
  }
  return count;
}

}  // namespace tsys

#include "tsys/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "tsys/classify.hpp"
#include "tsys/compatibility.hpp"
#include "tsys/enumerate.hpp"
#include "tsys/saturation.hpp"
#include "tsys/transfer.hpp"

namespace tsys {

namespace {

struct Scope {
  Grid grid;
  std::string label;
};

std::string grid_label(const Grid& g) {
  return "grid(" + std::to_string(g.r()) + "," + std::to_string(g.s()) + ")";
}

class Suite {
 public:
  Suite(const VerifyOptions& opts, std::ostream* log)
      : opts_(opts), log_(log) {}

  VerifyResult take() { return std::move(result_); }

  void notice(const std::string& text) {
    result_.notices.push_back(text);
    if (log_) *log_ << "NOTE " << text << "\n";
  }

  void check(const std::string& name, bool pass, const std::string& detail) {
    result_.checks.push_back({name, pass, detail});
    if (log_) *log_ << (pass ? "PASS " : "FAIL ") << name
                    << (detail.empty() ? "" : " — " + detail) << "\n";
  }

  void run() {
    std::vector<Scope> scopes;
    for (Grid g : {Grid(1, 1), Grid(2, 1), Grid(1, 2), Grid(2, 2)})
      if (g.vertex_count() <= opts_.max_vertices)
        scopes.push_back({g, grid_label(g)});
    for (int n = 1; n <= opts_.max_chain; ++n)
      for (Grid g : {Grid(n, 0), Grid(0, n)})
        if (g.vertex_count() <= opts_.max_vertices)
          scopes.push_back({g, grid_label(g)});

    for (const Scope& scope : scopes) run_scope(scope);
  }

 private:
  void run_scope(const Scope& scope) {
    const Grid& g = scope.grid;
    std::vector<TransferSystem> all = enumerate_transfer_systems(
        g, {.max_vertices = opts_.max_vertices});

    std::vector<TransferSystem> sample = all;
    if (all.size() > opts_.sample_cap) {
      std::mt19937_64 rng(opts_.seed);
      std::shuffle(sample.begin(), sample.end(), rng);
      sample.erase(sample.begin() + opts_.sample_cap, sample.end());
      std::sort(sample.begin(), sample.end(), canonical_less);
      notice(scope.label + ": downgraded per-system checks to a sample of " +
             std::to_string(opts_.sample_cap) + " of " +
             std::to_string(all.size()) + " systems");
    }

    check_validity(scope, sample);
    check_hull(scope, sample);
    check_structure(scope, sample);
    check_pairs(scope, sample);
    check_lsp(scope, sample);
    check_extension_minimality(scope, sample);
    if (g.is_chain()) check_chain(scope, all);
  }

  void check_validity(const Scope& scope, const auto& systems) {
    std::size_t bad = 0;
    for (const TransferSystem& t : systems) {
      auto edges = t.strict_edges();
      if (!validate(t.grid(), edges).valid()) ++bad;
    }
    check(scope.label + " enumeration validity", bad == 0,
          std::to_string(systems.size()) + " systems, " + std::to_string(bad) +
              " invalid");
  }

  void check_hull(const Scope& scope, const auto& systems) {
    const TransferSystem complete = complete_relation(scope.grid);
    std::size_t bad = 0;
    for (const TransferSystem& t : systems) {
      TransferSystem h = hull(t);
      bool ok = h == hull_fixpoint(t);
      ok &= t.subset_of(h);
      ok &= hull(h) == h;
      ok &= is_saturated(h).saturated;
      ok &= components(t) == components(h);
      ok &= is_connected(t) == (h == complete);
      ok &= is_saturated(t).saturated == (h == t);
      if (!ok) ++bad;
    }
    check(scope.label + " hull: fixpoint route, idempotence, saturation, "
                        "component preservation",
          bad == 0, std::to_string(bad) + " failures");
  }

  void check_structure(const Scope& scope, const auto& systems) {
    const Grid& g = scope.grid;
    std::size_t bad = 0;
    for (const TransferSystem& t : systems) {
      ComponentPartition parts = components(t);
      bool ok = true;

      for (int u = 0; u < g.vertex_count() && ok; ++u)
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
          Vertex vu = g.vertex_at(u), vv = g.vertex_at(v);
          auto path = zigzag_path(t, vu, vv);
          if (parts.component_id[u] != parts.component_id[v]) {
            ok &= !path.has_value();
            continue;
          }
          ok &= path.has_value();
          if (!path) continue;
          ok &= path->from == vu && path->to == vv && path->length() <= 2;
          ok &= path->mid == path->from || t.contains(path->mid, path->from);
          ok &= path->mid == path->to || t.contains(path->mid, path->to);
        }

      for (int c = 0; c < parts.count && ok; ++c) {
        Vertex lo = parts.smallest[c];
        for (Vertex v : parts.members[c]) {
          ok &= leq(lo, v);
          ok &= !lex_less(v, lo);
          ok &= t.contains(lo, v);
        }
      }

      // The component of the top vertex is the coordinate box above its
      // smallest vertex.
      {
        int top_id = parts.id_of(g.top(), g);
        Vertex lo = parts.smallest[top_id];
        std::size_t expected = static_cast<std::size_t>(g.r() - lo.i + 1) *
                               (g.s() - lo.j + 1);
        ok &= parts.members[top_id].size() == expected;
        for (Vertex v : parts.members[top_id]) ok &= leq(lo, v);
      }

      if (parts.count == 2) {
        ShapeTag origin = shape_of(t, parts, 0);
        ok &= origin.kind == ShapeTag::Kind::Vl ||
              origin.kind == ShapeTag::Kind::Hk ||
              origin.kind == ShapeTag::Kind::L;
        ShapeTag top = shape_of(t, parts, parts.id_of(g.top(), g));
        ok &= top.kind == ShapeTag::Kind::Rectangle;
      }

      if (!ok) ++bad;
    }
    check(scope.label + " structure: zigzag, smallest-vertex edges, top "
                        "rectangle, two-component shapes",
          bad == 0, std::to_string(bad) + " failures");
  }

  void check_pairs(const Scope& scope, const auto& systems) {
    std::vector<TransferSystem> hulls;
    std::vector<char> saturated;
    hulls.reserve(systems.size());
    for (const TransferSystem& t : systems) {
      hulls.push_back(hull(t));
      saturated.push_back(is_saturated(t).saturated ? 1 : 0);
    }

    std::size_t bad = 0, pairs = 0;
    for (std::size_t i = 0; i < systems.size(); ++i)
      for (std::size_t j = 0; j < systems.size(); ++j) {
        if (!systems[i].subset_of(systems[j])) continue;
        ++pairs;
        bool compat = is_compatible(systems[i], systems[j]).compatible;
        if (compat && !hulls[i].subset_of(systems[j])) ++bad;
        if (saturated[j] && !compat) ++bad;
      }
    check(scope.label + " pairs: compatibility implies hull containment; "
                        "saturated supersets are compatible",
          bad == 0,
          std::to_string(pairs) + " nested pairs, " + std::to_string(bad) +
              " failures");
  }

  void check_lsp(const Scope& scope, const auto& systems) {
    const TransferSystem complete = complete_relation(scope.grid);
    std::size_t bad = 0;
    for (const TransferSystem& t : systems) {
      LspVerdict fast = is_lsp_fast(t);
      LspVerdict oracle = is_lsp_oracle(t, opts_.max_vertices);
      bool ok = fast.is_lsp == oracle.is_lsp;
      for (const LspVerdict* v : {&fast, &oracle}) {
        if (v->is_lsp) {
          ok &= !v->witness.has_value();
          continue;
        }
        ok &= v->witness.has_value();
        if (!v->witness) continue;
        const TransferSystem& w = *v->witness;
        ok &= is_compatible(t, w).compatible;
        TransferSystem h = hull(t);
        ok &= h.subset_of(w) && !(w == h);
        ok &= w.subset_of(complete) && !(w == complete);
      }
      if (!ok) ++bad;
    }
    check(scope.label +
              " lsp: fast verdict matches oracle; witnesses lie strictly "
              "between hull and complete",
          bad == 0, std::to_string(bad) + " failures");
  }

  // The minimal compatible extension is the least compatible superset
  // containing the seed edges, and with no seed it is exactly the hull.
  void check_extension_minimality(const Scope& scope, const auto& systems) {
    const Grid& g = scope.grid;
    std::size_t bad = 0, cases = 0;
    const bool exhaustive = g.vertex_count() <= 6;
    for (const TransferSystem& t : systems) {
      if (min_compatible_extension(t, {}) != hull(t)) ++bad;
      ++cases;
      if (!exhaustive) continue;

      auto supersets = compatible_supersets(t, opts_.max_vertices);
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v) {
          Vertex vu = g.vertex_at(u), vv = g.vertex_at(v);
          if (u == v || !leq(vu, vv) || t.contains(vu, vv)) continue;
          const Edge seed[] = {Edge{vu, vv}};
          TransferSystem ext = min_compatible_extension(t, seed);
          ++cases;
          bool ok = t.subset_of(ext) && ext.contains(seed[0]);
          ok &= is_compatible(t, ext).compatible;
          for (const TransferSystem& other : supersets)
            if (other.contains(seed[0])) ok &= ext.subset_of(other);
          if (!ok) ++bad;
        }
    }
    check(scope.label + " minimal compatible extensions: least among "
                        "compatible supersets; empty seed gives the hull",
          bad == 0,
          std::to_string(cases) + " cases, " + std::to_string(bad) +
              " failures");
  }

  void check_chain(const Scope& scope, const auto& all) {
    const int n = scope.grid.r() + scope.grid.s();
    std::size_t bad = 0;
    std::vector<TransferSystem> hulls, cores;
    for (const TransferSystem& t : all) {
      hulls.push_back(hull(t));
      cores.push_back(core_chain(t));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        bool compat = is_compatible(all[i], all[j]).compatible;
        bool law = all[i].subset_of(all[j]) && hulls[i].subset_of(cores[j]);
        if (compat != law) ++bad;
      }
    check(scope.label + " chain law: compatible iff hull within core",
          bad == 0, std::to_string(bad) + " failures");

    bool counts_ok = BigInt(all.size()) == catalan(n + 1);
    std::size_t connected_count = 0, lsp_count = 0;
    for (const TransferSystem& t : all) {
      connected_count += is_connected(t);
      lsp_count += is_lsp_fast(t).is_lsp;
    }
    counts_ok &= BigInt(connected_count) == catalan(n);
    counts_ok &= BigInt(lsp_count) == lsp_count_chain(n);
    check(scope.label + " chain counts: total, connected and lsp match the "
                        "Catalan formulas",
          counts_ok,
          "total " + std::to_string(all.size()) + ", connected " +
              std::to_string(connected_count) + ", lsp " +
              std::to_string(lsp_count));
  }

  VerifyOptions opts_;
  std::ostream* log_;
  VerifyResult result_;
};

}  // namespace

VerifyResult run_verify(const VerifyOptions& opts, std::ostream* log) {
  Suite suite(opts, log);
  suite.run();
  return suite.take();
}

}  // namespace tsys

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tsys/compatibility.hpp"
#include "tsys/enumerate.hpp"
#include "tsys/saturation.hpp"

using namespace tsys;
using tsys::test::fixture_system;
using tsys::test::make_system;

TEST_SUITE_BEGIN("compatibility");

TEST_CASE("the fixture pair is compatible") {
  auto t = fixture_system("compat_T.tsys");
  auto tp = fixture_system("compat_Tp.tsys");
  auto report = is_compatible(t, tp);
  CHECK(report.compatible);
  CHECK(report.missing_containment.empty());
  // tp lacks (1,0)->(2,1) and is compatible regardless: the square that
  // would force that edge needs (1,0)->(2,0) in tp, which is absent.
  CHECK_FALSE(tp.contains({1, 0}, {2, 1}));
}

TEST_CASE("the square-lattice counterexample is incompatible") {
  auto t = fixture_system("cpq_incompat_T.tsys");
  auto tp = fixture_system("cpq_incompat_Tp.tsys");
  // tp contains hull(t) = t, so containment alone cannot detect this.
  CHECK(hull(t) == t);
  CHECK(t.subset_of(tp));
  auto report = is_compatible(t, tp);
  CHECK_FALSE(report.compatible);
  CHECK(report.missing_containment.empty());
  REQUIRE_FALSE(report.violations.empty());
  const CompatViolation& w = report.violations.front();
  CHECK(w.a == Vertex{1, 1});
  CHECK(w.b == Vertex{0, 1});
  CHECK(w.c == Vertex{1, 0});
  CHECK(w.b_meet_c == Vertex{0, 0});
}

TEST_CASE("containment failures are reported on their own channel") {
  Grid g(1, 1);
  auto t = make_system(
      g, {{{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}});
  auto smaller = make_system(g, {{{0, 0}, {0, 1}}});
  auto report = is_compatible(t, smaller);
  CHECK_FALSE(report.compatible);
  CHECK(report.missing_containment ==
        std::vector<Edge>{{{0, 0}, {1, 0}}, {{0, 0}, {1, 1}}});
  // the same failures appear among the violations as the c == b cases
  for (const Edge& e : report.missing_containment)
    CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                      [&](const CompatViolation& v) {
                        return v.b == e.src && v.a == e.dst && v.c == v.b;
                      }));
}

TEST_CASE("grid mismatch is an input error") {
  CHECK_THROWS_AS(is_compatible(TransferSystem::diagonal(Grid(1, 1)),
                                TransferSystem::diagonal(Grid(2, 1))),
                  InputError);
}

TEST_CASE("hull and complete are compatible with everything") {
  for (Grid g : {Grid(1, 1), Grid(2, 1)}) {
    TransferSystem complete = complete_relation(g);
    for (const TransferSystem& t : enumerate_transfer_systems(g)) {
      CHECK(is_compatible(t, hull(t)).compatible);
      CHECK(is_compatible(t, complete).compatible);
    }
  }
}

TEST_CASE("empty seed extends to the hull") {
  for (const TransferSystem& t : enumerate_transfer_systems(Grid(2, 1)))
    CHECK(min_compatible_extension(t, {}) == hull(t));
}

TEST_CASE("extension from an L-shaped origin adds only the origin edges") {
  auto t = fixture_system("twocomp_l00.tsys");
  const Edge seed[] = {Edge{{0, 0}, {1, 1}}};
  auto ext = min_compatible_extension(t, seed);
  CHECK(ext == fixture_system("twocomp_l00_ext.tsys"));

  // independently: the hull plus an edge from the origin to every vertex
  detail::RelMatrix expected = hull(t).rel();
  for (int v = 0; v < t.grid().vertex_count(); ++v) expected.set(0, v);
  CHECK(ext == TransferSystem(t.grid(), std::move(expected),
                              TransferSystem::unchecked));
}

TEST_CASE("extension seeded off the origin can run to completeness") {
  auto t = fixture_system("twocomp_h0.tsys");
  const Edge seed[] = {Edge{{1, 0}, {1, 2}}};
  CHECK(min_compatible_extension(t, seed) == complete_relation(t.grid()));
}

TEST_CASE("extension rejects invalid seed edges") {
  auto t = TransferSystem::diagonal(Grid(1, 1));
  const Edge bad[] = {Edge{{1, 0}, {0, 1}}};
  CHECK_THROWS_AS(min_compatible_extension(t, bad), InputError);
  const Edge oob[] = {Edge{{0, 0}, {5, 5}}};
  CHECK_THROWS_AS(min_compatible_extension(t, oob), InputError);
}

TEST_CASE("extension is least among compatible supersets of the seed") {
  Grid g(1, 1);
  for (const TransferSystem& t : enumerate_transfer_systems(g)) {
    auto supersets = compatible_supersets(t);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v) {
        Vertex vu = g.vertex_at(u), vv = g.vertex_at(v);
        if (u == v || !leq(vu, vv)) continue;
        const Edge seed[] = {Edge{vu, vv}};
        auto ext = min_compatible_extension(t, seed);
        CHECK(is_compatible(t, ext).compatible);
        CHECK(ext.contains(seed[0]));
        for (const TransferSystem& other : supersets)
          if (other.contains(seed[0])) CHECK(ext.subset_of(other));
      }
  }
}

TEST_CASE("chain core keeps only unit-edge intervals") {
  Grid chain(2, 0);
  auto t = make_system(chain, {{{0, 0}, {1, 0}}, {{0, 0}, {2, 0}}});
  auto core = core_chain(t);
  CHECK(core.strict_edges() == std::vector<Edge>{{{0, 0}, {1, 0}}});

  auto complete = complete_relation(chain);
  CHECK(core_chain(complete) == complete);

  auto diag = TransferSystem::diagonal(chain);
  CHECK(core_chain(diag) == diag);
}

TEST_CASE("core works along either chain orientation") {
  Grid upright(0, 2);
  auto t = make_system(upright, {{{0, 0}, {0, 1}}, {{0, 0}, {0, 2}}});
  CHECK(core_chain(t).strict_edges() == std::vector<Edge>{{{0, 0}, {0, 1}}});
}

TEST_CASE("core rejects proper grids") {
  CHECK_THROWS_AS(core_chain(TransferSystem::diagonal(Grid(1, 1))),
                  PreconditionError);
}

TEST_CASE("chain compatibility is hull-within-core, exhaustively to n=5") {
  for (int n = 1; n <= 5; ++n) {
    Grid g(n, 0);
    auto all = enumerate_transfer_systems(g);
    std::vector<TransferSystem> hulls, cores;
    for (const TransferSystem& t : all) {
      hulls.push_back(hull(t));
      cores.push_back(core_chain(t));
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        bool law = all[i].subset_of(all[j]) && hulls[i].subset_of(cores[j]);
        CHECK(is_compatible(all[i], all[j]).compatible == law);
      }
  }
}

TEST_CASE("compatible supersets of the complete system") {
  auto complete = complete_relation(Grid(1, 1));
  auto list = compatible_supersets(complete);
  REQUIRE(list.size() == 1);
  CHECK(list.front() == complete);
}

TEST_CASE("compatible supersets of a connected system") {
  auto t = fixture_system("connected_one_comp.tsys");
  auto list = compatible_supersets(t);
  REQUIRE(list.size() == 1);
  CHECK(list.front() == complete_relation(t.grid()));
}

TEST_CASE("compatible supersets of the paired fixture") {
  auto t = fixture_system("compat_T.tsys");
  auto list = compatible_supersets(t);
  REQUIRE(list.size() >= 3);
  auto contains = [&](const TransferSystem& x) {
    return std::find(list.begin(), list.end(), x) != list.end();
  };
  CHECK(contains(hull(t)));
  CHECK(contains(complete_relation(t.grid())));
  CHECK(contains(fixture_system("compat_Tp.tsys")));
  CHECK(list.size() == 3);
}

TEST_CASE("superset search is guarded") {
  CHECK_THROWS_AS(compatible_supersets(TransferSystem::diagonal(Grid(3, 3))),
                  ResourceError);
}

TEST_SUITE_END();

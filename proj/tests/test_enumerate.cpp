#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "tsys/classify.hpp"
#include "tsys/enumerate.hpp"

using namespace tsys;

TEST_SUITE_BEGIN("enumerate");

TEST_CASE("small counts") {
  CHECK(count_transfer_systems(Grid(0, 0)) == 1);
  CHECK(count_transfer_systems(Grid(2, 0)) == 5);
  CHECK(count_transfer_systems(Grid(1, 1)) == 10);
  CHECK(count_transfer_systems(Grid(3, 0)) == 14);
}

TEST_CASE("chain totals are Catalan numbers") {
  for (int n = 0; n <= 7; ++n)
    CHECK(BigInt(count_transfer_systems(Grid(n, 0))) == catalan(n + 1));
}

TEST_CASE("enumeration is deterministic, distinct and valid") {
  Grid g(2, 1);
  auto first = enumerate_transfer_systems(g);
  auto second = enumerate_transfer_systems(g);
  CHECK(first == second);
  std::set<std::vector<Edge>> seen;
  for (const TransferSystem& t : first) {
    auto edges = t.strict_edges();
    CHECK(validate(g, edges).valid());
    CHECK(seen.insert(edges).second);
  }
}

TEST_CASE("backtracking agrees with the naive subset filter") {
  for (Grid g : {Grid(0, 0), Grid(1, 0), Grid(0, 1), Grid(2, 0), Grid(0, 2),
                 Grid(1, 1), Grid(3, 0), Grid(0, 3)}) {
    CAPTURE(g.r());
    CAPTURE(g.s());
    CHECK(count_transfer_systems(g) == count_transfer_systems_naive(g));
  }
}

TEST_CASE("the naive oracle is guarded") {
  CHECK_THROWS_AS(count_transfer_systems_naive(Grid(2, 2), 6), ResourceError);
}

TEST_CASE("naive agreement one size up") {
  // 12 candidate edges: 4096 subsets through validate
  CHECK(count_transfer_systems_naive(Grid(2, 1)) == 68);
  CHECK(count_transfer_systems(Grid(2, 1)) == 68);
}

TEST_CASE("the enumeration guard is explicit") {
  CHECK_THROWS_AS(count_transfer_systems(Grid(3, 3)), ResourceError);
  CHECK_THROWS_AS(count_transfer_systems(Grid(5, 0), {.max_vertices = 4}),
                  ResourceError);
  CHECK_NOTHROW(count_transfer_systems(Grid(5, 0), {.max_vertices = 6}));
}

TEST_CASE("superset enumeration matches filtering the full run") {
  auto base = tsys::test::fixture_system("compat_T.tsys");
  auto supers = enumerate_supersets(base);
  std::size_t expected = 0;
  for (const TransferSystem& t : enumerate_transfer_systems(base.grid()))
    expected += base.subset_of(t);
  CHECK(supers.size() == expected);
  for (const TransferSystem& t : supers) CHECK(base.subset_of(t));
}

TEST_CASE("compatible pair counts") {
  CHECK(count_compatible_pairs(Grid(0, 0)) == 1);
  CHECK(count_compatible_pairs(Grid(1, 0)) == 3);
  CHECK(count_compatible_pairs(Grid(2, 0)) == 12);
  CHECK(count_compatible_pairs(Grid(0, 2)) == 12);
}

TEST_CASE("filtered counts on chains") {
  CHECK(count_filtered(Grid(2, 0), SystemFilter::Lsp) == 3);
  CHECK(count_filtered(Grid(3, 0), SystemFilter::Lsp) == 7);
  CHECK(count_filtered(Grid(2, 0), SystemFilter::Connected) == 2);
  // saturated chain systems are the disjoint unions of complete intervals
  CHECK(count_filtered(Grid(2, 0), SystemFilter::Saturated) == 4);
  CHECK(count_filtered(Grid(3, 0), SystemFilter::Saturated) == 8);
}

TEST_SUITE_END();

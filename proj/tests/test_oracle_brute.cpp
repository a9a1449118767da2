#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "bipcon/bipartite_graph.hpp"
#include "bipcon/brute.hpp"
#include "bipcon/errors.hpp"

using namespace bipcon;

namespace {

// Union-find connectivity, independent of the bit-parallel search.
bool union_find_connected(const BipartiteGraph& g) {
  const std::int64_t total = g.n() + g.m();
  std::vector<std::int64_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::int64_t i = 0; i < g.n(); ++i) {
    for (std::int64_t j = 0; j < g.m(); ++j) {
      if (g.has_edge(i, j)) parent[find(i)] = find(g.n() + j);
    }
  }
  for (std::int64_t v = 1; v < total; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, std::int64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

TEST_CASE("is_connected examples") {
  CHECK(is_connected(BipartiteGraph::from_rows(1, {0b1})));
  CHECK_FALSE(is_connected(BipartiteGraph::from_rows(2, {0b01, 0b10})));
  CHECK(is_connected(BipartiteGraph::from_rows(2, {0b11, 0b10})));
  // Isolated right vertex.
  CHECK_FALSE(is_connected(BipartiteGraph::from_rows(3, {0b011, 0b011})));
  // Isolated left vertex.
  CHECK_FALSE(is_connected(BipartiteGraph::from_rows(2, {0b11, 0b00})));
}

TEST_CASE("BipartiteGraph keeps rows and columns consistent") {
  BipartiteGraph g(3, 130);
  g.set_edge(0, 129);
  g.set_edge(2, 64);
  g.set_edge(2, 64);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 129));
  CHECK_FALSE(g.has_edge(1, 129));
  g.set_edge(2, 64, false);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(BipartiteGraph::from_rows(2, {0b100}), DomainError);
  CHECK_THROWS_AS(BipartiteGraph(0, 2), DomainError);
}

TEST_CASE("is_connected agrees with union-find on random graphs") {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> size(1, 90);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = size(gen);
    const int m = size(gen);
    // Around the connectivity threshold so both outcomes occur.
    const double p = std::min(1.0, unit(gen) * 3.0 * std::log(n + m + 1.0) / std::min(n, m));
    BipartiteGraph g(n, m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if (unit(gen) < p) g.set_edge(i, j);
      }
    }
    CHECK(is_connected(g) == union_find_connected(g));
  }
}

TEST_CASE("edge_count_profile examples") {
  const auto p22 = edge_count_profile(2, 2);
  CHECK(p22.counts == std::vector<std::uint64_t>{0, 0, 0, 4, 1});
  const auto p12 = edge_count_profile(1, 2);
  CHECK(p12.counts == std::vector<std::uint64_t>{0, 0, 1});
  CHECK(edge_count_profile(3, 2).counts[4] == 12);
}

TEST_CASE("edge_count_profile: spanning-tree identity and boundary counts") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t m = 1; n * m <= 12; ++m) {
      const auto prof = edge_count_profile(n, m);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(prof.counts[n + m - 1] == ipow(n, m - 1) * ipow(m, n - 1));
      CHECK(prof.counts[n * m] == 1);
      for (std::int64_t e = 0; e < n + m - 1; ++e) CHECK(prof.counts[e] == 0);
    }
  }
}

TEST_CASE("edge_count_profile enforces the enumeration bound") {
  CHECK_THROWS_AS(edge_count_profile(5, 5), CapacityError);
  CHECK_THROWS_AS(brute_connectivity(GraphParams(1, 25, 0.5)), CapacityError);
}

TEST_CASE("brute_connectivity examples") {
  CHECK(brute_connectivity(GraphParams(1, 1, 0.5)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(brute_connectivity(GraphParams(2, 2, 0.5)) == doctest::Approx(0.3125).epsilon(1e-15));
  for (double p : {0.1, 0.37, 0.9}) {
    CHECK(brute_connectivity(GraphParams(2, 1, p)) == doctest::Approx(p * p).epsilon(1e-14));
  }
}

TEST_CASE("brute_connectivity exact rational mode") {
  CHECK(brute_connectivity_exact(2, 2, Rational(1, 2)) == Rational(5, 16));
  CHECK(brute_connectivity_exact(2, 1, Rational(1, 3)) == Rational(1, 9));
  const auto prof = edge_count_profile(3, 4);
  const Rational exact = connectivity_from_profile_exact(prof, Rational(3, 10));
  CHECK(static_cast<double>(exact) ==
        doctest::Approx(connectivity_from_profile(prof, 0.3)).epsilon(1e-14));
}

TEST_CASE("brute_connectivity is monotone in p with the right endpoints") {
  for (auto [n, m] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 4}, std::pair{1, 6}}) {
    const auto prof = edge_count_profile(n, m);
    CHECK(connectivity_from_profile(prof, 0.0) == 0.0);
    CHECK(connectivity_from_profile(prof, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    double prev = 0.0;
    for (int t = 0; t <= 10; ++t) {
      const double v = connectivity_from_profile(prof, t / 10.0);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

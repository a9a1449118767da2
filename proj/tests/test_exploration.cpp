#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "bipcon/brute.hpp"
#include "bipcon/errors.hpp"
#include "bipcon/exploration.hpp"
#include "bipcon/exploration_dp.hpp"
#include "bipcon/simulate.hpp"

using namespace bipcon;

namespace {

double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Calls visit(v) for every vector of `parts` non-negative integers summing to
// `total`.
void compositions(int parts, int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      v[i] = left;
      visit(v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, total);
}

// Trajectory-sum oracle: sums the binomial products over every (r, l) in the
// trajectory set by explicit enumeration.
double trajectory_sum(int n, int m, double p) {
  const double q = 1.0 - p;
  double total = 0.0;
  compositions(n, m, [&](const std::vector<int>& r) {
    std::vector<int> a(n + 1, 0);
    for (int i = 0; i < n; ++i) a[i + 1] = a[i] + r[i];
    double wr = 1.0;
    for (int i = 0; i < n; ++i) {
      wr *= choose(m - a[i], r[i]) * std::pow(p, r[i]) * std::pow(q, m - a[i + 1]);
    }
    compositions(m, n - 1, [&](const std::vector<int>& l) {
      std::vector<int> b(m + 1, 0);
      for (int j = 0; j < m; ++j) b[j + 1] = b[j] + l[j];
      for (int k = 1; k < n; ++k) {
        if (b[a[k]] < k) return;
      }
      double wl = 1.0;
      for (int j = 0; j < m; ++j) {
        wl *= choose(n - 1 - b[j], l[j]) * std::pow(p, l[j]) * std::pow(q, n - 1 - b[j + 1]);
      }
      total += wr * wl;
    });
  });
  return total;
}

using Seq = std::vector<std::int64_t>;

}  // namespace

TEST_CASE("explore examples") {
  SUBCASE("single edge") {
    const auto t = explore(BipartiteGraph::from_rows(1, {0b1}));
    CHECK(t.r == Seq{1});
    CHECK(t.l == Seq{0});
    CHECK(t.in_trajectory_set());
  }
  SUBCASE("two disjoint edges") {
    const auto t = explore(BipartiteGraph::from_rows(2, {0b01, 0b10}));
    CHECK(t.r == Seq{1, 0});
    CHECK(t.l == Seq{0, 0});
    CHECK(t.deficit[0] == -1);
    CHECK_FALSE(t.in_trajectory_set());
  }
  SUBCASE("path a1-b1, a1-b2, a2-b2") {
    const auto t = explore(BipartiteGraph::from_rows(2, {0b11, 0b10}));
    CHECK(t.r == Seq{2, 0});
    CHECK(t.l == Seq{0, 1});
    CHECK(t.deficit[0] == 0);
    CHECK(t.s_right[2] == 2);
    CHECK(t.s_left[2] == 1);
    CHECK(t.in_trajectory_set());
  }
  SUBCASE("right vertices take priority over earlier left vertices") {
    // a1-b1, b1-a2, b1-a3, a2-b2, a3-b3: after a1, b1 activates a2 and a3;
    // a2 then finds b2, which is processed before a3.
    const auto t = explore(BipartiteGraph::from_rows(3, {0b001, 0b011, 0b101}));
    CHECK(t.r == Seq{1, 1, 1});
    CHECK(t.l == Seq{2, 0, 0});
    CHECK(t.in_trajectory_set());
  }
}

TEST_CASE("explore: trace invariants and connectivity equivalence on sampled graphs") {
  int connected = 0;
  int total = 0;
  for (auto [n, m] : {std::pair{3, 3}, std::pair{4, 2}, std::pair{5, 5}, std::pair{12, 70}}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const GraphParams gp(n, m, p);
      for (std::uint64_t s = 0; s < 150; ++s) {
        const auto g = sample_graph(gp, 31, s);
        const auto t = explore(g);
        CHECK(t.s_right[n] <= m);
        CHECK(t.s_left[m] <= n - 1);
        for (int k = 1; k <= n; ++k) CHECK(t.deficit[k - 1] == t.s_left[t.s_right[k]] - k);
        const bool c = is_connected(g);
        CHECK(c == t.in_trajectory_set());
        connected += c;
        ++total;
      }
    }
  }
  CHECK(connected > 0);
  CHECK(connected < total);
}

TEST_CASE("exact_connectivity_dp examples") {
  CHECK(exact_connectivity_dp(GraphParams(1, 1, 0.5)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(exact_connectivity_dp(GraphParams(2, 2, 0.5)) == doctest::Approx(0.3125).epsilon(1e-15));
  CHECK(exact_connectivity_dp(GraphParams(1, 7, 0.3)) == doctest::Approx(std::pow(0.3, 7)).epsilon(1e-13));
}

TEST_CASE("exact_connectivity_dp equals the direct trajectory sum") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (double p : {0.15, 0.5, 0.85}) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(p);
        CHECK(std::fabs(exact_connectivity_dp(GraphParams(n, m, p)) - trajectory_sum(n, m, p)) < 1e-14);
      }
    }
  }
}

TEST_CASE("exact_connectivity_dp equals the brute oracle on the enumerable range") {
  for (std::int64_t n = 1; n <= 16; ++n) {
    for (std::int64_t m = 1; n * m <= 16; ++m) {
      const auto prof = edge_count_profile(n, m);
      for (int t = 1; t <= 9; ++t) {
        const double p = t / 10.0;
        CHECK(std::fabs(exact_connectivity_dp(GraphParams(n, m, p)) -
                        connectivity_from_profile(prof, p)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("exploration lattice conserves mass without the barrier") {
  for (const GraphParams gp : {GraphParams(3, 4, 0.3), GraphParams(25, 40, 0.05),
                               GraphParams(60, 20, 0.5), GraphParams(10, 10, 0.999)}) {
    CHECK(std::fabs(exploration_lattice<double>(gp, false).sum() - 1.0) < 1e-10);
  }
}

TEST_CASE("exact_connectivity_dp: degenerate p, symmetry, precision, monotonicity") {
  CHECK(exact_connectivity_dp(GraphParams(4, 5, 0.0)) == 0.0);
  CHECK(exact_connectivity_dp(GraphParams(4, 5, 1.0)) == 1.0);
  CHECK(exact_connectivity_dp(GraphParams(1, 1, 0.0)) == 0.0);

  const double a = exact_connectivity_dp(GraphParams(17, 29, 0.13));
  const double b = exact_connectivity_dp(GraphParams(29, 17, 0.13));
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  const long double wide = exact_connectivity_dp<long double>(GraphParams(17, 29, 0.13));
  CHECK(a == doctest::Approx(static_cast<double>(wide)).epsilon(1e-12));

  double prev = 0.0;
  for (int t = 0; t <= 20; ++t) {
    const double v = exact_connectivity_dp(GraphParams(12, 18, t / 20.0));
    CHECK(v >= prev - 1e-15);
    prev = v;
  }
}

TEST_CASE("exact_connectivity_dp enforces the lattice budget") {
  CHECK_THROWS_AS(exact_connectivity_dp(GraphParams(400, 400, 0.1)), CapacityError);
  CHECK_THROWS_AS(exact_connectivity_dp(GraphParams(400, 400, 0.0)), CapacityError);
}

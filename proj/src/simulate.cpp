#include "bipcon/simulate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bipcon/errors.hpp"
#include "bipcon/pmf.hpp"
#include "bipcon/poisson_sampler.hpp"
#include "bipcon/walk_params.hpp"

namespace bipcon {

std::string to_string(Method method) {
  switch (method) {
    case Method::kMonteCarlo: return "mc";
    case Method::kBrute: return "brute";
    case Method::kExplorationDp: return "exploration-dp";
    case Method::kWalkDp: return "walk-dp";
    case Method::kAsymptotic: return "asymptotic";
  }
  return "unknown";
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Poisson variates

namespace {

std::int64_t poisson_inversion(RandomStream& rng, double lambda) {
  const double u = rng.uniform();
  double pk = std::exp(-lambda);
  double cdf = pk;
  std::int64_t k = 0;
  // The cap only matters when u lands in the last ulp of the CDF.
  while (u >= cdf && k < 1000) {
    ++k;
    pk *= lambda / static_cast<double>(k);
    cdf += pk;
  }
  return k;
}

// W. Hormann, "The transformed rejection method for generating Poisson
// random variables", Insurance: Mathematics and Economics 12 (1993).
std::int64_t poisson_ptrs(RandomStream& rng, double lambda) {
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        -lambda + k * loglam - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(k);
    }
  }
}

}  // namespace

std::int64_t sample_poisson(RandomStream& rng, double lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw DomainError("sample_poisson: rate must be finite and non-negative");
  }
  if (lambda == 0.0) return 0;
  return lambda < kPoissonInversionLimit ? poisson_inversion(rng, lambda)
                                         : poisson_ptrs(rng, lambda);
}

// ---------------------------------------------------------------------------
// Graphs

BipartiteGraph sample_graph(const GraphParams& gp, std::uint64_t seed,
                            std::uint64_t stream) {
  BipartiteGraph g(gp.n(), gp.m());
  RandomStream rng(seed, stream);
  const double p = gp.p();
  for (std::int64_t i = 0; i < gp.n(); ++i) {
    for (std::int64_t j = 0; j < gp.m(); ++j) {
      if (rng.uniform() < p) g.set_edge(i, j);
    }
  }
  return g;
}

namespace {

// Runs body(begin, end, slot) over contiguous slices of [0, count).
void for_each_slice(std::int64_t count, int workers,
                    const std::function<void(std::int64_t, std::int64_t, int)>& body) {
  workers = std::max(1, static_cast<int>(std::min<std::int64_t>(workers, count)));
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::int64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(body, begin, end, w);
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ConnectivityEstimate mc_connectivity(const GraphParams& gp, std::int64_t samples,
                                     std::uint64_t seed, int workers) {
  if (samples < 1) throw DomainError("mc_connectivity: need at least one sample");
  std::vector<std::int64_t> hits(std::max(1, workers), 0);
  for_each_slice(samples, workers, [&](std::int64_t begin, std::int64_t end, int slot) {
    std::int64_t local = 0;
    for (std::int64_t s = begin; s < end; ++s) {
      local += is_connected(sample_graph(gp, seed, static_cast<std::uint64_t>(s)));
    }
    hits[slot] = local;
  });
  std::int64_t connected = 0;
  for (auto h : hits) connected += h;

  ConnectivityEstimate est;
  est.estimate = static_cast<double>(connected) / static_cast<double>(samples);
  est.standard_error =
      std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  est.method = Method::kMonteCarlo;
  return est;
}

// ---------------------------------------------------------------------------
// Walks

bool WalkSample::deficit_nonnegative() const {
  return std::all_of(s.begin(), s.end(), [](std::int64_t x) { return x >= 0; });
}

bool WalkSample::recovery_dominated() const {
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] < v[j]) return false;
  }
  return true;
}

WalkSample sample_walk(const GraphParams& gp, std::uint64_t seed,
                       std::uint64_t stream) {
  const WalkParams<double> rates = walk_params<double>(gp);
  const std::int64_t n = gp.n();
  const std::int64_t m = gp.m();
  RandomStream rng(seed, stream);

  WalkSample w;
  w.a.resize(n);
  std::int64_t acc = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    acc += sample_poisson(rng, rates.alpha(i));
    w.a[i] = acc;
  }
  const std::int64_t len = std::max(m, acc);
  w.b.assign(len + 1, 0);
  for (std::int64_t j = 1; j <= len; ++j) {
    const double rate = j <= m ? rates.beta(j - 1) : beta_rate<double>(gp, j);
    w.b[j] = w.b[j - 1] + sample_poisson(rng, rate);
  }
  w.s.resize(n);
  for (std::int64_t k = 1; k <= n; ++k) w.s[k - 1] = w.b[w.a[k - 1]] - k;

  w.v.assign(len + 1, 0);
  for (std::int64_t ak : w.a) ++w.v[ak];
  for (std::int64_t j = 1; j <= len; ++j) w.v[j] += w.v[j - 1];

  if (w.deficit_nonnegative() != w.recovery_dominated()) {
    throw std::logic_error("sample_walk: deficit and recovery criteria disagree");
  }
  return w;
}

CurveTables curve_csv(const GraphParams& gp, std::int64_t realizations,
                      std::uint64_t seed, int workers) {
  if (realizations < 0) throw DomainError("curve_csv: negative realization count");
  const std::int64_t n = gp.n();
  const std::int64_t m = gp.m();
  const ExpectationCurves<double> curves = expectation_curves<double>(gp);

  std::vector<WalkSample> paths(realizations);
  for_each_slice(realizations, workers, [&](std::int64_t begin, std::int64_t end, int) {
    for (std::int64_t r = begin; r < end; ++r) {
      paths[r] = sample_walk(gp, seed, static_cast<std::uint64_t>(r));
    }
  });

  std::ostringstream deficit;
  deficit << "k,ES";
  for (std::int64_t r = 1; r <= realizations; ++r) deficit << ",S_r" << r;
  deficit << '\n';
  for (std::int64_t k = 1; k <= n; ++k) {
    deficit << k << ',' << format_double(curves.es(k - 1));
    for (const WalkSample& w : paths) deficit << ',' << w.s[k - 1];
    deficit << '\n';
  }

  std::ostringstream recovery;
  recovery << "k,B,V,ref_line\n";
  if (realizations > 0) {
    const WalkSample& w = paths.front();
    for (std::int64_t k = 1; k <= m; ++k) {
      recovery << k << ',' << w.b[k] << ',' << w.v[k] << ','
               << format_double(static_cast<double>(k) * static_cast<double>(n) /
                                static_cast<double>(m))
               << '\n';
    }
  }
  return {deficit.str(), recovery.str()};
}

}  // namespace bipcon

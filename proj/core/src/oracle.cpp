#include "vucb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace vucb {

OptimalAllocation optimal_allocation(std::span<const double> sigma,
                                     const NormParam& p, double T) {
  if (!(T > 0.0)) throw Error("optimal_allocation: T must be > 0");
  const double q = exponent(p);
  double sigma_p = 0.0;
  for (double s : sigma) {
    if (!(s > 0.0)) throw DegenerateGroup("optimal_allocation: sigma_g <= 0");
    sigma_p += std::pow(s, q);
  }
  OptimalAllocation out;
  out.sigma_p = sigma_p;
  out.lambda_star.reserve(sigma.size());
  std::vector<double> n_star;
  n_star.reserve(sigma.size());
  for (double s : sigma) {
    const double lam = std::pow(s, q) / sigma_p;
    out.lambda_star.push_back(lam);
    n_star.push_back(T * lam);
  }
  out.n_star = CountVector{std::move(n_star), T, /*relaxed=*/true};
  if (p.is_infinite()) {
    out.r_star = sigma_p / T;  // q = 2, so Sigma_p = ||sigma||_2^2
  } else {
    out.r_star = std::pow(sigma_p, 1.0 + 1.0 / p.p) / T;
  }
  return out;
}

double normalized_regret(double achieved, double r_star) {
  if (!(r_star > 0.0)) throw InvalidBenchmark("normalized_regret: R* must be > 0");
  return std::max(0.0, (achieved - r_star) / r_star);
}

namespace {

// Minimize f over t in [lo, hi] (f strictly convex) by golden-section search.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

void enumerate_grid(std::vector<double>& point, std::size_t g, double remaining,
                    double step, const std::function<void()>& visit) {
  if (g + 1 == point.size()) {
    point[g] = remaining;
    visit();
    return;
  }
  for (double v = step; v < remaining - step * (double)(point.size() - g - 1) + 1e-12;
       v += step) {
    point[g] = v;
    enumerate_grid(point, g + 1, remaining - v, step, visit);
  }
}

}  // namespace

BruteForceResult brute_force_optimal(std::span<const double> sigma,
                                     const NormParam& p, double T,
                                     double resolution) {
  const std::size_t G = sigma.size();
  if (G > 4) throw TooLarge("brute_force_optimal supports G <= 4");
  if (G < 2) throw DegenerateGroup("brute_force_optimal: G >= 2");

  auto value = [&](const std::vector<double>& n) {
    return objective_Rp(std::span<const double>(n), sigma, p);
  };

  // Seed: coarse simplex grid (interior points only; the optimum is interior).
  const double step = T / 24.0;
  std::vector<double> point(G), best(G, T / static_cast<double>(G));
  double best_val = value(best);
  enumerate_grid(point, 0, T, step, [&] {
    const double v = value(point);
    if (v < best_val) {
      best_val = v;
      best = point;
    }
  });

  // Refine: golden-section line searches along budget-preserving integer
  // directions. Pairwise transfers alone stall at p = inf where several
  // groups tie at the max; directions touching 3+ coordinates can raise the
  // tied groups together.
  std::vector<std::vector<int>> directions;
  {
    std::vector<int> d(G, -3);
    for (;;) {
      int sum = 0;
      for (int x : d) sum += x;
      if (sum == 0) {
        bool nonzero = false, canonical = false;
        int g = 0;
        for (int x : d) {
          if (x != 0 && !nonzero) {
            nonzero = true;
            canonical = x > 0;  // sign canonical: t ranges over both signs
          }
          g = std::gcd(g, std::abs(x));
        }
        if (nonzero && canonical) {
          std::vector<int> prim(d);
          for (int& x : prim) x /= g;
          if (std::find(directions.begin(), directions.end(), prim) ==
              directions.end())
            directions.push_back(std::move(prim));
        }
      }
      std::size_t k = 0;
      while (k < G && d[k] == 3) d[k++] = -3;
      if (k == G) break;
      ++d[k];
    }
  }

  const double floor_n = std::min(resolution, T / (1e3 * static_cast<double>(G)));
  const double tol = resolution * 1e-3 * T;
  for (int sweep = 0; sweep < 400; ++sweep) {
    const double before = best_val;
    for (const auto& dir : directions) {
      auto trial = best;
      auto f = [&](double t) {
        for (std::size_t g = 0; g < G; ++g) trial[g] = best[g] + t * dir[g];
        return value(trial);
      };
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      for (std::size_t g = 0; g < G; ++g) {
        if (dir[g] > 0) lo = std::max(lo, (floor_n - best[g]) / dir[g]);
        if (dir[g] < 0) hi = std::min(hi, (best[g] - floor_n) / (-dir[g]));
      }
      if (!(hi > lo)) continue;
      const double t = golden_min(f, lo, hi, tol);
      const double v = f(t);
      if (v < best_val) {
        best_val = v;
        for (std::size_t g = 0; g < G; ++g) best[g] += t * dir[g];
      }
    }
    if (before - best_val < 1e-14 * std::max(1.0, before)) break;
  }

  BruteForceResult out;
  out.alloc = CountVector{best, T, /*relaxed=*/true};
  out.value = best_val;
  return out;
}

}  // namespace vucb

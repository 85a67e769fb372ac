#pragma once

#include <span>
#include <vector>

#include "vucb/core.hpp"

namespace vucb {

// Complete-information optimum: lambda*_g = sigma_g^q / Sigma_p with
// Sigma_p = sum_g sigma_g^q, n* = T lambda*, and
// R* = Sigma_p^{1 + 1/p} / T (finite p), ||sigma||_2^2 / T (p = inf).
struct OptimalAllocation {
  std::vector<double> lambda_star;
  CountVector n_star;
  double r_star = 0.0;
  double sigma_p = 0.0;
};

OptimalAllocation optimal_allocation(std::span<const double> sigma,
                                     const NormParam& p, double T);

// (achieved - R*) / R*, clamped below at zero.
double normalized_regret(double achieved, double r_star);

struct BruteForceResult {
  CountVector alloc;
  double value = 0.0;
};

// Independent numerical minimizer of R_p over the simplex {n >= 0, sum = T}:
// coarse simplex grid seed refined by pairwise coordinate descent. G <= 4.
BruteForceResult brute_force_optimal(std::span<const double> sigma,
                                     const NormParam& p, double T,
                                     double resolution);

}  // namespace vucb

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vucb/core.hpp"
#include "vucb/estimation.hpp"

namespace vucb {

struct RelativeDistance {
  std::vector<double> delta;  // delta_g = 1 - n_g / n*_g
  double delta_max = 0.0;
};

RelativeDistance relative_distance(const CountVector& n, const CountVector& n_star);

// Aggregate width-induced error at the optimal allocation:
//   w1 = sum_g lambda*_g [ (1 + w_g(n*_g - 1))^q - 1 ]
//   w2 = sqrt( sum_g lambda*_g [ ... ]^2 )
//   w_bar = sqrt(w1^2 + w2^2) for finite p, w1 at p = inf.
struct DecisionError {
  double w1 = 0.0, w2 = 0.0, w_bar = 0.0;
  NormParam p;
};

DecisionError decision_error(std::span<const double> sigma,
                             const AdmissibleWidth& width, const NormParam& p,
                             double T);

// Potential self-map of [0,1]:
//   F(u) = 1 - (1 - G/T) / sum_h lambda*_h (1 + w_h(lambda*_h T (1-u) - 1))^q
// with F(u) = 1 whenever some width argument is <= 0.
double potential_F(double u, std::span<const double> sigma,
                   const AdmissibleWidth& width, const NormParam& p, double T);

// f0 = 1 - (1/2) / (1 + max_h w_h(lambda*_h T/2))^q.
double initial_rate(std::span<const double> sigma, const AdmissibleWidth& width,
                    const NormParam& p, double T);

struct FixedPointTrace {
  double f0 = 0.0;
  std::vector<double> iterates;  // f1, f2, ...
  double f_inf = 0.0;
  bool converged = false;
};

FixedPointTrace iterate_fixed_point(std::span<const double> sigma,
                                    const AdmissibleWidth& width,
                                    const NormParam& p, double T,
                                    double tol = 1e-12, int max_iter = 100000);

// Per-group floor on the relative distance:
// a_g = -[ 1/n*_g + ((1 + w_g(n*_g - 1))^q - 1) ].
std::vector<double> delta_lower_bound(std::span<const double> sigma,
                                      const AdmissibleWidth& width,
                                      const NormParam& p, double T);

enum class BoundFamily { SubGaussian, Gaussian, Exponential, BasSubGaussian, BasGaussian };

// Leading regret terms, without the (1+o(1)) factor:
//   gaussian / exponential, p = inf: 2*sqrt(3) * (||sigma||_1/||sigma||_2) * sqrt(log T / T)
//   sub-gaussian, p = inf:           4*sqrt(3) * (||c_hat||_2/||sigma||_2) * sqrt(G log T / T)
//   gaussian / exponential, finite:  43 p G log T / T
//   sub-gaussian, finite:            85 p (sum c_hat_g^2/sigma_g^2) log T / T
//   B-AS sub-gaussian:  76400 ||c_hat||_inf G^2 log^2 T / (sigma_min^2 sqrt(T))
//   B-AS gaussian:      1.05e5 G log^2 T / sqrt(T)   (variance budget at ||sigma||_2^2)
double regret_bound_leading(BoundFamily family, std::span<const double> sigma,
                            std::span<const double> c_hat, const NormParam& p,
                            double T);

// Worst-case gaussian p = inf bound 2*sqrt(3)*sqrt(G log T / T)
// (||sigma||_1 <= sqrt(G)||sigma||_2 makes it instance-free).
double worst_case_gaussian_bound(int G, double T);

enum class SampleSizeFamily { VucbGaussian, BasGaussian };

struct SampleSizeResult {
  double bisection_T = 0.0;    // smallest integer T >= 2G with bound(T) <= eps
  double closed_form_T = 0.0;  // ceil(12 G eps^-2 log(12 G eps^-2)); vucb only
  double table_T = 0.0;        // published reference value when on the grid, else 0
};

SampleSizeResult sample_size(double eps, int G, SampleSizeFamily family);

// Both sides of the third-order Taylor bound for the p-norm around the
// optimum: lhs = | ||(lambda*)^{1/p}/(1-delta)||_p - 1 - (p+1)/2 sum lambda*_g delta_g^2 |,
// rhs = 6 p^2 ||delta||_inf^3 / (1 - delta_max)^{3p+3}.
struct TaylorGap {
  double lhs = 0.0, rhs = 0.0;
};

TaylorGap taylor_gap(std::span<const double> lambda_star,
                     std::span<const double> delta, const NormParam& p);

}  // namespace vucb

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vucb/core.hpp"

namespace vucb {

// Streaming count/mean/sum-of-squared-deviations (Welford recurrence).
struct OnlineMoments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

OnlineMoments update_moments(OnlineMoments m, double y);
double sample_variance(const OnlineMoments& m);  // unbiased, needs count >= 2
double sample_std(const OnlineMoments& m);

enum class UcbFamily { SubGaussian, Gaussian, Exponential };

// Upper confidence estimate of sigma_g from n samples at horizon T
// (natural log throughout):
//   sub-gaussian:  sigma_hat + c_hat_g * sqrt(3 log T / n)
//   gaussian:      sigma_hat * (1 + sqrt(3 log T / n) + 3 log T / n)
//   exponential:   mu_hat * (1 + sqrt(3 log T / n))
struct UcbProcedure {
  UcbFamily family = UcbFamily::Gaussian;
  double horizon = 2.0;         // T >= 2
  std::vector<double> c_hat;    // sub-gaussian only, one entry per group

  static UcbProcedure sub_gaussian(std::vector<double> c_hat, double T);
  static UcbProcedure gaussian(double T);
  static UcbProcedure exponential(double T);
};

double ucb_value(const UcbProcedure& proc, std::size_t g, const OnlineMoments& m);

enum class WidthFamily { SubGaussian, Gaussian, Exponential, Zero, Custom };

// Deterministic width envelope w_g(x); +inf for x <= 0, non-increasing and
// vanishing as x -> inf on x > 0:
//   sub-gaussian:  (2 c_hat_g / sigma_g) * sqrt(3 log T / x)
//   gaussian:      sqrt(3 log T / x) + 3 log T / x
//   exponential:   sqrt(6 log T / x)
//   zero:          0         custom: scale * x^(-power)
struct AdmissibleWidth {
  WidthFamily family = WidthFamily::Zero;
  double horizon = 2.0;
  std::vector<double> c_hat, sigma;  // sub-gaussian only
  double scale = 1.0, power = 0.5;   // custom only

  static AdmissibleWidth sub_gaussian(std::vector<double> c_hat,
                                      std::vector<double> sigma, double T);
  static AdmissibleWidth gaussian(double T);
  static AdmissibleWidth exponential(double T);
  static AdmissibleWidth zero();
  static AdmissibleWidth custom(double scale, double power);
};

double width_eval(const AdmissibleWidth& w, std::size_t g, double x);

// Monte Carlo check of the concentration events behind the widths, at
// confidence eps over `trials` repetitions of n samples:
//   gaussian:     |sigma_hat^2/sigma^2 - 1| <= sqrt(2 log(1/eps)/n) + 2 log(1/eps)/n
//   exponential:  |mu_hat/sigma - 1|        <= sqrt(2 log(1/eps)/n)
// Returns the fraction of trials where the event holds.
double coverage_probe(UcbFamily family, int n, double eps, int trials,
                      std::uint64_t seed);

}  // namespace vucb

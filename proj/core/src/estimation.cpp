#include "vucb/estimation.hpp"

#include <cmath>
#include <random>

namespace vucb {

OnlineMoments update_moments(OnlineMoments m, double y) {
  m.count += 1;
  const double d = y - m.mean;
  m.mean += d / static_cast<double>(m.count);
  m.m2 += d * (y - m.mean);
  return m;
}

double sample_variance(const OnlineMoments& m) {
  if (m.count < 2) throw InsufficientSamples("sample variance needs count >= 2");
  return m.m2 / static_cast<double>(m.count - 1);
}

double sample_std(const OnlineMoments& m) { return std::sqrt(sample_variance(m)); }

UcbProcedure UcbProcedure::sub_gaussian(std::vector<double> c_hat, double T) {
  if (!(T >= 2.0)) throw Error("UcbProcedure: T >= 2");
  for (double c : c_hat)
    if (!(c > 0.0)) throw Error("UcbProcedure: c_hat_g > 0 required");
  return UcbProcedure{UcbFamily::SubGaussian, T, std::move(c_hat)};
}

UcbProcedure UcbProcedure::gaussian(double T) {
  if (!(T >= 2.0)) throw Error("UcbProcedure: T >= 2");
  return UcbProcedure{UcbFamily::Gaussian, T, {}};
}

UcbProcedure UcbProcedure::exponential(double T) {
  if (!(T >= 2.0)) throw Error("UcbProcedure: T >= 2");
  return UcbProcedure{UcbFamily::Exponential, T, {}};
}

double ucb_value(const UcbProcedure& proc, std::size_t g, const OnlineMoments& m) {
  const double log_t = std::log(proc.horizon);
  const double n = static_cast<double>(m.count);
  switch (proc.family) {
    case UcbFamily::SubGaussian: {
      if (g >= proc.c_hat.size()) throw Error("ucb_value: group index out of range");
      return sample_std(m) + proc.c_hat[g] * std::sqrt(3.0 * log_t / n);
    }
    case UcbFamily::Gaussian: {
      const double b = 3.0 * log_t / n;
      return sample_std(m) * (1.0 + std::sqrt(b) + b);
    }
    case UcbFamily::Exponential: {
      if (m.count < 1) throw InsufficientSamples("exponential ucb needs count >= 1");
      return m.mean * (1.0 + std::sqrt(3.0 * log_t / n));
    }
  }
  throw Error("unreachable ucb family");
}

AdmissibleWidth AdmissibleWidth::sub_gaussian(std::vector<double> c_hat,
                                              std::vector<double> sigma, double T) {
  if (c_hat.size() != sigma.size()) throw Error("width: c_hat/sigma length mismatch");
  AdmissibleWidth w;
  w.family = WidthFamily::SubGaussian;
  w.horizon = T;
  w.c_hat = std::move(c_hat);
  w.sigma = std::move(sigma);
  return w;
}

AdmissibleWidth AdmissibleWidth::gaussian(double T) {
  AdmissibleWidth w;
  w.family = WidthFamily::Gaussian;
  w.horizon = T;
  return w;
}

AdmissibleWidth AdmissibleWidth::exponential(double T) {
  AdmissibleWidth w;
  w.family = WidthFamily::Exponential;
  w.horizon = T;
  return w;
}

AdmissibleWidth AdmissibleWidth::zero() {
  AdmissibleWidth w;
  w.family = WidthFamily::Zero;
  return w;
}

AdmissibleWidth AdmissibleWidth::custom(double scale, double power) {
  if (!(scale >= 0.0) || !(power > 0.0)) throw Error("custom width: scale >= 0, power > 0");
  AdmissibleWidth w;
  w.family = WidthFamily::Custom;
  w.scale = scale;
  w.power = power;
  return w;
}

double width_eval(const AdmissibleWidth& w, std::size_t g, double x) {
  if (x <= 0.0) return std::numeric_limits<double>::infinity();
  switch (w.family) {
    case WidthFamily::SubGaussian: {
      if (g >= w.c_hat.size()) throw Error("width_eval: group index out of range");
      return 2.0 * w.c_hat[g] / w.sigma[g] * std::sqrt(3.0 * std::log(w.horizon) / x);
    }
    case WidthFamily::Gaussian: {
      const double b = 3.0 * std::log(w.horizon) / x;
      return std::sqrt(b) + b;
    }
    case WidthFamily::Exponential:
      return std::sqrt(6.0 * std::log(w.horizon) / x);
    case WidthFamily::Zero:
      return 0.0;
    case WidthFamily::Custom:
      return w.scale * std::pow(x, -w.power);
  }
  throw Error("unreachable width family");
}

double coverage_probe(UcbFamily family, int n, double eps, int trials,
                      std::uint64_t seed) {
  if (n < 2) throw Error("coverage_probe: n >= 2");
  if (trials < 1000) throw Error("coverage_probe: trials >= 1000");
  if (!(eps > 0.0 && eps <= 1.0)) throw Error("coverage_probe: eps in (0, 1]");

  const double log_term = std::log(1.0 / eps);
  const double root = std::sqrt(2.0 * log_term / n);
  std::mt19937_64 rng(seed);
  int hits = 0;
  if (family == UcbFamily::Gaussian) {
    // Variance-ratio event for the unbiased sample variance of N(0, sigma^2).
    const double sigma = 1.0;
    const double radius = root + 2.0 * log_term / n;
    std::normal_distribution<double> dist(0.0, sigma);
    for (int t = 0; t < trials; ++t) {
      OnlineMoments m;
      for (int i = 0; i < n; ++i) m = update_moments(m, dist(rng));
      const double ratio = sample_variance(m) / (sigma * sigma);
      if (std::abs(ratio - 1.0) <= radius) ++hits;
    }
  } else if (family == UcbFamily::Exponential) {
    // Mean-ratio event for exponential data, where mu = sigma.
    const double rate = 1.0;
    std::exponential_distribution<double> dist(rate);
    for (int t = 0; t < trials; ++t) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += dist(rng);
      const double ratio = (sum / n) * rate;
      if (std::abs(ratio - 1.0) <= root) ++hits;
    }
  } else {
    throw Error("coverage_probe supports gaussian and exponential");
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace vucb

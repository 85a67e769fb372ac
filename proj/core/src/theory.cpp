#include "vucb/theory.hpp"

#include <algorithm>
#include <cmath>

#include "vucb/oracle.hpp"

namespace vucb {

RelativeDistance relative_distance(const CountVector& n, const CountVector& n_star) {
  if (n.counts.size() != n_star.counts.size())
    throw Error("relative_distance: length mismatch");
  RelativeDistance out;
  out.delta.reserve(n.counts.size());
  out.delta_max = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < n.counts.size(); ++g) {
    if (!(n_star.counts[g] > 0.0))
      throw DegenerateTarget("relative_distance: n*_g must be > 0");
    const double d = 1.0 - n.counts[g] / n_star.counts[g];
    out.delta.push_back(d);
    out.delta_max = std::max(out.delta_max, d);
  }
  return out;
}

DecisionError decision_error(std::span<const double> sigma,
                             const AdmissibleWidth& width, const NormParam& p,
                             double T) {
  const OptimalAllocation opt = optimal_allocation(sigma, p, T);
  const double q = exponent(p);
  DecisionError out;
  out.p = p;
  for (std::size_t g = 0; g < sigma.size(); ++g) {
    const double n_g = opt.n_star.counts[g];
    if (n_g - 1.0 <= 0.0)
      throw WidthInfinite("decision_error: n*_g <= 1 at this horizon");
    const double term = std::pow(1.0 + width_eval(width, g, n_g - 1.0), q) - 1.0;
    out.w1 += opt.lambda_star[g] * term;
    out.w2 += opt.lambda_star[g] * term * term;
  }
  out.w2 = std::sqrt(out.w2);
  out.w_bar = p.is_infinite() ? out.w1 : std::hypot(out.w1, out.w2);
  return out;
}

double potential_F(double u, std::span<const double> sigma,
                   const AdmissibleWidth& width, const NormParam& p, double T) {
  const OptimalAllocation opt = optimal_allocation(sigma, p, T);
  const double G = static_cast<double>(sigma.size());
  const double q = exponent(p);
  double denom = 0.0;
  for (std::size_t g = 0; g < sigma.size(); ++g) {
    const double arg = opt.lambda_star[g] * T * (1.0 - u) - 1.0;
    if (arg <= 0.0) return 1.0;
    const double w = width_eval(width, g, arg);
    if (std::isinf(w)) return 1.0;
    denom += opt.lambda_star[g] * std::pow(1.0 + w, q);
  }
  return 1.0 - (1.0 - G / T) / denom;
}

double initial_rate(std::span<const double> sigma, const AdmissibleWidth& width,
                    const NormParam& p, double T) {
  if (!(T > 2.0)) throw Error("initial_rate: T > 2");
  const OptimalAllocation opt = optimal_allocation(sigma, p, T);
  const double q = exponent(p);
  double max_w = 0.0;
  for (std::size_t g = 0; g < sigma.size(); ++g)
    max_w = std::max(max_w, width_eval(width, g, opt.lambda_star[g] * T / 2.0));
  if (std::isinf(max_w)) return 1.0;
  return 1.0 - 0.5 / std::pow(1.0 + max_w, q);
}

FixedPointTrace iterate_fixed_point(std::span<const double> sigma,
                                    const AdmissibleWidth& width,
                                    const NormParam& p, double T, double tol,
                                    int max_iter) {
  if (!(tol > 0.0)) throw Error("iterate_fixed_point: tol > 0");
  FixedPointTrace trace;
  trace.f0 = initial_rate(sigma, width, p, T);
  double prev = trace.f0;
  for (int it = 0; it < max_iter; ++it) {
    const double next = potential_F(prev, sigma, width, p, T);
    trace.iterates.push_back(next);
    if (std::abs(next - prev) < tol) {
      trace.converged = true;
      prev = next;
      break;
    }
    prev = next;
  }
  trace.f_inf = prev;
  return trace;
}

std::vector<double> delta_lower_bound(std::span<const double> sigma,
                                      const AdmissibleWidth& width,
                                      const NormParam& p, double T) {
  const OptimalAllocation opt = optimal_allocation(sigma, p, T);
  const double q = exponent(p);
  std::vector<double> a;
  a.reserve(sigma.size());
  for (std::size_t g = 0; g < sigma.size(); ++g) {
    const double n_g = opt.n_star.counts[g];
    const double term = std::pow(1.0 + width_eval(width, g, n_g - 1.0), q) - 1.0;
    a.push_back(-(1.0 / n_g + term));
  }
  return a;
}

namespace {

double norm1(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

double regret_bound_leading(BoundFamily family, std::span<const double> sigma,
                            std::span<const double> c_hat, const NormParam& p,
                            double T) {
  const double G = static_cast<double>(sigma.size());
  const double log_t = std::log(T);
  const bool needs_chat =
      family == BoundFamily::SubGaussian || family == BoundFamily::BasSubGaussian;
  if (needs_chat && c_hat.size() != sigma.size())
    throw MissingParameter("sub-gaussian bound needs c_hat, one entry per group");

  switch (family) {
    case BoundFamily::Gaussian:
    case BoundFamily::Exponential:
      if (p.is_infinite())
        return 2.0 * std::sqrt(3.0) * (norm1(sigma) / norm2(sigma)) *
               std::sqrt(log_t / T);
      return 43.0 * p.p * G * log_t / T;
    case BoundFamily::SubGaussian:
      if (p.is_infinite())
        return 4.0 * std::sqrt(3.0) * (norm2(c_hat) / norm2(sigma)) *
               std::sqrt(G * log_t / T);
      {
        double ratio = 0.0;
        for (std::size_t g = 0; g < sigma.size(); ++g)
          ratio += c_hat[g] * c_hat[g] / (sigma[g] * sigma[g]);
        return 85.0 * p.p * ratio * log_t / T;
      }
    case BoundFamily::BasSubGaussian: {
      const double c_inf = *std::max_element(c_hat.begin(), c_hat.end());
      const double s_min = *std::min_element(sigma.begin(), sigma.end());
      return 76400.0 * c_inf * G * G * log_t * log_t / (s_min * s_min * std::sqrt(T));
    }
    case BoundFamily::BasGaussian:
      return 1.05e5 * G * log_t * log_t / std::sqrt(T);
  }
  throw Error("unreachable bound family");
}

double worst_case_gaussian_bound(int G, double T) {
  return 2.0 * std::sqrt(3.0) * std::sqrt(G * std::log(T) / T);
}

namespace {

// Published worst-case sample-size table (consistent with T = 32 G / eps).
double table3_value(double eps, int G) {
  auto close = [](double a, double b) { return std::abs(a - b) < 1e-9; };
  if (G == 3) {
    if (close(eps, 0.10)) return 9.6e2;
    if (close(eps, 0.05)) return 1.9e3;
    if (close(eps, 0.01)) return 9.6e3;
  } else if (G == 50) {
    if (close(eps, 0.10)) return 1.6e4;
    if (close(eps, 0.05)) return 3.2e4;
    if (close(eps, 0.01)) return 1.6e5;
  } else if (G == 1000) {
    if (close(eps, 0.10)) return 3.2e5;
    if (close(eps, 0.05)) return 6.4e5;
    if (close(eps, 0.01)) return 3.2e6;
  }
  return 0.0;
}

}  // namespace

SampleSizeResult sample_size(double eps, int G, SampleSizeFamily family) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error("sample_size: eps in (0,1)");
  if (G < 2) throw Error("sample_size: G >= 2");

  auto bound = [&](double T) {
    if (family == SampleSizeFamily::VucbGaussian)
      return worst_case_gaussian_bound(G, T);
    const double lt = std::log(T);
    return 1.05e5 * G * lt * lt / std::sqrt(T);
  };

  // Both bounds are decreasing for T past a small constant; double until
  // satisfied then bisect on the integer T.
  double lo = std::max(2.0 * G, 60.0);
  double result = lo;
  if (bound(lo) > eps) {
    double hi = lo;
    while (bound(hi) > eps) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e30) throw Error("sample_size: bound never met");
    }
    // invariant: bound(lo) > eps >= bound(hi)
    while (hi - lo > 1.0) {
      const double mid = std::floor((lo + hi) / 2.0);
      if (mid <= lo || mid >= hi) break;  // double spacing exceeds 1 up here
      if (bound(mid) <= eps)
        hi = mid;
      else
        lo = mid;
    }
    result = hi;
  }

  SampleSizeResult out;
  out.bisection_T = result;
  if (family == SampleSizeFamily::VucbGaussian) {
    const double a = 12.0 * G / (eps * eps);
    out.closed_form_T = std::ceil(a * std::log(a));
    out.table_T = table3_value(eps, G);
  }
  return out;
}

TaylorGap taylor_gap(std::span<const double> lambda_star,
                     std::span<const double> delta, const NormParam& p) {
  if (p.is_infinite()) throw PreconditionViolated("taylor_gap needs finite p");
  if (lambda_star.size() != delta.size()) throw Error("taylor_gap: length mismatch");
  double dot = 0.0, dmax = -std::numeric_limits<double>::infinity(), dinf = 0.0;
  for (std::size_t g = 0; g < delta.size(); ++g) {
    dot += lambda_star[g] * delta[g];
    dmax = std::max(dmax, delta[g]);
    dinf = std::max(dinf, std::abs(delta[g]));
    if (delta[g] > 1.0 - 1e-6)
      throw PreconditionViolated("taylor_gap: delta_g must stay below 1");
  }
  if (std::abs(dot) > 1e-12)
    throw PreconditionViolated("taylor_gap: delta must be lambda*-orthogonal");

  double norm_p = 0.0, quad = 0.0;
  for (std::size_t g = 0; g < delta.size(); ++g) {
    norm_p += lambda_star[g] / std::pow(1.0 - delta[g], p.p);
    quad += lambda_star[g] * delta[g] * delta[g];
  }
  norm_p = std::pow(norm_p, 1.0 / p.p);

  TaylorGap out;
  out.lhs = std::abs(norm_p - 1.0 - 0.5 * (p.p + 1.0) * quad);
  out.rhs = 6.0 * p.p * p.p * dinf * dinf * dinf /
            std::pow(1.0 - dmax, 3.0 * p.p + 3.0);
  return out;
}

}  // namespace vucb

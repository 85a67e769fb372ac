#include "vucb/core.hpp"

#include <algorithm>
#include <cmath>

namespace vucb {

NormParam NormParam::finite(double p) {
  if (!(p >= 1.0) || std::isinf(p)) throw Error("NormParam::finite requires 1 <= p < inf");
  return NormParam{p, 2.0 * p / (p + 1.0)};
}

NormParam NormParam::infinite() {
  return NormParam{std::numeric_limits<double>::infinity(), 2.0};
}

double exponent(const NormParam& p) {
  return p.is_infinite() ? 2.0 : 2.0 * p.p / (p.p + 1.0);
}

GroupDistribution GroupDistribution::gaussian(double mu, double sigma) {
  GroupDistribution d;
  d.family = Family::Gaussian;
  d.mu = mu;
  d.sigma = sigma;
  return d;
}

GroupDistribution GroupDistribution::exponential(double rate) {
  if (!(rate > 0.0)) throw DegenerateGroup("exponential rate must be > 0");
  GroupDistribution d;
  d.family = Family::Exponential;
  d.rate = rate;
  d.mu = 1.0 / rate;
  d.sigma = 1.0 / rate;
  return d;
}

GroupDistribution GroupDistribution::shifted_bounded(double lo, double hi, double mu) {
  if (!(lo < hi) || !(mu > lo) || !(mu < hi))
    throw DegenerateGroup("shifted-bounded needs lo < mu < hi");
  GroupDistribution d;
  d.family = Family::ShiftedBounded;
  d.lo = lo;
  d.hi = hi;
  d.mu = mu;
  d.sigma = std::sqrt((hi - mu) * (mu - lo));
  return d;
}

double GroupDistribution::sample(std::mt19937_64& rng) const {
  switch (family) {
    case Family::Gaussian: {
      std::normal_distribution<double> dist(mu, sigma);
      return dist(rng);
    }
    case Family::Exponential: {
      std::exponential_distribution<double> dist(rate);
      return dist(rng);
    }
    case Family::ShiftedBounded: {
      std::bernoulli_distribution dist((mu - lo) / (hi - lo));
      return dist(rng) ? hi : lo;
    }
  }
  throw Error("unreachable family");
}

std::vector<double> Instance::sigmas() const {
  std::vector<double> s;
  s.reserve(groups.size());
  for (const auto& g : groups) s.push_back(g.sigma);
  return s;
}

Instance validate_instance(Instance inst) {
  if (inst.groups.size() < 2) throw DegenerateGroup("instance needs G >= 2 groups");
  for (const auto& g : inst.groups)
    if (!(g.sigma > 0.0)) throw DegenerateGroup("every group needs sigma > 0");
  return inst;
}

CountVector make_counts(std::vector<double> counts, double horizon, bool relaxed) {
  double sum = 0.0;
  for (double c : counts) {
    if (c < 0.0) throw Error("counts must be non-negative");
    sum += c;
  }
  const double slack = relaxed ? 1e-9 * std::max(horizon, 1.0) : 0.5;
  if (std::abs(sum - horizon) > slack)
    throw Error("counts must sum to the horizon");
  return CountVector{std::move(counts), horizon, relaxed};
}

double objective_Rp(std::span<const double> n, std::span<const double> sigma,
                    const NormParam& p) {
  if (n.size() != sigma.size()) throw Error("objective_Rp: length mismatch");
  if (p.is_infinite()) {
    double worst = 0.0;
    for (std::size_t g = 0; g < n.size(); ++g) {
      if (n[g] <= 0.0) throw ZeroCount("objective_Rp: zero count");
      worst = std::max(worst, sigma[g] * sigma[g] / n[g]);
    }
    return worst;
  }
  double acc = 0.0;
  for (std::size_t g = 0; g < n.size(); ++g) {
    if (n[g] <= 0.0) throw ZeroCount("objective_Rp: zero count");
    acc += std::pow(sigma[g] * sigma[g] / n[g], p.p);
  }
  return std::pow(acc, 1.0 / p.p);
}

double objective_Rp(const CountVector& n, std::span<const double> sigma,
                    const NormParam& p) {
  return objective_Rp(std::span<const double>(n.counts), sigma, p);
}

}  // namespace vucb

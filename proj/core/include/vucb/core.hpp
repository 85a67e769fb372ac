#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "vucb/errors.hpp"

namespace vucb {

// The objective's norm parameter p in [1, inf], together with the derived
// exponent q = 2p/(p+1) that governs the optimal allocation (q = 2 at p = inf).
struct NormParam {
  double p = 2.0;  // +inf for the max norm
  double q = 4.0 / 3.0;

  static NormParam finite(double p);
  static NormParam infinite();
  bool is_infinite() const { return std::isinf(p); }
};

double exponent(const NormParam& p);

enum class Family { Gaussian, Exponential, ShiftedBounded };

// One group's sampling distribution. mu/sigma are the true mean and standard
// deviation regardless of family. The shifted-bounded family is a two-point
// distribution on {lo, hi} with the requested mean, which keeps it bounded
// (hence sub-Gaussian) with sigma = sqrt((hi-mu)(mu-lo)) <= (hi-lo)/2.
struct GroupDistribution {
  Family family = Family::Gaussian;
  double mu = 0.0;
  double sigma = 1.0;
  double rate = 1.0;              // exponential only
  double lo = 0.0, hi = 1.0;      // shifted-bounded support

  static GroupDistribution gaussian(double mu, double sigma);
  static GroupDistribution exponential(double rate);
  static GroupDistribution shifted_bounded(double lo, double hi, double mu);

  double sample(std::mt19937_64& rng) const;
};

struct Instance {
  std::vector<GroupDistribution> groups;

  std::size_t size() const { return groups.size(); }
  std::vector<double> sigmas() const;
};

// Returns the instance unchanged; throws DegenerateGroup if G < 2 or any
// sigma_g <= 0.
Instance validate_instance(Instance inst);

// Allocation vector over the G groups. `relaxed` marks real-valued vectors
// (the continuous benchmark n*); integer vectors must sum to the horizon
// exactly, relaxed ones within 1e-9 * T.
struct CountVector {
  std::vector<double> counts;
  double horizon = 0.0;
  bool relaxed = false;
};

CountVector make_counts(std::vector<double> counts, double horizon, bool relaxed);

// R_p(n; sigma) = || (sigma_g^2 / n_g)_g ||_p. Throws ZeroCount when some
// n_g = 0 (the objective is infinite there).
double objective_Rp(std::span<const double> n, std::span<const double> sigma,
                    const NormParam& p);
double objective_Rp(const CountVector& n, std::span<const double> sigma,
                    const NormParam& p);

}  // namespace vucb

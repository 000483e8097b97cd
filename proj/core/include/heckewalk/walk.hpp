#pragma once

// Random walks on S_n driven by a generator sequence r.
//
// A k-step at permutation w: on an ascent (w_k < w_{k+1}) swap positions k,
// k+1 with probability [k]/(1+[k]) and otherwise stay. On a descent swap with
// probability q[k]/(1+[k]), stay with probability q^k/(1+[k]), and with the
// leftover probability the attempt fails. A failed attempt restarts the whole
// sequence from the identity. At q = 1 no attempt fails and the walk is the
// convolution of D_j = (1 + j s_j)/(1 + j).

#include <cstdint>
#include <map>

#include "heckewalk/perm.hpp"
#include "heckewalk/qpoly.hpp"
#include "heckewalk/seq.hpp"

namespace heckewalk {

enum class DistMode { Exact, Empirical };

class Distribution {
 public:
  static Distribution exact(int degree, std::map<Perm, Rational> probs);
  static Distribution empirical(int degree, std::map<Perm, double> probs);

  int degree() const { return degree_; }
  DistMode mode() const { return mode_; }
  /// Exact-mode probabilities. Throws std::logic_error in empirical mode.
  const std::map<Perm, Rational>& exact_probs() const;
  const std::map<Perm, double>& empirical_probs() const { return empirical_; }

  /// Exact probability of w (zero off the support). Exact mode only.
  Rational exact_prob(const Perm& w) const;
  /// Probability of w as a double in either mode.
  double prob(const Perm& w) const;
  std::size_t support_size() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Distribution(int degree, DistMode mode) : degree_(degree), mode_(mode) {}

  int degree_;
  DistMode mode_;
  std::map<Perm, Rational> exact_;
  std::map<Perm, double> empirical_;
};

struct StepProbs {
  Rational swap;
  Rational stay;
  Rational restart;
};

/// Throws std::out_of_range for a bad k and std::domain_error unless 0 < q <= 1.
StepProbs step_probs(const Perm& w, int k, const Rational& q);

/// Convolution of the point mass at the identity with D_{r_1}, ..., D_{r_l}.
Distribution exact_distribution_q1(const GenSequence& r, int n = 0);

/// Outcome law of a single attempt: sub-probabilities of finishing at each
/// permutation and the total failure mass. success + failure = 1.
struct AttemptLaw {
  int degree = 0;
  std::map<Perm, Rational> success;
  Rational failure;
};

AttemptLaw single_attempt(const GenSequence& r, const Rational& q, int n = 0);

/// Law of the final permutation with restarts: success / (1 - failure).
Distribution exact_distribution(const GenSequence& r, const Rational& q, int n = 0);

struct WalkConfig {
  Rational q{1};
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_restarts_per_sample = 1'000'000;
  /// Worker threads; 0 uses the hardware concurrency. Output does not depend on it.
  unsigned threads = 0;
};

/// Samples are grouped in blocks of this many; block b draws from a
/// std::mt19937_64 seeded with stream_seed(seed, b).
inline constexpr std::uint64_t kSimulationBlock = 4096;

/// splitmix64(seed + (b + 1) * 0x9e3779b97f4a7c15)
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t block);

/// Monte Carlo of the restart walk. Deterministic for a fixed config.
/// Throws std::runtime_error if a sample needs more than max_restarts_per_sample restarts.
Distribution simulate(const GenSequence& r, const WalkConfig& config, int n = 0);

/// Half the L1 distance over the union of supports. Both exact.
/// Throws std::invalid_argument on degree mismatch, std::logic_error on an empirical input.
Rational total_variation_exact(const Distribution& a, const Distribution& b);
/// Same in double precision; accepts either mode.
double total_variation(const Distribution& a, const Distribution& b);

/// Uniform distribution on S_n.
Distribution uniform_distribution(int n);

}  // namespace heckewalk

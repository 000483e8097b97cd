#include "heckewalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace heckewalk {

Distribution Distribution::exact(int degree, std::map<Perm, Rational> probs) {
  Distribution d(degree, DistMode::Exact);
  for (auto& [w, p] : probs) {
    if (w.degree() != degree) throw std::invalid_argument("distribution entry has the wrong degree");
    if (p < 0) throw std::invalid_argument("negative probability");
    if (p != 0) d.exact_.emplace(w, std::move(p));
  }
  return d;
}

Distribution Distribution::empirical(int degree, std::map<Perm, double> probs) {
  Distribution d(degree, DistMode::Empirical);
  for (auto& [w, p] : probs) {
    if (w.degree() != degree) throw std::invalid_argument("distribution entry has the wrong degree");
    if (p != 0.0) d.empirical_.emplace(w, p);
  }
  return d;
}

const std::map<Perm, Rational>& Distribution::exact_probs() const {
  if (mode_ != DistMode::Exact) throw std::logic_error("distribution is empirical");
  return exact_;
}

Rational Distribution::exact_prob(const Perm& w) const {
  const auto& m = exact_probs();
  auto it = m.find(w);
  return it == m.end() ? Rational(0) : it->second;
}

double Distribution::prob(const Perm& w) const {
  if (mode_ == DistMode::Exact) return exact_prob(w).get_d();
  auto it = empirical_.find(w);
  return it == empirical_.end() ? 0.0 : it->second;
}

std::size_t Distribution::support_size() const {
  return mode_ == DistMode::Exact ? exact_.size() : empirical_.size();
}

namespace {

void check_q(const Rational& q) {
  if (q <= 0 || q > 1) throw std::domain_error("q must satisfy 0 < q <= 1, got " + q.get_str());
}

int resolve_degree(const GenSequence& r, int n) {
  const int d = n == 0 ? r.min_degree() : n;
  if (d < r.min_degree() || d < 1 || d > kMaxDegree) {
    throw std::invalid_argument("degree " + std::to_string(d) + " invalid for sequence " + r.to_string());
  }
  return d;
}

Rational rational_pow(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

// Per-letter k-step probabilities, evaluated once per distinct letter.
struct StepTable {
  Rational ascent_swap, ascent_stay;
  Rational descent_swap, descent_stay, descent_restart;
};

StepTable step_table(int k, const Rational& q) {
  const Rational qk = eval(q_int(static_cast<unsigned>(k)), q);
  const Rational denom = 1 + qk;
  StepTable t;
  t.ascent_swap = qk / denom;
  t.ascent_stay = 1 / denom;
  t.descent_swap = q * qk / denom;
  t.descent_stay = rational_pow(q, k) / denom;
  t.descent_restart = 1 - t.descent_swap - t.descent_stay;
  return t;
}

void accumulate(std::map<Perm, Rational>& m, const Perm& w, const Rational& p) {
  if (p == 0) return;
  auto [it, inserted] = m.try_emplace(w, p);
  if (!inserted) it->second += p;
}

}  // namespace

StepProbs step_probs(const Perm& w, int k, const Rational& q) {
  if (k < 1 || k >= w.degree()) throw std::out_of_range("k-step index out of range");
  check_q(q);
  const StepTable t = step_table(k, q);
  if (w.is_ascent(k)) return {t.ascent_swap, t.ascent_stay, Rational(0)};
  return {t.descent_swap, t.descent_stay, t.descent_restart};
}

Distribution exact_distribution_q1(const GenSequence& r, int n) {
  const int d = resolve_degree(r, n);
  std::map<Perm, Rational> cur{{Perm::identity(d), Rational(1)}};
  for (int j : r.letters()) {
    const Rational move = Rational(j, j + 1);
    const Rational stay = Rational(1, j + 1);
    std::map<Perm, Rational> next;
    for (const auto& [w, p] : cur) {
      accumulate(next, w, p * stay);
      accumulate(next, w.apply_adjacent(j), p * move);
    }
    cur = std::move(next);
  }
  return Distribution::exact(d, std::move(cur));
}

AttemptLaw single_attempt(const GenSequence& r, const Rational& q, int n) {
  check_q(q);
  AttemptLaw law;
  law.degree = resolve_degree(r, n);
  law.failure = 0;
  std::map<Perm, Rational> cur{{Perm::identity(law.degree), Rational(1)}};
  for (int k : r.letters()) {
    const StepTable t = step_table(k, q);
    std::map<Perm, Rational> next;
    for (const auto& [w, p] : cur) {
      const Perm ws = w.apply_adjacent(k);
      if (w.is_ascent(k)) {
        accumulate(next, ws, p * t.ascent_swap);
        accumulate(next, w, p * t.ascent_stay);
      } else {
        accumulate(next, ws, p * t.descent_swap);
        accumulate(next, w, p * t.descent_stay);
        law.failure += p * t.descent_restart;
      }
    }
    cur = std::move(next);
  }
  law.success = std::move(cur);
  return law;
}

Distribution exact_distribution(const GenSequence& r, const Rational& q, int n) {
  AttemptLaw law = single_attempt(r, q, n);
  if (law.failure == 1) throw std::domain_error("every attempt fails; the walk never terminates");
  const Rational scale = 1 / (1 - law.failure);
  for (auto& [w, p] : law.success) p *= scale;
  return Distribution::exact(law.degree, std::move(law.success));
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t block) {
  std::uint64_t z = seed + (block + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct SimStep {
  int k;
  double ascent_swap;
  double descent_swap;
  double descent_keep;  // swap + stay
};

using Counts = std::unordered_map<Perm, std::uint64_t>;

void run_block(const std::vector<SimStep>& steps, int degree, std::uint64_t seed, std::uint64_t block,
               std::uint64_t count, std::uint64_t max_restarts, Counts& out) {
  std::mt19937_64 rng(stream_seed(seed, block));
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const Perm start = Perm::identity(degree);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::uint64_t restarts = 0;
    for (;;) {
      Perm w = start;
      bool failed = false;
      for (const SimStep& st : steps) {
        const double u = uniform();
        if (w.is_ascent(st.k)) {
          if (u < st.ascent_swap) w = w.apply_adjacent(st.k);
        } else if (u < st.descent_swap) {
          w = w.apply_adjacent(st.k);
        } else if (u >= st.descent_keep) {
          failed = true;
          break;
        }
      }
      if (!failed) {
        ++out[w];
        break;
      }
      if (++restarts > max_restarts) {
        throw std::runtime_error("sample exceeded " + std::to_string(max_restarts) +
                                 " restarts; q is too small for practical simulation");
      }
    }
  }
}

}  // namespace

Distribution simulate(const GenSequence& r, const WalkConfig& config, int n) {
  check_q(config.q);
  if (config.samples == 0) throw std::invalid_argument("samples must be positive");
  const int d = resolve_degree(r, n);
  const double q = config.q.get_d();

  std::vector<SimStep> steps;
  steps.reserve(r.size());
  for (int k : r.letters()) {
    double qk = 0.0;
    for (int j = 0; j < k; ++j) qk += std::pow(q, j);
    steps.push_back({k, qk / (1.0 + qk), q * qk / (1.0 + qk), (q * qk + std::pow(q, k)) / (1.0 + qk)});
  }

  const std::uint64_t blocks = (config.samples + kSimulationBlock - 1) / kSimulationBlock;
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

  std::vector<Counts> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned t) {
    try {
      for (std::uint64_t b = t; b < blocks; b += threads) {
        const std::uint64_t begin = b * kSimulationBlock;
        const std::uint64_t count = std::min(kSimulationBlock, config.samples - begin);
        run_block(steps, d, config.seed, b, count, config.max_restarts_per_sample, partial[t]);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::map<Perm, std::uint64_t> total;
  for (const auto& c : partial)
    for (const auto& [w, k] : c) total[w] += k;
  std::map<Perm, double> probs;
  for (const auto& [w, k] : total) probs.emplace(w, static_cast<double>(k) / static_cast<double>(config.samples));
  return Distribution::empirical(d, std::move(probs));
}

Rational total_variation_exact(const Distribution& a, const Distribution& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in total variation");
  std::set<Perm> support;
  for (const auto& [w, p] : a.exact_probs()) support.insert(w);
  for (const auto& [w, p] : b.exact_probs()) support.insert(w);
  Rational sum = 0;
  for (const Perm& w : support) sum += abs(Rational(a.exact_prob(w) - b.exact_prob(w)));
  return sum / 2;
}

double total_variation(const Distribution& a, const Distribution& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in total variation");
  if (a.mode() == DistMode::Exact && b.mode() == DistMode::Exact) return total_variation_exact(a, b).get_d();
  std::set<Perm> support;
  auto collect = [&support](const Distribution& d) {
    if (d.mode() == DistMode::Exact) {
      for (const auto& [w, p] : d.exact_probs()) support.insert(w);
    } else {
      for (const auto& [w, p] : d.empirical_probs()) support.insert(w);
    }
  };
  collect(a);
  collect(b);
  double sum = 0.0;
  for (const Perm& w : support) sum += std::abs(a.prob(w) - b.prob(w));
  return sum / 2.0;
}

Distribution uniform_distribution(int n) {
  std::map<Perm, Rational> probs;
  const auto perms = all_perms(n);
  const Rational p(1, static_cast<unsigned long>(perms.size()));
  for (const Perm& w : perms) probs.emplace(w, p);
  return Distribution::exact(n, std::move(probs));
}

}  // namespace heckewalk

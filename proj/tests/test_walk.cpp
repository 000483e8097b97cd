#include <doctest.h>

#include <random>
#include <stdexcept>

#include "heckewalk/closedform.hpp"
#include "heckewalk/walk.hpp"
#include "oracles.hpp"

using namespace heckewalk;

namespace {

Rational sum_exact(const Distribution& d) {
  Rational s = 0;
  for (const auto& [w, p] : d.exact_probs()) s += p;
  return s;
}

Distribution point_mass(const Perm& w) { return Distribution::exact(w.degree(), {{w, Rational(1)}}); }

}  // namespace

TEST_CASE("k-step probabilities") {
  const StepProbs descent = step_probs(Perm{2, 1}, 1, Rational(1, 2));
  CHECK(descent.swap == Rational(1, 4));
  CHECK(descent.stay == Rational(1, 4));
  CHECK(descent.restart == Rational(1, 2));

  for (const Rational& q : {Rational(1), Rational(1, 2), Rational(1, 3)}) {
    const StepProbs ascent = step_probs(Perm{1, 2}, 1, q);
    CHECK(ascent.swap == Rational(1, 2));
    CHECK(ascent.stay == Rational(1, 2));
    CHECK(ascent.restart == 0);
  }

  const StepProbs at_one = step_probs(Perm{2, 1}, 1, Rational(1));
  CHECK(at_one.swap == Rational(1, 2));
  CHECK(at_one.stay == Rational(1, 2));
  CHECK(at_one.restart == 0);

  CHECK_THROWS_AS((step_probs(Perm{2, 1}, 2, Rational(1, 2))), std::out_of_range);
  CHECK_THROWS_AS((step_probs(Perm{2, 1}, 1, Rational(0))), std::domain_error);
  CHECK_THROWS_AS((step_probs(Perm{2, 1}, 1, Rational(3, 2))), std::domain_error);

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Perm w = oracle::random_perm(rng, 6);
    Rational q(1 + static_cast<long>(rng() % 9), 10);
    q.canonicalize();
    const StepProbs p = step_probs(w, 1 + trial % 5, q);
    CHECK(p.swap + p.stay + p.restart == 1);
    CHECK(p.restart >= 0);
  }
}

TEST_CASE("convolution walk at q = 1") {
  const Distribution rho3 = exact_distribution_q1(rho(3));
  CHECK(rho3 == uniform_distribution(3));

  const Distribution half = Distribution::exact(2, {{Perm{1, 2}, Rational(1, 2)}, {Perm{2, 1}, Rational(1, 2)}});
  CHECK(exact_distribution_q1(GenSequence{1}) == half);
  CHECK(exact_distribution_q1(GenSequence{1, 1}) == half);

  for (int n = 2; n <= 6; ++n) CHECK(exact_distribution_q1(rho(n)) == uniform_distribution(n));
  CHECK_THROWS_AS((exact_distribution_q1(GenSequence{1, 2}, 2)), std::invalid_argument);
}

TEST_CASE("restart walk") {
  CHECK(exact_distribution(rho(3), Rational(1, 2)) == uniform_distribution(3));
  CHECK(exact_distribution(rho(3), Rational(1)) == exact_distribution_q1(rho(3)));
  const Distribution half = Distribution::exact(2, {{Perm{1, 2}, Rational(1, 2)}, {Perm{2, 1}, Rational(1, 2)}});
  for (const Rational& q : {Rational(1), Rational(1, 2), Rational(1, 3)}) {
    CHECK(exact_distribution(GenSequence{1}, q) == half);
    CHECK(single_attempt(GenSequence{1}, q).failure == 0);
  }
  CHECK_THROWS_AS(exact_distribution(rho(3), Rational(0)), std::domain_error);
}

TEST_CASE("probability of the identity under rho_3 from the restart equation") {
  // P = 1/(4(2+q)) + q/(4(2+q)) + P(1-q)/(2(2+q)), solved for P.
  for (const Rational& q : {Rational(1, 2), Rational(1, 3), Rational(3, 4)}) {
    const Rational a = 1 / (4 * (2 + q)) + q / (4 * (2 + q));
    const Rational b = (1 - q) / (2 * (2 + q));
    const Rational p = a / (1 - b);
    CHECK(p == Rational(1, 6));
    CHECK(exact_distribution(rho(3), q).exact_prob(Perm{1, 2, 3}) == p);
  }
}

TEST_CASE("single-attempt law matches the outcome tree") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 120; ++trial) {
    const auto r = oracle::random_sequence(rng, 7, 3);
    const int n = oracle::max_of(r) + 1;
    Rational q(1 + static_cast<long>(rng() % 5), 5);
    q.canonicalize();
    const AttemptLaw law = single_attempt(GenSequence(r), q);
    oracle::TreeLaw tree = oracle::attempt_by_tree(r, q, n);
    CHECK(law.failure == tree.failure);
    std::map<std::vector<int>, Rational> got;
    for (const auto& [w, p] : law.success) got[w.word()] = p;
    std::erase_if(tree.success, [](const auto& e) { return e.second == 0; });
    CHECK(got == tree.success);

    const Distribution d = exact_distribution(GenSequence(r), q);
    CHECK(sum_exact(d) == 1);
    for (const auto& [w, p] : d.exact_probs()) CHECK(p == tree.success.at(w.word()) / (1 - tree.failure));
  }
}

TEST_CASE("walk laws follow the closed form") {
  for (int l = 1; l <= 6; ++l) {
    for (const GenSequence& r : enumerate_tight(l)) {
      const auto table = alpha_table(r);
      for (const Rational& q : {Rational(1), Rational(1, 2), Rational(1, 3)}) {
        Rational normalizer = 1, total = 0;
        for (int k : r.letters()) normalizer *= 1 + eval(q_int(static_cast<unsigned>(k)), q);
        for (const auto& [w, a] : table) total += eval(a, q);

        // One attempt lands on v with probability alpha_r(v)(q) / prod(1 + [r_i](q)).
        const AttemptLaw law = single_attempt(r, q);
        CHECK(law.success.size() == table.size());
        for (const auto& [w, a] : table) CHECK(law.success.at(w) == eval(a, q) / normalizer);

        const Distribution d = exact_distribution(r, q);
        for (const auto& [w, a] : table) CHECK(d.exact_prob(w) == eval(a, q) / total);
      }
    }
  }
}

TEST_CASE("q = 1 restart walk equals the convolution walk") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const GenSequence r(oracle::random_sequence(rng, 8, 4));
    CHECK(exact_distribution(r, Rational(1)) == exact_distribution_q1(r));
  }
}

TEST_CASE("total variation") {
  const Distribution u = uniform_distribution(3);
  CHECK(total_variation_exact(u, u) == 0);
  CHECK(total_variation_exact(point_mass(Perm{1, 2}), point_mass(Perm{2, 1})) == 1);
  const Distribution skew = Distribution::exact(2, {{Perm{1, 2}, Rational(3, 4)}, {Perm{2, 1}, Rational(1, 4)}});
  CHECK(total_variation_exact(uniform_distribution(2), skew) == Rational(1, 4));
  CHECK(total_variation(uniform_distribution(2), skew) == doctest::Approx(0.25));
  CHECK_THROWS_AS(total_variation_exact(u, skew), std::invalid_argument);
}

TEST_CASE("simulation") {
  WalkConfig cfg;
  cfg.q = Rational(1, 2);
  cfg.samples = 100000;
  cfg.seed = 12345;
  const Distribution one = simulate(GenSequence{1}, cfg);
  CHECK(one.mode() == DistMode::Empirical);
  CHECK(one.prob(Perm{1, 2}) == doctest::Approx(0.5).epsilon(0.02));
  CHECK(one.prob(Perm{2, 1}) == doctest::Approx(0.5).epsilon(0.02));

  cfg.samples = 20000;
  const Distribution a = simulate(rho(3), cfg);
  const Distribution b = simulate(rho(3), cfg);
  CHECK(a == b);
  cfg.threads = 3;
  CHECK(simulate(rho(3), cfg) == a);
  cfg.threads = 0;
  double total = 0.0;
  for (const auto& [w, p] : a.empirical_probs()) total += p;
  CHECK(std::abs(total - 1.0) < 1e-12);
  cfg.seed = 999;
  CHECK_FALSE(simulate(rho(3), cfg) == a);

  CHECK_THROWS_AS((simulate(rho(3), WalkConfig{.q = Rational(0), .samples = 10})), std::domain_error);
  CHECK_THROWS_AS((simulate(rho(3), WalkConfig{.q = Rational(1, 2), .samples = 0})), std::invalid_argument);
  CHECK_THROWS_AS(simulate(rho(5), WalkConfig{.q = Rational(1, 1000), .samples = 100, .max_restarts_per_sample = 2}),
                  std::runtime_error);
}

TEST_CASE("simulation error shrinks with sample count") {
  const Distribution exact = exact_distribution(rho(4), Rational(1, 2));
  WalkConfig cfg{.q = Rational(1, 2), .samples = 1000, .seed = 2024};
  const double small = total_variation(exact, simulate(rho(4), cfg));
  cfg.samples = 100000;
  const double large = total_variation(exact, simulate(rho(4), cfg));
  CHECK(large < small);
  CHECK(large < 0.02);
}

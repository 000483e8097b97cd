#include <doctest.h>

#include <random>
#include <stdexcept>

#include "heckewalk/closedform.hpp"
#include "oracles.hpp"

using namespace heckewalk;

namespace {

QPoly qint(unsigned i) { return q_int(i); }

// [1]^{n-1} [2]^{n-2} ... [n-1]
QPoly uniform_value(int n) {
  QPoly v{1};
  for (int i = 1; i < n; ++i) v *= pow(qint(static_cast<unsigned>(i)), static_cast<unsigned>(n - i));
  return v;
}

}  // namespace

TEST_CASE("closed form on the worked examples") {
  const GenSequence r{1, 2, 1, 1, 3, 1};
  CHECK(alpha(r, Perm{1, 2, 4, 3}) == pow(qint(2), 3) * qint(3));
  CHECK(alpha(r, Perm{1, 2, 3, 4}) == pow(qint(2), 3));

  for (const Perm& w : all_perms(3)) CHECK(alpha(GenSequence{1, 2, 1}, w) == QPoly{1, 1});
  for (const Perm& w : all_perms(3)) CHECK(alpha(GenSequence{1, 2, 1, 2}, w) == qint(2) * qint(3));
}

TEST_CASE("printed product range would miss the last factor") {
  // Stopping the product at i = max(r) gives [2] for (1,2,1,2); the expansion gives [2][3].
  const GenSequence r{1, 2, 1, 2};
  const HeckeElt h = expand(r);
  for (const Perm& w : all_perms(3)) {
    CHECK(h.coefficient(w) == qint(2) * qint(3));
    CHECK(alpha(r, w) != qint(2));
  }
}

TEST_CASE("alpha tables") {
  const auto table = alpha_table(GenSequence{1, 2, 1, 1, 3, 1});
  CHECK(table.size() == 12);
  int low = 0, high = 0;
  for (const auto& [w, a] : table) {
    low += a == pow(qint(2), 3);
    high += a == pow(qint(2), 3) * qint(3);
  }
  CHECK(low == 6);
  CHECK(high == 6);

  CHECK(alpha_table(GenSequence{1}) == std::map<Perm, QPoly>{{Perm{1, 2}, QPoly{1}}, {Perm{2, 1}, QPoly{1}}});

  const auto rho4 = alpha_table(rho(4));
  CHECK(rho4.size() == 24);
  for (const auto& [w, a] : rho4) CHECK(a == pow(qint(2), 2) * qint(3));
}

TEST_CASE("errors and zeros") {
  CHECK_THROWS_AS((alpha(GenSequence{2, 2, 1}, Perm{1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS((alpha(GenSequence{1, 2}, Perm{1, 2})), std::invalid_argument);
  CHECK_THROWS_AS((alpha_table(GenSequence{2, 2, 1})), std::invalid_argument);
  CHECK(alpha(GenSequence{1, 2}, Perm{3, 2, 1}).is_zero());
  CHECK(alpha(GenSequence{1}, Perm{1, 3, 2}).is_zero());
}

TEST_CASE("uniform coefficient for rho_n") {
  for (int n = 2; n <= 6; ++n) {
    const QPoly expected = uniform_value(n);
    for (const Perm& w : all_perms(n)) REQUIRE(alpha_formula(rho(n), w, false) == expected);
  }
}

TEST_CASE("verification reports") {
  const AlphaReport ok = verify(GenSequence{1, 2, 1, 2});
  CHECK(ok.all_match);
  CHECK(ok.entries.size() == 6);
  for (const auto& [w, e] : ok.entries) CHECK(e.closed == qint(2) * qint(3));

  const AlphaReport five = verify(rho(5));
  CHECK(five.all_match);
  CHECK(five.entries.size() == 120);
  CHECK(five.entries.begin()->second.closed == pow(qint(2), 3) * pow(qint(3), 2) * qint(4));

  const AlphaReport none = verify(GenSequence{2, 2, 1});
  CHECK(none.classification.tag == TightTag::NotCovered);
  CHECK(none.entries.empty());
  CHECK(none.all_match);
}

TEST_CASE("closed form matches expansion on random covered sequences") {
  std::mt19937_64 rng(59);
  int covered = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const GenSequence r(oracle::random_sequence(rng, 10, 4, 1));
    const AlphaReport report = verify(r);
    if (!report.classification.covered()) continue;
    ++covered;
    CHECK_MESSAGE(report.all_match, r.to_string());
  }
  CHECK(covered > 20);
}

TEST_CASE("padding does not change alpha") {
  for (const GenSequence& r : enumerate_tight(5)) {
    const int n = r.min_degree();
    for (const Perm& w : sorted_downset(r, n)) {
      const QPoly base = alpha(r, w);
      for (int m = n + 1; m <= n + 3; ++m) CHECK(alpha(r, w.pad(m)) == base);
    }
    CHECK(verify(r, n + 2).all_match);
  }
}

TEST_CASE("reversed tight sequences read the inverse") {
  for (int l = 1; l <= 6; ++l) {
    for (const GenSequence& r : enumerate_tight(l)) {
      const GenSequence rev = r.reversed();
      const AlphaReport report = verify(rev);
      CHECK_MESSAGE(report.all_match, rev.to_string());
      if (!is_tight(rev)) CHECK(report.classification.uses_inverse);
    }
  }
}

TEST_CASE("alpha vanishes exactly off the downset") {
  for (const GenSequence& r : enumerate_tight(5)) {
    const int n = r.min_degree();
    const PermSet down = downset(r, n);
    for (const Perm& w : all_perms(n)) CHECK(alpha(r, w).is_zero() == !down.contains(w));
  }
}

TEST_CASE("commutation-equivalent sequences use the witness's closed form") {
  for (const GenSequence& r : {GenSequence{1, 2, 3, 1, 2, 1, 3, 3}, GenSequence{3, 3, 1, 2, 3, 1, 2, 1}}) {
    const AlphaReport report = verify(r);
    CHECK(report.classification.tag == TightTag::CommEquiv);
    CHECK(report.entries.size() == 24);
    CHECK_MESSAGE(report.all_match, r.to_string());
  }
}

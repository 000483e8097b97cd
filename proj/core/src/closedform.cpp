#include "heckewalk/closedform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace heckewalk {

namespace {

int resolve_degree(const GenSequence& r, int n) {
  const int d = n == 0 ? r.min_degree() : n;
  if (d < r.min_degree() || d < 1) {
    throw std::invalid_argument("degree " + std::to_string(d) + " too small for sequence " + r.to_string());
  }
  return d;
}

void require_covered(const GenSequence& r, const TightClass& cls) {
  if (!cls.covered()) throw std::invalid_argument("no closed form applies to sequence " + r.to_string());
}

}  // namespace

QPoly alpha_formula(const GenSequence& r, const Perm& w, bool use_inverse) {
  const int n = w.degree();
  if (n < r.min_degree()) throw std::invalid_argument("permutation degree too small for sequence");
  const Perm v = use_inverse ? w.inverse() : w;
  const std::vector<int> inv = v.inv_sequence();
  QPoly result{1};
  for (int i = 2; i <= n; ++i) {
    const int inv_i = i < n ? inv[static_cast<std::size_t>(i - 1)] : 0;
    // a_r(i-1) - 1 may be -1; inv_i >= 0 absorbs it.
    const int e = std::max(r.count(i - 1) - 1, inv_i);
    if (e > 0) result *= pow(q_int(static_cast<unsigned>(i)), static_cast<unsigned>(e));
  }
  return result;
}

QPoly alpha(const GenSequence& r, const TightClass& cls, const Perm& w) {
  require_covered(r, cls);
  resolve_degree(r, w.degree());
  if (!downset(r, w.degree()).contains(w)) return {};
  return alpha_formula(r, w, cls.uses_inverse);
}

QPoly alpha(const GenSequence& r, const Perm& w) { return alpha(r, classify(r), w); }

std::map<Perm, QPoly> alpha_table(const GenSequence& r, const TightClass& cls, int n) {
  require_covered(r, cls);
  const int d = resolve_degree(r, n);
  std::map<Perm, QPoly> table;
  for (const Perm& w : downset(r, d)) table.emplace(w, alpha_formula(r, w, cls.uses_inverse));
  return table;
}

std::map<Perm, QPoly> alpha_table(const GenSequence& r, int n) { return alpha_table(r, classify(r), n); }

AlphaReport verify(const GenSequence& r, int n) {
  AlphaReport report;
  report.sequence = r;
  report.classification = classify(r);
  report.degree = resolve_degree(r, n);
  if (!report.classification.covered()) return report;

  const auto closed = alpha_table(r, report.classification, report.degree);
  const HeckeElt oracle = expand(r, {.degree = report.degree, .force = true});

  for (const auto& [w, c] : closed) report.entries[w].closed = c;
  for (const auto& [w, c] : oracle.terms()) report.entries[w].oracle = c;
  for (auto& [w, e] : report.entries) {
    e.match = e.closed == e.oracle;
    report.all_match = report.all_match && e.match;
  }
  return report;
}

}  // namespace heckewalk

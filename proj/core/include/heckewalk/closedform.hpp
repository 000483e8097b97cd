#pragma once

// Closed-form coefficients alpha_r(w) of Q(r) for tight sequences and the
// families reachable from them (rho-prefixed, reversed, rho-suffixed, and
// commutation-equivalent sequences), plus an entrywise cross-check against
// the brute-force expansion.
//
// For a covered r and w in S_n (n >= max(r)+1) below r in Bruhat order:
//
//   alpha_r(w) = prod_{i=2}^{n} [i]^{max(a_r(i-1) - 1, inv_v(i))}
//
// with v = w, or v = w^{-1} when the classification reads the inverse, and
// inv_v(n) = 0. The factor at i = n is needed: for r = (1,2,1,2) it supplies
// the [3] that the expansion produces.

#include <map>
#include <optional>

#include "heckewalk/hecke.hpp"
#include "heckewalk/perm.hpp"
#include "heckewalk/qpoly.hpp"
#include "heckewalk/seq.hpp"

namespace heckewalk {

/// The product formula alone, for a w already known to lie below r.
/// Throws std::invalid_argument if w.degree() < max(r)+1.
QPoly alpha_formula(const GenSequence& r, const Perm& w, bool use_inverse);

/// Zero when w is not below r. Throws std::invalid_argument when r is not
/// covered or the degree is too small.
QPoly alpha(const GenSequence& r, const Perm& w);
QPoly alpha(const GenSequence& r, const TightClass& cls, const Perm& w);

/// alpha over the downset of r in degree n (0 selects max(r)+1).
std::map<Perm, QPoly> alpha_table(const GenSequence& r, int n = 0);
std::map<Perm, QPoly> alpha_table(const GenSequence& r, const TightClass& cls, int n = 0);

struct AlphaEntry {
  QPoly closed;
  QPoly oracle;
  bool match = false;
};

struct AlphaReport {
  GenSequence sequence;
  TightClass classification;
  int degree = 0;
  std::map<Perm, AlphaEntry> entries;
  bool all_match = true;
};

/// Compares alpha_table(r, n) with the coefficients of expand(r, n). Mismatches
/// are reported, never thrown. NotCovered sequences yield no entries.
AlphaReport verify(const GenSequence& r, int n = 0);

}  // namespace heckewalk

#pragma once

// Elements of the Hecke algebra H_n(q) in the standard basis {T_w}, and the
// term-by-term expansion of Q(r) = (1 + [r_1] T_{r_1}) ... (1 + [r_l] T_{r_l}).

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckewalk/perm.hpp"
#include "heckewalk/qpoly.hpp"
#include "heckewalk/seq.hpp"

namespace heckewalk {

class HeckeElt {
 public:
  explicit HeckeElt(int degree);

  /// 1 = T_identity
  static HeckeElt one(int n);
  /// T_w with coefficient 1.
  static HeckeElt basis(const Perm& w);
  /// T_k = T_{s_k}
  static HeckeElt generator(int n, int k);

  int degree() const { return degree_; }
  std::size_t size() const { return terms_.size(); }
  const std::unordered_map<Perm, QPoly>& terms() const { return terms_; }
  /// Terms ordered lexicographically by permutation.
  std::vector<std::pair<Perm, QPoly>> sorted_terms() const;

  /// Stored coefficient, or zero. Throws std::invalid_argument on degree mismatch.
  QPoly coefficient(const Perm& w) const;

  /// Adds c T_w, dropping the term if it cancels.
  void add_term(const Perm& w, const QPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  /// Scalar multiple.
  friend HeckeElt operator*(const QPoly& c, const HeckeElt& h);

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_generator(int k) const;
  friend HeckeElt mul_gen(const HeckeElt& h, int k);
  friend HeckeElt mul_affine_gen(const HeckeElt& h, int k);

  int degree_;
  std::unordered_map<Perm, QPoly> terms_;
};

/// h . T_k. T_w T_k = T_{w s_k} on an ascent, q T_{w s_k} + (q-1) T_w on a descent.
/// Throws std::out_of_range unless 1 <= k <= degree-1.
HeckeElt mul_gen(const HeckeElt& h, int k);

/// h . (1 + [k] T_k)
HeckeElt mul_affine_gen(const HeckeElt& h, int k);

/// General product: each T_w of b is decomposed along a reduced word of w.
/// Throws std::invalid_argument on degree mismatch.
HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);

inline constexpr int kExpandDegreeGuard = 9;

struct ExpandOptions {
  /// 0 selects max(r) + 1.
  int degree = 0;
  /// Permits degrees above kExpandDegreeGuard.
  bool force = false;
};

/// Q(r) folded left to right from one(n).
/// Throws std::invalid_argument if the degree is too small or exceeds the guard.
HeckeElt expand(const GenSequence& r, ExpandOptions opts = {});

/// Image under T_i -> q: sum_w c_w q^{length(w)}.
QPoly index_specialization(const HeckeElt& h);
/// Image under T_i -> -1: sum_w c_w (-1)^{length(w)}.
QPoly sign_specialization(const HeckeElt& h);

}  // namespace heckewalk

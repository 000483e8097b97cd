#include "heckewalk/hecke.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace heckewalk {

HeckeElt::HeckeElt(int degree) : degree_(degree) {
  if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("Hecke algebra degree out of range");
}

HeckeElt HeckeElt::one(int n) { return basis(Perm::identity(n)); }

HeckeElt HeckeElt::basis(const Perm& w) {
  HeckeElt h(w.degree());
  h.terms_.emplace(w, QPoly{1});
  return h;
}

HeckeElt HeckeElt::generator(int n, int k) {
  HeckeElt h(n);
  h.check_generator(k);
  return basis(Perm::identity(n).apply_adjacent(k));
}

void HeckeElt::check_generator(int k) const {
  if (k < 1 || k >= degree_) {
    throw std::out_of_range("generator T_" + std::to_string(k) + " not in H_" + std::to_string(degree_));
  }
}

std::vector<std::pair<Perm, QPoly>> HeckeElt::sorted_terms() const {
  std::vector<std::pair<Perm, QPoly>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

QPoly HeckeElt::coefficient(const Perm& w) const {
  if (w.degree() != degree_) throw std::invalid_argument("degree mismatch in coefficient lookup");
  auto it = terms_.find(w);
  return it == terms_.end() ? QPoly{} : it->second;
}

void HeckeElt::add_term(const Perm& w, const QPoly& c) {
  if (w.degree() != degree_) throw std::invalid_argument("degree mismatch in add_term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch in Hecke sum");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElt operator*(const QPoly& c, const HeckeElt& h) {
  HeckeElt out(h.degree());
  if (c.is_zero()) return out;
  for (const auto& [w, a] : h.terms()) out.add_term(w, c * a);
  return out;
}

HeckeElt mul_gen(const HeckeElt& h, int k) {
  h.check_generator(k);
  static const QPoly q = QPoly::monomial(1);
  static const QPoly q_minus_1{-1, 1};
  HeckeElt out(h.degree_);
  out.terms_.reserve(2 * h.terms_.size());
  for (const auto& [w, c] : h.terms_) {
    Perm ws = w.apply_adjacent(k);
    if (w.is_ascent(k)) {
      out.add_term(ws, c);
    } else {
      out.add_term(ws, q * c);
      out.add_term(w, q_minus_1 * c);
    }
  }
  return out;
}

HeckeElt mul_affine_gen(const HeckeElt& h, int k) {
  h.check_generator(k);
  // T_w (1 + [k] T_k) = T_w + [k] T_{ws_k}          on an ascent,
  //                   = q^k T_w + q[k] T_{ws_k}      on a descent.
  const QPoly qk = q_int(static_cast<unsigned>(k));
  const QPoly q_qk = QPoly::monomial(1) * qk;
  const QPoly q_pow_k = QPoly::monomial(static_cast<std::size_t>(k));
  HeckeElt out(h.degree_);
  out.terms_.reserve(2 * h.terms_.size());
  for (const auto& [w, c] : h.terms_) {
    Perm ws = w.apply_adjacent(k);
    if (w.is_ascent(k)) {
      out.add_term(w, c);
      out.add_term(ws, qk * c);
    } else {
      out.add_term(w, q_pow_k * c);
      out.add_term(ws, q_qk * c);
    }
  }
  return out;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in Hecke product");
  HeckeElt out(a.degree());
  for (const auto& [w, c] : b.terms()) {
    HeckeElt partial = a;
    for (int k : w.reduced_word()) partial = mul_gen(partial, k);
    out += c * partial;
  }
  return out;
}

HeckeElt expand(const GenSequence& r, ExpandOptions opts) {
  const int n = opts.degree == 0 ? r.min_degree() : opts.degree;
  if (n < r.min_degree() || n < 1) {
    throw std::invalid_argument("degree " + std::to_string(n) + " too small for sequence " + r.to_string());
  }
  if (n > kExpandDegreeGuard && !opts.force) {
    throw std::invalid_argument("expansion in degree " + std::to_string(n) + " exceeds the guard of " +
                                std::to_string(kExpandDegreeGuard) + " (use force)");
  }
  HeckeElt h = HeckeElt::one(n);
  for (int k : r.letters()) h = mul_affine_gen(h, k);
  return h;
}

QPoly index_specialization(const HeckeElt& h) {
  QPoly sum;
  for (const auto& [w, c] : h.terms()) sum += QPoly::monomial(static_cast<std::size_t>(w.length())) * c;
  return sum;
}

QPoly sign_specialization(const HeckeElt& h) {
  QPoly sum;
  for (const auto& [w, c] : h.terms()) {
    if (w.length() % 2 == 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum;
}

}  // namespace heckewalk

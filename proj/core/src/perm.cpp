#include "heckewalk/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckewalk {

Perm::Perm(std::span<const int> word) {
  const auto n = static_cast<int>(word.size());
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("permutation degree must be in [1, " + std::to_string(kMaxDegree) + "]");
  }
  std::array<bool, kMaxDegree + 1> seen{};
  for (std::size_t i = 0; i < word.size(); ++i) {
    int v = word[i];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
    entries_[i] = static_cast<std::uint8_t>(v);
  }
  degree_ = n;
}

Perm::Perm(std::initializer_list<int> word) : Perm(std::span<const int>(word.begin(), word.size())) {}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Perm(w);
}

Perm Perm::longest_element(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.rbegin(), w.rend(), 1);
  return Perm(w);
}

std::vector<int> Perm::word() const { return {entries_.begin(), entries_.begin() + degree_}; }

Perm Perm::apply_adjacent(int k) const {
  if (k < 1 || k >= degree_) {
    throw std::out_of_range("adjacent transposition s_" + std::to_string(k) + " not in S_" +
                            std::to_string(degree_));
  }
  Perm r = *this;
  std::swap(r.entries_[static_cast<std::size_t>(k - 1)], r.entries_[static_cast<std::size_t>(k)]);
  return r;
}

int Perm::length() const {
  int count = 0;
  for (int i = 0; i < degree_; ++i)
    for (int j = i + 1; j < degree_; ++j) count += entries_[i] > entries_[j];
  return count;
}

std::vector<int> Perm::inv_sequence() const {
  std::vector<int> inv(static_cast<std::size_t>(degree_ - 1), 0);
  for (int i = 0; i + 1 < degree_; ++i)
    for (int j = i + 1; j < degree_; ++j) inv[static_cast<std::size_t>(i)] += entries_[j] < entries_[i];
  return inv;
}

Perm Perm::inverse() const {
  Perm r = *this;
  for (int i = 0; i < degree_; ++i) r.entries_[entries_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

std::vector<int> Perm::reduced_word() const {
  // Sort w back to the identity by bubbling the largest misplaced value to
  // its home position. Every swap removes one inversion, so the reversed
  // swap sequence is a reduced word for w.
  Perm cur = *this;
  std::vector<int> sorting;
  for (int v = degree_; v >= 1; --v) {
    int pos = 1;
    while (cur(pos) != v) ++pos;
    for (; pos < v; ++pos) {
      sorting.push_back(pos);
      cur = cur.apply_adjacent(pos);
    }
  }
  std::reverse(sorting.begin(), sorting.end());
  return sorting;
}

Perm Perm::pad(int m) const {
  if (m < degree_) {
    throw std::invalid_argument("cannot pad a degree-" + std::to_string(degree_) + " permutation to degree " +
                                std::to_string(m));
  }
  if (m > kMaxDegree) throw std::invalid_argument("degree exceeds " + std::to_string(kMaxDegree));
  Perm r = *this;
  for (int i = degree_; i < m; ++i) r.entries_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  r.degree_ = m;
  return r;
}

std::uint64_t Perm::code() const {
  std::uint64_t c = 0;
  for (int i = 0; i < degree_; ++i) c |= static_cast<std::uint64_t>(entries_[i] - 1) << (4 * i);
  return c;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < degree_; ++i) {
    if (i) os << ',';
    os << static_cast<int>(entries_[i]);
  }
  return os.str();
}

std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.begin() + a.degree_,
                                                b.entries_.begin(), b.entries_.begin() + b.degree_);
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<int> w(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Perm(w);
}

Perm from_word(int n, std::span<const int> word) {
  Perm w = Perm::identity(n);
  for (int k : word) w = w.apply_adjacent(k);
  return w;
}

Perm parse_perm(const std::string& text) {
  if (text.empty() || text.back() == ',') throw std::invalid_argument("malformed permutation: '" + text + "'");
  std::vector<int> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3) {
      throw std::invalid_argument("malformed permutation: '" + text + "'");
    }
    w.push_back(std::stoi(item));
  }
  return Perm(w);
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace heckewalk

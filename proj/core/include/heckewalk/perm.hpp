#pragma once

// Permutations of {1..n} in one-line notation.
//
// Convention: right multiplication by the adjacent transposition s_k
// swaps POSITIONS k and k+1, since (w s_k)(i) = w(s_k(i)). A word
// (r_1, ..., r_p) therefore denotes identity . s_{r_1} . ... . s_{r_p},
// obtained by swapping positions r_1, then r_2, and so on.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace heckewalk {

inline constexpr int kMaxDegree = 16;

class Perm {
 public:
  /// Validates that `word` is a permutation of 1..n (1 <= n <= kMaxDegree).
  /// Throws std::invalid_argument otherwise.
  explicit Perm(std::span<const int> word);
  Perm(std::initializer_list<int> word);

  static Perm identity(int n);
  /// w0 = (n, n-1, ..., 1)
  static Perm longest_element(int n);

  int degree() const { return degree_; }
  /// 1-based: value at position i.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::vector<int> word() const;

  /// w . s_k. Throws std::out_of_range unless 1 <= k <= n-1.
  Perm apply_adjacent(int k) const;
  /// True iff length(w s_k) = length(w) + 1, i.e. w_k < w_{k+1}.
  bool is_ascent(int k) const { return (*this)(k) < (*this)(k + 1); }

  int length() const;
  /// (inv_w(1), ..., inv_w(n-1)); inv_w(i) = #{j > i : w_j < w_i}.
  std::vector<int> inv_sequence() const;
  Perm inverse() const;
  /// Deterministic reduced word (r_1..r_p) with identity . s_{r_1} ... s_{r_p} = w.
  std::vector<int> reduced_word() const;
  /// Embeds into S_m by appending fixed points. Throws std::invalid_argument if m < n.
  Perm pad(int m) const;

  /// Packs four bits per entry; unique for degree <= kMaxDegree.
  std::uint64_t code() const;

  std::string to_string() const;

  friend bool operator==(const Perm& a, const Perm& b) = default;
  /// Degree first, then lexicographic on the one-line word.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

 private:
  Perm() = default;

  std::array<std::uint8_t, kMaxDegree> entries_{};
  int degree_ = 0;
};

/// Composition in the group: (a * b)(i) = a(b(i)).
Perm operator*(const Perm& a, const Perm& b);

/// Replays a word from the identity of degree n.
Perm from_word(int n, std::span<const int> word);

/// Parses "3,1,4,2". Throws std::invalid_argument on malformed input.
Perm parse_perm(const std::string& text);

/// All n! permutations of degree n in lexicographic order.
std::vector<Perm> all_perms(int n);

}  // namespace heckewalk

template <>
struct std::hash<heckewalk::Perm> {
  std::size_t operator()(const heckewalk::Perm& p) const noexcept {
    std::uint64_t x = p.code() ^ (static_cast<std::uint64_t>(p.degree()) << 58);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

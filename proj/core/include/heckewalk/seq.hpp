#pragma once

// Generator sequences r = (r_1, ..., r_l) and their combinatorics: letter
// counts, Bruhat downsets, tight sequences, commutation classes.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "heckewalk/perm.hpp"

namespace heckewalk {

class GenSequence {
 public:
  GenSequence() = default;
  /// Throws std::invalid_argument if any letter is < 1 or exceeds kMaxDegree - 1.
  explicit GenSequence(std::vector<int> letters);
  GenSequence(std::initializer_list<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Largest letter, 0 for the empty sequence.
  int max_letter() const;
  /// a_r(i): multiplicity of letter i; 0 outside the alphabet (including i <= 0).
  int count(int i) const;
  /// Smallest degree hosting every letter: max_letter() + 1.
  int min_degree() const { return max_letter() + 1; }

  GenSequence reversed() const;
  GenSequence appended(int k) const;
  bool starts_with(const GenSequence& p) const;
  bool ends_with(const GenSequence& p) const;

  std::string to_string() const;

  friend bool operator==(const GenSequence&, const GenSequence&) = default;
  friend auto operator<=>(const GenSequence& a, const GenSequence& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<int> letters_;
};

using PermSet = std::unordered_set<Perm>;

/// Parses "1,2,1,2". Throws std::invalid_argument on malformed input.
GenSequence parse_sequence(const std::string& text);

/// Multiplicity of every letter that occurs.
std::map<int, int> counts(const GenSequence& r);

/// (1, 2,1, 3,2,1, ..., n-1,...,1). Throws std::invalid_argument for n < 2.
GenSequence rho(int n);

/// {w in S_n : w is a product of a subsequence of r}.
/// Throws std::invalid_argument unless n >= max(r)+1.
PermSet downset(const GenSequence& r, int n);
/// Same set, lexicographically sorted.
std::vector<Perm> sorted_downset(const GenSequence& r, int n);

/// True iff some w in `set` has w . s_k outside `set`.
bool extension_grows(const PermSet& set, int k);

bool is_tight(const GenSequence& r);

/// All tight sequences of length l, lexicographically sorted. Throws for l < 1.
std::vector<GenSequence> enumerate_tight(int l);

/// Lexicographically least member of the commutation class of r, where
/// letters i and j commute iff |i - j| >= 2.
GenSequence foata_normal_form(const GenSequence& r);

enum class TightTag { Tight, PrefixRho, ReverseTight, SuffixRho, CommEquiv, NotCovered };

std::string to_string(TightTag tag);

struct TightClass {
  TightTag tag = TightTag::NotCovered;
  /// Whether the closed form reads inv of w^{-1} instead of w.
  bool uses_inverse = false;
  /// For CommEquiv: the commutation-equivalent member that passed a direct check.
  std::optional<GenSequence> witness;
  /// For CommEquiv: which direct check the witness passed.
  TightTag inner = TightTag::NotCovered;
  /// NotCovered because the commutation search hit its cap, not because it was exhausted.
  bool search_truncated = false;

  bool covered() const { return tag != TightTag::NotCovered; }
};

inline constexpr std::size_t kCommutationSearchCap = 1'000'000;

/// Direct checks only (no commutation search); NotCovered when none applies.
TightClass classify_direct(const GenSequence& r);

/// Tight, PrefixRho, ReverseTight, SuffixRho, then a breadth-first search of the
/// commutation class (at most `cap` members examined, the input included) for a member passing a direct check.
TightClass classify(const GenSequence& r, std::size_t cap = kCommutationSearchCap);

}  // namespace heckewalk

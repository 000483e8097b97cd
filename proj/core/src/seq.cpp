#include "heckewalk/seq.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace heckewalk {

GenSequence::GenSequence(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int k : letters_) {
    if (k < 1 || k >= kMaxDegree) {
      throw std::invalid_argument("sequence letters must lie in [1, " + std::to_string(kMaxDegree - 1) + "]");
    }
  }
}

GenSequence::GenSequence(std::initializer_list<int> letters) : GenSequence(std::vector<int>(letters)) {}

int GenSequence::max_letter() const { return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end()); }

int GenSequence::count(int i) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), i));
}

GenSequence GenSequence::reversed() const { return GenSequence(std::vector<int>(letters_.rbegin(), letters_.rend())); }

GenSequence GenSequence::appended(int k) const {
  auto l = letters_;
  l.push_back(k);
  return GenSequence(std::move(l));
}

bool GenSequence::starts_with(const GenSequence& p) const {
  return p.size() <= size() && std::equal(p.letters_.begin(), p.letters_.end(), letters_.begin());
}

bool GenSequence::ends_with(const GenSequence& p) const {
  return p.size() <= size() && std::equal(p.letters_.rbegin(), p.letters_.rend(), letters_.rbegin());
}

std::string GenSequence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ',';
    os << letters_[i];
  }
  return os.str();
}

GenSequence parse_sequence(const std::string& text) {
  if (text.empty()) return {};
  if (text.back() == ',') throw std::invalid_argument("malformed sequence: '" + text + "'");
  std::vector<int> letters;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 3 || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed sequence: '" + text + "'");
    }
    letters.push_back(std::stoi(item));
  }
  return GenSequence(std::move(letters));
}

std::map<int, int> counts(const GenSequence& r) {
  std::map<int, int> out;
  for (int k : r.letters()) ++out[k];
  return out;
}

GenSequence rho(int n) {
  if (n < 2) throw std::invalid_argument("rho(n) requires n >= 2");
  std::vector<int> letters;
  for (int top = 1; top < n; ++top)
    for (int k = top; k >= 1; --k) letters.push_back(k);
  return GenSequence(std::move(letters));
}

namespace {

void check_degree(const GenSequence& r, int n) {
  if (n < r.min_degree() || n < 1) {
    throw std::invalid_argument("degree " + std::to_string(n) + " too small for sequence with max letter " +
                                std::to_string(r.max_letter()));
  }
}

void extend(PermSet& set, int k) {
  std::vector<Perm> added;
  added.reserve(set.size());
  for (const Perm& w : set) {
    Perm u = w.apply_adjacent(k);
    if (!set.contains(u)) added.push_back(u);
  }
  set.insert(added.begin(), added.end());
}

// One admission decision of the recursive definition: may k be appended to a
// tight prefix with letter counts `cnt` (indexed by letter) whose downset grows
// by `grows` when k is appended?
bool admits(const std::vector<int>& cnt, int k, bool grows) {
  // a_r(0) does not exist, so appending 1 is always admitted.
  if (k == 1) return true;
  int prev = cnt[static_cast<std::size_t>(k - 1)] - 1;
  int cur = cnt[static_cast<std::size_t>(k)];
  if (cur > prev) return false;
  return !grows || cur == prev;
}

}  // namespace

PermSet downset(const GenSequence& r, int n) {
  check_degree(r, n);
  PermSet set{Perm::identity(n)};
  for (int k : r.letters()) extend(set, k);
  return set;
}

std::vector<Perm> sorted_downset(const GenSequence& r, int n) {
  PermSet set = downset(r, n);
  std::vector<Perm> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool extension_grows(const PermSet& set, int k) {
  return std::any_of(set.begin(), set.end(), [&](const Perm& w) { return !set.contains(w.apply_adjacent(k)); });
}

bool is_tight(const GenSequence& r) {
  if (r.empty() || r[0] != 1) return false;
  // Growth of the downset is unaffected by extra fixed points, so one degree
  // large enough for the whole sequence serves every prefix.
  const int n = r.min_degree();
  std::vector<int> cnt(static_cast<std::size_t>(n + 1), 0);
  PermSet set{Perm::identity(n)};
  for (std::size_t j = 0; j < r.size(); ++j) {
    const int k = r[j];
    const std::size_t before = set.size();
    extend(set, k);
    if (j > 0 && !admits(cnt, k, set.size() > before)) return false;
    ++cnt[static_cast<std::size_t>(k)];
  }
  return true;
}

std::vector<GenSequence> enumerate_tight(int l) {
  if (l < 1) throw std::invalid_argument("tight sequence length must be >= 1");
  // Letters of a tight sequence of length l never exceed l.
  const int n = l + 1;
  if (n > kMaxDegree) throw std::invalid_argument("tight enumeration length exceeds supported degree");

  struct Node {
    std::vector<int> letters;
    std::vector<int> cnt;
    PermSet set;
  };
  Node root{{1}, std::vector<int>(static_cast<std::size_t>(n + 1), 0), PermSet{Perm::identity(n)}};
  root.cnt[1] = 1;
  extend(root.set, 1);

  std::vector<GenSequence> out;
  std::vector<Node> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(node.letters.size()) == l) {
      out.emplace_back(std::move(node.letters));
      continue;
    }
    const int top = *std::max_element(node.letters.begin(), node.letters.end());
    for (int k = 1; k <= top + 1 && k < n; ++k) {
      PermSet next = node.set;
      extend(next, k);
      if (!admits(node.cnt, k, next.size() > node.set.size())) continue;
      Node child{node.letters, node.cnt, std::move(next)};
      child.letters.push_back(k);
      ++child.cnt[static_cast<std::size_t>(k)];
      stack.push_back(std::move(child));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GenSequence foata_normal_form(const GenSequence& r) {
  const auto& in = r.letters();
  std::vector<bool> used(in.size(), false);
  std::vector<int> out;
  out.reserve(in.size());
  for (std::size_t step = 0; step < in.size(); ++step) {
    std::size_t best = in.size();
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (used[i]) continue;
      // Available iff no earlier unused letter fails to commute with it.
      bool blocked = false;
      for (std::size_t j = 0; j < i && !blocked; ++j) {
        blocked = !used[j] && std::abs(in[j] - in[i]) < 2;
      }
      if (!blocked && (best == in.size() || in[i] < in[best])) best = i;
    }
    used[best] = true;
    out.push_back(in[best]);
  }
  return GenSequence(std::move(out));
}

std::string to_string(TightTag tag) {
  switch (tag) {
    case TightTag::Tight: return "Tight";
    case TightTag::PrefixRho: return "PrefixRho";
    case TightTag::ReverseTight: return "ReverseTight";
    case TightTag::SuffixRho: return "SuffixRho";
    case TightTag::CommEquiv: return "CommEquiv";
    case TightTag::NotCovered: return "NotCovered";
  }
  return "?";
}

TightClass classify_direct(const GenSequence& r) {
  TightClass c;
  const int n = r.min_degree();
  if (is_tight(r)) {
    c.tag = TightTag::Tight;
  } else if (n >= 2 && r.starts_with(rho(n))) {
    c.tag = TightTag::PrefixRho;
  } else if (is_tight(r.reversed())) {
    c.tag = TightTag::ReverseTight;
    c.uses_inverse = true;
  } else if (n >= 2 && r.ends_with(rho(n))) {
    c.tag = TightTag::SuffixRho;
    c.uses_inverse = true;
  }
  return c;
}

TightClass classify(const GenSequence& r, std::size_t cap) {
  TightClass direct = classify_direct(r);
  if (direct.covered()) return direct;

  auto key = [](const std::vector<int>& v) { return std::string(v.begin(), v.end()); };
  std::unordered_set<std::string> visited{key(r.letters())};
  std::deque<std::vector<int>> queue{r.letters()};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (std::abs(cur[i] - cur[i + 1]) < 2) continue;
      std::vector<int> next = cur;
      std::swap(next[i], next[i + 1]);
      if (!visited.insert(key(next)).second) continue;
      if (visited.size() > cap) {
        direct.search_truncated = true;
        return direct;
      }
      GenSequence candidate(next);
      TightClass inner = classify_direct(candidate);
      if (inner.covered()) {
        TightClass c;
        c.tag = TightTag::CommEquiv;
        c.uses_inverse = inner.uses_inverse;
        c.inner = inner.tag;
        c.witness = std::move(candidate);
        return c;
      }
      queue.push_back(std::move(next));
    }
  }
  return direct;
}

}  // namespace heckewalk

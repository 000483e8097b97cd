#include "heckewalk/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckewalk {

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly QPoly::constant(const Integer& c) { return QPoly(std::vector<Integer>{c}); }

QPoly QPoly::monomial(std::size_t d, const Integer& c) {
  std::vector<Integer> cs(d + 1);
  cs[d] = c;
  return QPoly(std::move(cs));
}

Integer QPoly::operator[](std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Integer(0); }

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Integer& c = coeffs_[d];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) os << mag.get_str();
    if (d >= 1) os << 'q';
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

QPoly q_int(unsigned i) {
  if (i == 0) throw std::domain_error("q-integer [0] is undefined");
  return QPoly(std::vector<Integer>(i, Integer(1)));
}

QPoly pow(const QPoly& base, unsigned e) {
  QPoly result = QPoly::constant(1);
  QPoly b = base;
  while (e > 0) {
    if (e & 1u) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

Rational eval(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

namespace {

Integer parse_integer(const std::string& s, const std::string& whole) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("malformed rational: '" + whole + "'");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer num = abs(parse_integer(whole, text));
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    num = num * scale + Integer(frac, 10);
    Rational r(negative ? Integer(-num) : num, scale);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace heckewalk

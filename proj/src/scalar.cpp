#include "bhopf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bhopf {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    return std::all_of(s.begin() + static_cast<long>(from), s.begin() + static_cast<long>(to),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(pos, s.size())) throw std::invalid_argument("malformed rational '" + s + "'");
  } else if (!digits(pos, slash) || !digits(slash + 1, s.size())) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  Rational r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw ArithmeticError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar scalar_op(const Scalar& a, const Scalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return a + b;
    case ScalarOp::mul: return a * b;
    case ScalarOp::conj_first: return a.conj();
    case ScalarOp::invert_first: return a.inverse();
  }
  throw std::logic_error("unknown scalar op");
}

namespace {

// term := [sign] (rational [i] | i)
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : s_(text) {}

  Scalar parse() {
    skip();
    bool parens = false;
    if (peek() == '(') {
      parens = true;
      ++pos_;
    }
    Scalar acc;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        break;
      }
      acc += Scalar(sign) * term();
      first = false;
      skip();
      if (pos_ >= s_.size() || peek() == ')') break;
    }
    skip();
    if (parens) {
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      skip();
    }
    if (pos_ != s_.size()) fail("unexpected trailing text");
    return acc;
  }

 private:
  Scalar term() {
    Rational value(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed fraction");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      value = parse_rational(s_.substr(start, pos_ - start));
      have_number = true;
      skip();
    }
    if (peek() == 'i' && !std::isalnum(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      return {Rational(0), value};
    }
    if (!have_number) fail("expected a number or 'i'");
    return Scalar(value);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed scalar '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string to_string(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  std::string imag;
  const Rational abs_im = abs(s.im());
  imag = abs_im == 1 ? "i" : to_string(abs_im) + " i";
  if (sgn(s.re()) == 0) return (sgn(s.im()) < 0 ? "-" : "") + imag;
  return to_string(s.re()) + (sgn(s.im()) < 0 ? " - " : " + ") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

TPoly::TPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(Scalar c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(k + 1);
  v[k] = std::move(c);
  return TPoly(std::move(v));
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar TPoly::eval(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

TPoly TPoly::conj() const {
  TPoly out;
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.conj());
  return out;
}

TPoly TPoly::rescale(const Scalar& c) const {
  TPoly out = *this;
  Scalar power(1);
  for (auto& k : out.coeffs_) {
    k *= power;
    power *= c;
  }
  out.trim();
  return out;
}

TPoly TPoly::operator-() const {
  TPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return TPoly(std::move(out));
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator<(const TPoly& a, const TPoly& b) {
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    Scalar c = p.coeffs()[k];
    if (c.is_zero()) continue;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string body = to_string(c);
    if (!c.is_real() && sgn(c.re()) != 0) body = "(" + body + ")";
    if (k == 0) {
      os << body;
      continue;
    }
    if (!c.is_one()) os << body << ' ';
    os << 't';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << to_string(p); }

}  // namespace bhopf

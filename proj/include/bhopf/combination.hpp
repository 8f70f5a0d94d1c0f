// Sparse TPoly-linear combinations of basis keys: elements of B (keyed by
// words) and of B^{⊗n} (keyed by n-tuples of words).
#pragma once

#include "bhopf/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bhopf {

using Gen = std::uint8_t;
using Word = std::vector<Gen>;
using Tuple = std::vector<Word>;

inline std::size_t total_degree(const Tuple& t) {
  std::size_t d = 0;
  for (const auto& w : t) d += w.size();
  return d;
}

template <class Key>
class Combination {
 public:
  using Terms = std::map<Key, TPoly>;

  Combination() = default;
  Combination(const Key& k, TPoly c = TPoly(1)) { add(k, std::move(c)); }  // NOLINT

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  TPoly coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? TPoly() : it->second;
  }

  void add(const Key& k, const TPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const Combination& o, const TPoly& scale = TPoly(1)) {
    if (scale.is_zero()) return;
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }

  Combination& operator+=(const Combination& o) {
    add(o);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    add(o, TPoly(-1));
    return *this;
  }
  Combination& operator*=(const TPoly& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  /// Coefficient-wise map; zero results are dropped.
  template <class F>
  Combination map_coeffs(F&& f) const {
    Combination out;
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  /// Highest power of t appearing in any coefficient (-1 when zero).
  int t_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, c.degree());
    return d;
  }

  friend bool operator==(const Combination& a, const Combination& b) = default;
  friend bool operator<(const Combination& a, const Combination& b) { return a.terms_ < b.terms_; }

 protected:
  Terms terms_;
};

template <class Key>
Combination<Key> operator+(Combination<Key> a, const Combination<Key>& b) {
  return a += b;
}
template <class Key>
Combination<Key> operator-(Combination<Key> a, const Combination<Key>& b) {
  return a -= b;
}
template <class Key>
Combination<Key> operator*(const TPoly& s, Combination<Key> a) {
  return a *= s;
}

using Element = Combination<Word>;

/// Element of B^{⊗rank}. Rank 0 is a bare TPoly stored under the empty tuple.
class Tensor : public Combination<Tuple> {
 public:
  explicit Tensor(std::size_t rank = 1) : rank_(rank) {}
  Tensor(std::size_t rank, const Tuple& k, TPoly c = TPoly(1)) : rank_(rank) {
    check(k);
    Combination::add(k, std::move(c));
  }

  static Tensor scalar(const TPoly& c) { return Tensor(0, Tuple{}, c); }
  static Tensor from_element(const Element& e);
  static Tensor basis(const Tuple& k, TPoly c = TPoly(1)) { return Tensor(k.size(), k, std::move(c)); }

  std::size_t rank() const { return rank_; }

  void add(const Tuple& k, const TPoly& c) {
    check(k);
    Combination::add(k, c);
  }
  void add(const Tensor& o, const TPoly& scale = TPoly(1)) {
    check_rank(o);
    Combination::add(o, scale);
  }

  Tensor& operator+=(const Tensor& o) {
    add(o);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    add(o, TPoly(-1));
    return *this;
  }
  Tensor& operator*=(const TPoly& s) {
    Combination::operator*=(s);
    return *this;
  }

  template <class F>
  Tensor map_coeffs(F&& f) const {
    Tensor out(rank_);
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  /// Value of a rank-0 tensor.
  TPoly value() const;
  /// Rank-1 tensor viewed as an element of B.
  Element to_element() const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Tuple& k) const {
    if (k.size() != rank_) throw std::invalid_argument("tensor slot count mismatch");
  }
  void check_rank(const Tensor& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("tensor rank mismatch");
  }
  std::size_t rank_;
};

inline Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
inline Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
inline Tensor operator*(const TPoly& s, Tensor a) { return a *= s; }

/// a ⊗ b.
Tensor outer(const Tensor& a, const Tensor& b);
Tensor outer(const Element& a, const Element& b);

/// Evaluates every coefficient at t = r.
Element substitute(const Element& e, const Scalar& r);
Tensor substitute(const Tensor& u, const Scalar& r);

}  // namespace bhopf

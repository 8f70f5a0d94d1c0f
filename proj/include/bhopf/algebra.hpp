// The quotient algebra B: normal forms, product, unit, involution, antipode.
#pragma once

#include "bhopf/combination.hpp"
#include "bhopf/memo.hpp"
#include "bhopf/presentation.hpp"

#include <memory>
#include <vector>

namespace bhopf {

class Algebra {
 public:
  explicit Algebra(Presentation p);

  const Presentation& presentation() const { return p_; }
  std::size_t generator_count() const { return p_.size(); }

  bool is_normal(const Word& w) const { return p_.is_normal(w); }
  /// The word modulo the ideal, expanded on normal monomials.
  Element normal_form(const Word& w) const;
  /// Renormalizes every word of e.
  Element normalize(const Element& e) const;

  Element mul(const Element& a, const Element& b) const;
  Element mul(const Word& a, const Word& b) const;
  Element unit() const { return Element(Word{}); }
  Element generator(Gen g) const { return Element(Word{g}); }

  /// Antilinear anti-multiplicative involution.
  Element involution(const Element& a) const;
  Element involution(const Word& w) const;

  Element antipode(const Element& a) const;
  /// S of an arbitrary (possibly non-normal) word, via S(g w) = μ β (S(g) ⊗ S(w)).
  Element antipode(const Word& w) const;

  TPoly counit(const Element& a) const { return a.coeff(Word{}); }

  /// Normal monomials of degree <= max_degree, by degree then lexicographically.
  const std::vector<Word>& monomials(int max_degree) const;

  /// Scalar c with beta(m ⊗ n) = c n ⊗ m; the inverse gives beta^{-1}(m ⊗ n) = c n ⊗ m.
  Scalar braid_coeff(const Word& m, const Word& n, bool inverse = false) const;
  /// True when beta^2 = id on generator pairs (then on everything).
  bool braiding_is_symmetric() const;

  unsigned degree_grade(const Word& w) const;

  /// Shared Δ cache for this algebra (filled by comul()).
  const Memo<Word, Tensor>& comul_memo() const { return comul_memo_; }

 private:
  Presentation p_;
  std::vector<std::vector<int>> rule_at_;  // rule index for (a, b) or -1
  Memo<Word, Element> normal_memo_;
  Memo<Word, Element> antipode_memo_;
  Memo<Word, Tensor> comul_memo_;
  mutable std::mutex monomial_mutex_;
  mutable std::map<int, std::vector<Word>> monomials_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace bhopf

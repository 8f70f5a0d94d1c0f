// Linear maps between tensor powers, convolution, convolution exponentials,
// the deformed product and antipode, and sesquilinear forms.
#pragma once

#include "bhopf/braid.hpp"

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace bhopf {

/// Linear map B^{⊗in} → B^{⊗out} given on basis tuples. out = 0 is a
/// functional. Maps built from an Algebra hold a reference to it.
class LinearMap {
 public:
  using BasisFn = std::function<Tensor(const Tuple&)>;

  LinearMap() = default;
  LinearMap(std::size_t in, std::size_t out, BasisFn fn, bool memoize = false);

  std::size_t in_rank() const { return impl_->in; }
  std::size_t out_rank() const { return impl_->out; }

  Tensor on_basis(const Tuple& t) const;
  Tensor operator()(const Tensor& u) const;
  /// Functional value on a basis tuple.
  TPoly value(const Tuple& t) const { return on_basis(t).value(); }
  TPoly value(const Tensor& u) const { return (*this)(u).value(); }

 private:
  struct Impl {
    std::size_t in;
    std::size_t out;
    BasisFn fn;
    std::unique_ptr<Memo<Tuple, Tensor>> memo;
  };
  std::shared_ptr<const Impl> impl_;
};

/// f ∘ g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// f ⊗ g.
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap identity_map(std::size_t rank);
/// t ↦ r in every output coefficient.
LinearMap substitute(const LinearMap& f, const Scalar& r);
/// p(t) ↦ p(c t) in every output coefficient.
LinearMap rescale_t(const LinearMap& f, const Scalar& c);
LinearMap sum(const LinearMap& f, const LinearMap& g, const TPoly& g_scale = TPoly(1));

LinearMap mul_map(const Algebra& alg);
LinearMap unit_map();  // rank 0 → rank 1
LinearMap comul_map(const Algebra& alg);
LinearMap counit_map();
LinearMap antipode_map(const Algebra& alg);
LinearMap braid_map(const Algebra& alg, std::size_t m = 1, std::size_t n = 1, bool inverse = false);
LinearMap permute_map(const std::vector<std::size_t>& p);
LinearMap lambda_map(const Algebra& alg, std::size_t n);
/// M_n : B^{⊗2n} → B^{⊗n}.
LinearMap product_map(const Algebra& alg, std::size_t n);
/// δ^{⊗n}, the convolution unit on B^{⊗n}.
LinearMap counit_power(std::size_t n);

/// Functional given by a finite support table on basis tuples.
LinearMap table_functional(std::size_t arity, std::map<Tuple, Scalar> table);
LinearMap cocycle_functional(const Presentation& p);
LinearMap monomial_functional(const std::map<Word, Scalar>& table);

/// f ⋆ g = M ∘ (f ⊗ g) ∘ Λ_n; when one factor is scalar-valued the product
/// of the two values is just their tensor product.
LinearMap convolve(const Algebra& alg, const LinearMap& f, const LinearMap& g);

/// e⋆^{sign t F} for a functional F killing the unit tuple. Evaluation on a
/// tuple of total degree d sums F^{⋆k} (± t)^k / k! for k <= d.
class ConvolutionExponential {
 public:
  ConvolutionExponential(const Algebra& alg, LinearMap functional, int sign = 1);

  TPoly operator()(const Tuple& t) const { return map_.value(t); }
  TPoly operator()(const Tensor& u) const { return map_.value(u); }
  const LinearMap& as_map() const { return map_; }
  /// F^{⋆k}, memoized.
  const LinearMap& power(std::size_t k) const;
  const LinearMap& functional() const { return f_; }
  int sign() const { return sign_; }

 private:
  const Algebra* alg_;
  LinearMap f_;
  int sign_;
  mutable std::mutex mutex_;
  mutable std::deque<LinearMap> powers_;
  LinearMap map_;
};

/// The deformation generated by a bilinear functional L.
class Deformation {
 public:
  Deformation(const Algebra& alg, LinearMap generator);
  explicit Deformation(const Algebra& alg);  // L from the presentation's cocycle table

  const Algebra& algebra() const { return *alg_; }
  const LinearMap& generator() const { return l_; }
  const ConvolutionExponential& exp_generator() const { return *exp_l_; }
  /// μ_t = μ ⋆ e⋆^{tL}.
  const LinearMap& mu_t() const { return mu_t_; }
  /// σ = L ∘ (S ⊗ id) ∘ Δ.
  const LinearMap& sigma() const { return sigma_; }
  const ConvolutionExponential& exp_sigma() const { return *exp_sigma_; }
  const ConvolutionExponential& exp_minus_sigma() const { return *exp_minus_sigma_; }
  /// S_t = S ⋆ e⋆^{-tσ}.
  const LinearMap& deformed_antipode() const { return s_t_; }

  Element mu_t(const Element& a, const Element& b) const;
  Element deformed_antipode(const Element& a) const;

 private:
  const Algebra* alg_;
  LinearMap l_;
  std::shared_ptr<ConvolutionExponential> exp_l_;
  LinearMap mu_t_;
  LinearMap sigma_;
  std::shared_ptr<ConvolutionExponential> exp_sigma_;
  std::shared_ptr<ConvolutionExponential> exp_minus_sigma_;
  LinearMap s_t_;
};

/// Form on pairs (ā, b): antilinear in the first slot, linear in the second.
class SesquiForm {
 public:
  using BasisFn = std::function<TPoly(const Word&, const Word&)>;
  explicit SesquiForm(BasisFn fn) : fn_(std::move(fn)) {}
  TPoly operator()(const Word& a, const Word& b) const { return fn_(a, b); }
  TPoly operator()(const Element& a, const Element& b) const;

 private:
  BasisFn fn_;
};

/// K̃(ā, b) = K(a* ⊗ b).
SesquiForm sesquilinearize(const Algebra& alg, const LinearMap& k);
/// Inverse of sesquilinearize: K(a ⊗ b) = K̃(a*, b).
LinearMap bilinearize(const Algebra& alg, const SesquiForm& form);
/// (P ⊛ Q)(ā, b) = Σ conj(α) β P(ā₁, b₁) Q(ā₂, b₂) over Δ(a) and Δ(b).
SesquiForm conv_sesqui(const Algebra& alg, const SesquiForm& p, const SesquiForm& q);

/// δ(a) L(b ⊗ c) - L(ab ⊗ c) + L(a ⊗ bc) - L(a ⊗ b) δ(c).
TPoly cocycle_defect(const Algebra& alg, const LinearMap& l, const Word& a, const Word& b, const Word& c);

}  // namespace bhopf

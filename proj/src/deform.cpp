#include "bhopf/deform.hpp"

namespace bhopf {

LinearMap::LinearMap(std::size_t in, std::size_t out, BasisFn fn, bool memoize) {
  auto impl = std::make_shared<Impl>();
  impl->in = in;
  impl->out = out;
  impl->fn = std::move(fn);
  if (memoize) impl->memo = std::make_unique<Memo<Tuple, Tensor>>();
  impl_ = std::move(impl);
}

Tensor LinearMap::on_basis(const Tuple& t) const {
  if (t.size() != impl_->in) throw std::invalid_argument("map arity mismatch");
  if (!impl_->memo) return impl_->fn(t);
  return impl_->memo->get(t, [&] { return impl_->fn(t); });
}

Tensor LinearMap::operator()(const Tensor& u) const {
  if (u.rank() != impl_->in) throw std::invalid_argument("map arity mismatch");
  Tensor out(impl_->out);
  for (const auto& [k, c] : u.terms()) out.add(on_basis(k), c);
  return out;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.in_rank() != g.out_rank()) throw std::invalid_argument("composition rank mismatch");
  return LinearMap(g.in_rank(), f.out_rank(), [f, g](const Tuple& t) { return f(g.on_basis(t)); });
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  const std::size_t split = f.in_rank();
  return LinearMap(f.in_rank() + g.in_rank(), f.out_rank() + g.out_rank(), [f, g, split](const Tuple& t) {
    const Tensor a = f.on_basis(Tuple(t.begin(), t.begin() + static_cast<long>(split)));
    if (a.is_zero()) return Tensor(f.out_rank() + g.out_rank());
    return outer(a, g.on_basis(Tuple(t.begin() + static_cast<long>(split), t.end())));
  });
}

LinearMap identity_map(std::size_t rank) {
  return LinearMap(rank, rank, [](const Tuple& t) { return Tensor::basis(t); });
}

LinearMap substitute(const LinearMap& f, const Scalar& r) {
  return LinearMap(f.in_rank(), f.out_rank(), [f, r](const Tuple& t) { return substitute(f.on_basis(t), r); });
}

LinearMap rescale_t(const LinearMap& f, const Scalar& c) {
  return LinearMap(f.in_rank(), f.out_rank(), [f, c](const Tuple& t) {
    return f.on_basis(t).map_coeffs([&](const TPoly& p) { return p.rescale(c); });
  });
}

LinearMap sum(const LinearMap& f, const LinearMap& g, const TPoly& g_scale) {
  if (f.in_rank() != g.in_rank() || f.out_rank() != g.out_rank())
    throw std::invalid_argument("sum of maps with different shapes");
  return LinearMap(f.in_rank(), f.out_rank(), [f, g, g_scale](const Tuple& t) {
    Tensor out = f.on_basis(t);
    out.add(g.on_basis(t), g_scale);
    return out;
  });
}

LinearMap mul_map(const Algebra& alg) {
  return LinearMap(2, 1, [&alg](const Tuple& t) { return Tensor::from_element(alg.mul(t[0], t[1])); });
}

LinearMap unit_map() {
  return LinearMap(0, 1, [](const Tuple&) { return Tensor(1, Tuple{Word{}}); });
}

LinearMap comul_map(const Algebra& alg) {
  return LinearMap(1, 2, [&alg](const Tuple& t) { return comul(alg, t[0]); });
}

LinearMap counit_map() {
  return LinearMap(1, 0, [](const Tuple& t) { return t[0].empty() ? Tensor::scalar(TPoly(1)) : Tensor(0); });
}

LinearMap antipode_map(const Algebra& alg) {
  return LinearMap(1, 1, [&alg](const Tuple& t) { return Tensor::from_element(alg.antipode(t[0])); });
}

LinearMap braid_map(const Algebra& alg, std::size_t m, std::size_t n, bool inverse) {
  return LinearMap(m + n, m + n,
                   [&alg, m, n, inverse](const Tuple& t) { return braid_mn(alg, Tensor::basis(t), m, n, inverse); });
}

LinearMap permute_map(const std::vector<std::size_t>& p) {
  return LinearMap(p.size(), p.size(), [p](const Tuple& t) { return permute(Tensor::basis(t), p); });
}

LinearMap lambda_map(const Algebra& alg, std::size_t n) {
  return LinearMap(n, 2 * n, [&alg](const Tuple& t) { return lambda(alg, Tensor::basis(t)); }, true);
}

LinearMap product_map(const Algebra& alg, std::size_t n) {
  return LinearMap(2 * n, n, [&alg, n](const Tuple& t) { return braided_product_map(alg, Tensor::basis(t), n); });
}

LinearMap counit_power(std::size_t n) {
  return LinearMap(n, 0, [](const Tuple& t) {
    for (const auto& w : t)
      if (!w.empty()) return Tensor(0);
    return Tensor::scalar(TPoly(1));
  });
}

LinearMap table_functional(std::size_t arity, std::map<Tuple, Scalar> table) {
  auto shared = std::make_shared<const std::map<Tuple, Scalar>>(std::move(table));
  return LinearMap(arity, 0, [shared](const Tuple& t) {
    auto it = shared->find(t);
    return it == shared->end() ? Tensor(0) : Tensor::scalar(TPoly(it->second));
  });
}

LinearMap cocycle_functional(const Presentation& p) {
  std::map<Tuple, Scalar> table;
  for (const auto& [key, c] : p.cocycle) table[Tuple{key.first, key.second}] = c;
  return table_functional(2, std::move(table));
}

LinearMap monomial_functional(const std::map<Word, Scalar>& table) {
  std::map<Tuple, Scalar> out;
  for (const auto& [w, c] : table) out[Tuple{w}] = c;
  return table_functional(1, std::move(out));
}

LinearMap convolve(const Algebra& alg, const LinearMap& f, const LinearMap& g) {
  if (f.in_rank() != g.in_rank()) throw std::invalid_argument("convolution of maps on different spaces");
  const std::size_t n = f.in_rank();
  const std::size_t mf = f.out_rank();
  const std::size_t mg = g.out_rank();
  if (mf != 0 && mg != 0 && mf != mg) throw std::invalid_argument("convolution target mismatch");
  const LinearMap split = lambda_map(alg, n);
  const LinearMap both = tensor(f, g);
  const bool multiply = mf != 0 && mg != 0;
  return LinearMap(
      n, multiply ? mf : mf + mg,
      [&alg, split, both, multiply, mf](const Tuple& t) {
        const Tensor v = both(split.on_basis(t));
        return multiply ? braided_product_map(alg, v, mf) : v;
      },
      true);
}

ConvolutionExponential::ConvolutionExponential(const Algebra& alg, LinearMap functional, int sign)
    : alg_(&alg), f_(std::move(functional)), sign_(sign) {
  if (f_.out_rank() != 0) throw std::invalid_argument("exponential needs a scalar-valued functional");
  if (sign != 1 && sign != -1) throw std::invalid_argument("exponential sign must be +1 or -1");
  const std::size_t n = f_.in_rank();
  if (!f_.value(Tuple(n, Word{})).is_zero())
    throw std::domain_error("functional does not vanish on the unit tuple; the series does not terminate");
  powers_.push_back(counit_power(n));
  map_ = LinearMap(
      n, 0,
      [this](const Tuple& t) {
        const std::size_t d = total_degree(t);
        TPoly acc;
        Rational factorial(1);
        for (std::size_t k = 0; k <= d; ++k) {
          if (k > 0) factorial *= static_cast<long>(k);
          const TPoly term = power(k).value(t);
          if (term.is_zero()) continue;
          const Scalar coef = Scalar(Rational(k % 2 == 1 && sign_ < 0 ? -1 : 1) / factorial);
          acc += term * TPoly::monomial(coef, k);
        }
        return Tensor::scalar(acc);
      },
      true);
}

const LinearMap& ConvolutionExponential::power(std::size_t k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (powers_.size() <= k) powers_.push_back(convolve(*alg_, powers_.back(), f_));
  return powers_[k];
}

Deformation::Deformation(const Algebra& alg, LinearMap generator) : alg_(&alg), l_(std::move(generator)) {
  exp_l_ = std::make_shared<ConvolutionExponential>(alg, l_, 1);
  mu_t_ = convolve(alg, mul_map(alg), exp_l_->as_map());
  sigma_ = LinearMap(
      1, 0,
      [a = alg_, l = l_](const Tuple& t) { return Tensor::scalar(l.value(antipode_at(*a, comul(*a, t[0]), 0))); },
      true);
  exp_sigma_ = std::make_shared<ConvolutionExponential>(alg, sigma_, 1);
  exp_minus_sigma_ = std::make_shared<ConvolutionExponential>(alg, sigma_, -1);
  s_t_ = convolve(alg, antipode_map(alg), exp_minus_sigma_->as_map());
}

Deformation::Deformation(const Algebra& alg) : Deformation(alg, cocycle_functional(alg.presentation())) {}

Element Deformation::mu_t(const Element& a, const Element& b) const { return mu_t_(outer(a, b)).to_element(); }

Element Deformation::deformed_antipode(const Element& a) const {
  return s_t_(Tensor::from_element(a)).to_element();
}

TPoly SesquiForm::operator()(const Element& a, const Element& b) const {
  TPoly acc;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) acc += ca.conj() * cb * fn_(wa, wb);
  return acc;
}

SesquiForm sesquilinearize(const Algebra& alg, const LinearMap& k) {
  return SesquiForm([&alg, k](const Word& a, const Word& b) {
    return k.value(outer(alg.involution(a), Element(b)));
  });
}

LinearMap bilinearize(const Algebra& alg, const SesquiForm& form) {
  return LinearMap(2, 0, [&alg, form](const Tuple& t) {
    return Tensor::scalar(form(alg.involution(t[0]), Element(t[1])));
  });
}

SesquiForm conv_sesqui(const Algebra& alg, const SesquiForm& p, const SesquiForm& q) {
  return SesquiForm([&alg, p, q](const Word& a, const Word& b) {
    const Tensor da = comul(alg, a);
    const Tensor db = comul(alg, b);
    TPoly acc;
    for (const auto& [ka, ca] : da.terms())
      for (const auto& [kb, cb] : db.terms()) {
        const TPoly left = p(ka[0], kb[0]);
        if (left.is_zero()) continue;
        acc += ca.conj() * cb * left * q(ka[1], kb[1]);
      }
    return acc;
  });
}

TPoly cocycle_defect(const Algebra& alg, const LinearMap& l, const Word& a, const Word& b, const Word& c) {
  TPoly out;
  if (a.empty()) out += l.value(Tuple{b, c});
  out -= l.value(outer(alg.mul(a, b), Element(c)));
  out += l.value(outer(Element(a), alg.mul(b, c)));
  if (c.empty()) out -= l.value(Tuple{a, b});
  return out;
}

}  // namespace bhopf

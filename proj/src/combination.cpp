#include "bhopf/combination.hpp"

namespace bhopf {

Tensor Tensor::from_element(const Element& e) {
  Tensor out(1);
  for (const auto& [w, c] : e.terms()) out.add(Tuple{w}, c);
  return out;
}

TPoly Tensor::value() const {
  if (rank_ != 0) throw std::invalid_argument("value() needs a rank-0 tensor");
  return coeff(Tuple{});
}

Element Tensor::to_element() const {
  if (rank_ != 1) throw std::invalid_argument("to_element() needs a rank-1 tensor");
  Element out;
  for (const auto& [k, c] : terms_) out.add(k[0], c);
  return out;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  Tensor out(a.rank() + b.rank());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Tuple k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(k, ca * cb);
    }
  return out;
}

Tensor outer(const Element& a, const Element& b) {
  return outer(Tensor::from_element(a), Tensor::from_element(b));
}

Element substitute(const Element& e, const Scalar& r) {
  return e.map_coeffs([&](const TPoly& c) { return TPoly(c.eval(r)); });
}

Tensor substitute(const Tensor& u, const Scalar& r) {
  return u.map_coeffs([&](const TPoly& c) { return TPoly(c.eval(r)); });
}

}  // namespace bhopf

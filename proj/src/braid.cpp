#include "bhopf/braid.hpp"

#include <algorithm>

namespace bhopf {

Tensor braid_pair(const Algebra& alg, const Word& m, const Word& n, bool inverse) {
  return Tensor(2, Tuple{n, m}, TPoly(alg.braid_coeff(m, n, inverse)));
}

Tensor map_slots(const Tensor& u, std::size_t offset, std::size_t count, std::size_t width, const BlockFn& fn) {
  if (offset + count > u.rank()) throw std::invalid_argument("slot range exceeds tensor rank");
  Tensor out(u.rank() - count + width);
  for (const auto& [k, c] : u.terms()) {
    const Tuple block(k.begin() + static_cast<long>(offset), k.begin() + static_cast<long>(offset + count));
    const Tensor image = fn(block);
    if (image.rank() != width) throw std::logic_error("block map returned the wrong rank");
    for (const auto& [ik, ic] : image.terms()) {
      Tuple key(k.begin(), k.begin() + static_cast<long>(offset));
      key.insert(key.end(), ik.begin(), ik.end());
      key.insert(key.end(), k.begin() + static_cast<long>(offset + count), k.end());
      out.add(key, c * ic);
    }
  }
  return out;
}

Tensor braid_at(const Algebra& alg, const Tensor& u, std::size_t slot, bool inverse) {
  return map_slots(u, slot, 2, 2, [&](const Tuple& t) { return braid_pair(alg, t[0], t[1], inverse); });
}

Tensor braid_mn(const Algebra& alg, const Tensor& u, std::size_t m, std::size_t n, bool inverse,
                std::size_t offset) {
  if (offset + m + n > u.rank()) throw std::invalid_argument("braid block exceeds tensor rank");
  // The inverse of beta_{m,n} is the beta^{-1} family with the blocks swapped.
  const std::size_t left = inverse ? n : m;
  const std::size_t right = inverse ? m : n;
  if (left == 0 || right == 0) return u;
  if (left == 1) {
    const Tensor first = braid_at(alg, u, offset, inverse);
    return inverse ? braid_mn(alg, first, right - 1, 1, true, offset + 1)
                   : braid_mn(alg, first, 1, right - 1, false, offset + 1);
  }
  const Tensor last = inverse ? braid_mn(alg, u, right, 1, true, offset + left - 1)
                              : braid_mn(alg, u, 1, right, false, offset + left - 1);
  return inverse ? braid_mn(alg, last, right, left - 1, true, offset)
                 : braid_mn(alg, last, left - 1, right, false, offset);
}

Tensor permute(const Tensor& u, const std::vector<std::size_t>& p) {
  if (p.size() != u.rank()) throw std::invalid_argument("permutation arity mismatch");
  std::vector<std::size_t> check = p;
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k)
    if (check[k] != k) throw std::invalid_argument("not a permutation");
  Tensor out(u.rank());
  for (const auto& [k, c] : u.terms()) {
    Tuple key(k.size());
    for (std::size_t i = 0; i < p.size(); ++i) key[i] = k[p[i]];
    out.add(key, c);
  }
  return out;
}

Tensor mul_at(const Algebra& alg, const Tensor& u, std::size_t slot) {
  return map_slots(u, slot, 2, 1, [&](const Tuple& t) { return Tensor::from_element(alg.mul(t[0], t[1])); });
}

Tensor braided_product_map(const Algebra& alg, const Tensor& u, std::size_t n) {
  if (u.rank() != 2 * n) throw std::invalid_argument("braided product needs a rank-2n tensor");
  if (n == 0) return u;
  if (n == 1) return mul_at(alg, u, 0);
  Tensor v = braid_mn(alg, u, n - 1, 1, false, 1);
  v = mul_at(alg, v, 0);
  return map_slots(v, 1, 2 * n - 2, n - 1,
                   [&](const Tuple& t) { return braided_product_map(alg, Tensor::basis(t), n - 1); });
}

Tensor braided_product(const Algebra& alg, const Tensor& u, const Tensor& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("braided product rank mismatch");
  return braided_product_map(alg, outer(u, v), u.rank());
}

Tensor comul(const Algebra& alg, const Word& w) {
  if (w.empty()) return Tensor(2, Tuple{Word{}, Word{}});
  return alg.comul_memo().get(w, [&] {
    const Word g{w[0]};
    Tensor head(2, Tuple{g, Word{}});
    head.add(Tuple{Word{}, g}, TPoly(1));
    if (w.size() == 1) return head;
    return braided_product(alg, head, comul(alg, Word(w.begin() + 1, w.end())));
  });
}

Tensor comul(const Algebra& alg, const Element& a) {
  Tensor out(2);
  for (const auto& [w, c] : a.terms()) out.add(comul(alg, w), c);
  return out;
}

Tensor comul_at(const Algebra& alg, const Tensor& u, std::size_t slot) {
  return map_slots(u, slot, 1, 2, [&](const Tuple& t) { return comul(alg, t[0]); });
}

Tensor comul_iter(const Algebra& alg, const Element& a, std::size_t n) {
  if (n == 0) throw std::invalid_argument("iterated comultiplication needs n >= 1");
  Tensor out = Tensor::from_element(a);
  for (std::size_t k = 1; k < n; ++k) out = comul_at(alg, out, 0);
  return out;
}

namespace {

Tensor lambda_basis(const Algebra& alg, const Tuple& t) {
  const std::size_t n = t.size();
  if (n == 0) return Tensor::scalar(TPoly(1));
  if (n == 1) return comul(alg, t[0]);
  const Tensor rest = lambda_basis(alg, Tuple(t.begin() + 1, t.end()));
  return braid_mn(alg, outer(comul(alg, t[0]), rest), 1, n - 1, false, 1);
}

}  // namespace

Tensor lambda(const Algebra& alg, const Tensor& u) {
  return map_slots(u, 0, u.rank(), 2 * u.rank(), [&](const Tuple& t) { return lambda_basis(alg, t); });
}

Tensor counit_at(const Tensor& u, std::size_t slot) {
  return map_slots(u, slot, 1, 0, [](const Tuple& t) {
    return t[0].empty() ? Tensor::scalar(TPoly(1)) : Tensor(0);
  });
}

Tensor antipode_at(const Algebra& alg, const Tensor& u, std::size_t slot) {
  return map_slots(u, slot, 1, 1, [&](const Tuple& t) { return Tensor::from_element(alg.antipode(t[0])); });
}

Tensor star_slots(const Algebra& alg, const Tensor& u) {
  Tensor out(u.rank());
  for (const auto& [k, c] : u.terms()) {
    Tensor image = Tensor::scalar(c.conj());
    for (const auto& w : k) image = outer(image, Tensor::from_element(alg.involution(w)));
    out.add(image);
  }
  return out;
}

Tensor star_tensor(const Algebra& alg, const Tensor& u) {
  if (u.rank() != 2) throw std::invalid_argument("tensor-square involution needs rank 2");
  return braid_at(alg, star_slots(alg, permute(u, {1, 0})), 0);
}

std::vector<Tuple> basis_tuples(const Algebra& alg, std::size_t arity, int max_degree) {
  const auto& mons = alg.monomials(max_degree);
  std::vector<Tuple> out;
  Tuple current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int budget) {
    if (slot == arity) {
      out.push_back(current);
      return;
    }
    for (const auto& m : mons) {
      if (static_cast<int>(m.size()) > budget) break;
      current.push_back(m);
      rec(slot + 1, budget - static_cast<int>(m.size()));
      current.pop_back();
    }
  };
  rec(0, max_degree);
  return out;
}

}  // namespace bhopf

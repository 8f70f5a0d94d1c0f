// Tensor powers of B: braidings, slot permutations, braided products,
// comultiplications and the tensor-square involution.
#pragma once

#include "bhopf/algebra.hpp"

#include <functional>
#include <vector>

namespace bhopf {

/// beta (or beta^{-1}) of the basis pair m ⊗ n.
Tensor braid_pair(const Algebra& alg, const Word& m, const Word& n, bool inverse = false);
/// beta on slots (slot, slot + 1).
Tensor braid_at(const Algebra& alg, const Tensor& u, std::size_t slot, bool inverse = false);
/// beta_{m,n} on slots [offset, offset + m + n) by the inductive definition.
/// With `inverse`, applies (beta^{-1})_{n,m}, the inverse of beta_{m,n}; its
/// input then has the n-block first.
Tensor braid_mn(const Algebra& alg, const Tensor& u, std::size_t m, std::size_t n, bool inverse = false,
                std::size_t offset = 0);

/// Output slot i receives input slot p[i].
Tensor permute(const Tensor& u, const std::vector<std::size_t>& p);

/// Replaces slots [offset, offset + count) by fn(those slots), a tensor of rank `width`.
using BlockFn = std::function<Tensor(const Tuple&)>;
Tensor map_slots(const Tensor& u, std::size_t offset, std::size_t count, std::size_t width, const BlockFn& fn);

/// μ on slots (slot, slot + 1).
Tensor mul_at(const Algebra& alg, const Tensor& u, std::size_t slot);
/// M_n on a rank-2n tensor (the product of its two halves in B^{⊗n}).
Tensor braided_product_map(const Algebra& alg, const Tensor& u, std::size_t n);
Tensor braided_product(const Algebra& alg, const Tensor& u, const Tensor& v);

Tensor comul(const Algebra& alg, const Word& w);
Tensor comul(const Algebra& alg, const Element& a);
/// Δ on slot `slot`.
Tensor comul_at(const Algebra& alg, const Tensor& u, std::size_t slot);
/// Iterated comultiplication into B^{⊗n}; n >= 1.
Tensor comul_iter(const Algebra& alg, const Element& a, std::size_t n);
/// Λ_n : B^{⊗n} → B^{⊗2n}.
Tensor lambda(const Algebra& alg, const Tensor& u);

/// δ on slot `slot` (drops the slot).
Tensor counit_at(const Tensor& u, std::size_t slot);
/// S on slot `slot`.
Tensor antipode_at(const Algebra& alg, const Tensor& u, std::size_t slot);
/// * on every slot (antilinear), slot order unchanged.
Tensor star_slots(const Algebra& alg, const Tensor& u);

/// beta ∘ (* ⊗ *) ∘ tau on B ⊗ B.
Tensor star_tensor(const Algebra& alg, const Tensor& u);

/// Every tuple of `arity` normal monomials with total degree <= max_degree.
std::vector<Tuple> basis_tuples(const Algebra& alg, std::size_t arity, int max_degree);

}  // namespace bhopf

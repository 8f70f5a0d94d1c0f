#include "bhopf/verify.hpp"

#include <set>

namespace bhopf {

struct CheckContext {
  const Algebra& alg;
  const Deformation& def;
  int degree;

  const Presentation& pres() const { return alg.presentation(); }
  const std::vector<Tuple>& tuples(std::size_t arity) const {
    auto it = cache.find(arity);
    if (it == cache.end()) it = cache.emplace(arity, basis_tuples(alg, arity, degree)).first;
    return it->second;
  }
  mutable std::map<std::size_t, std::vector<Tuple>> cache;
};

namespace {

using TensorFn = std::function<Tensor(const Tuple&)>;

const std::vector<Rational>& grid() {
  static const std::vector<Rational> values = {Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  return values;
}

Tensor basis(const Tuple& t) { return Tensor::basis(t); }
Tensor elem(const Element& e) { return Tensor::from_element(e); }
Tensor value(const TPoly& p) { return Tensor::scalar(p); }
Tensor unit_times_counit(const Word& w) { return w.empty() ? Tensor(1, Tuple{Word{}}) : Tensor(1); }

Report pass(const CheckContext& ctx, const std::string& id) { return Report{id, Status::pass, ctx.degree, {}, ""}; }

Report failure(const CheckContext& ctx, const std::string& id, const std::string& input, const Tensor& lhs,
               const Tensor& rhs, const std::string& note) {
  Report r{id, Status::fail, ctx.degree, std::nullopt, ""};
  r.witness = Witness{input, format(ctx.pres(), lhs), format(ctx.pres(), rhs), note};
  r.message = note.empty() ? "identity fails" : note;
  return r;
}

// First tuple on which lhs and rhs differ, or nullopt.
std::optional<Report> compare_on(const CheckContext& ctx, const std::string& id, const std::vector<Tuple>& inputs,
                                 const TensorFn& lhs, const TensorFn& rhs, const std::string& note = "") {
  for (const auto& t : inputs) {
    const Tensor a = lhs(t);
    const Tensor b = rhs(t);
    if (!(a == b)) return failure(ctx, id, format_tuple(ctx.pres(), t), a, b, note);
  }
  return std::nullopt;
}

std::optional<Report> compare(const CheckContext& ctx, const std::string& id, std::size_t arity, const TensorFn& lhs,
                              const TensorFn& rhs, const std::string& note = "") {
  return compare_on(ctx, id, ctx.tuples(arity), lhs, rhs, note);
}

// Runs the sub-identities in order and reports the first failure.
Report all_of(const CheckContext& ctx, const std::string& id,
              std::initializer_list<std::function<std::optional<Report>()>> parts) {
  for (const auto& part : parts)
    if (auto r = part()) return *r;
  return pass(ctx, id);
}

Tensor slots_map(const Tensor& u, std::size_t offset, const LinearMap& f) {
  return map_slots(u, offset, f.in_rank(), f.out_rank(), [&](const Tuple& t) { return f.on_basis(t); });
}

Tensor eval_at(const Tensor& u, const Rational& r) { return substitute(u, Scalar(r)); }

std::string at_point(const Rational& t, const Rational& s) {
  return "at t = " + to_string(t) + ", s = " + to_string(s);
}

bool cocommutative(const CheckContext& ctx) {
  for (const auto& t : ctx.tuples(1)) {
    const Tensor d = comul(ctx.alg, t[0]);
    if (!(braid_at(ctx.alg, d, 0) == d)) return false;
  }
  return true;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](std::string id, std::string description, bool dependent, CheckRunner run) {
    c.push_back({std::move(id), std::move(description), dependent, std::move(run)});
  };

  add("confluence", "every overlap word has a unique normal form", false,
      [](const CheckContext& ctx) { return check_confluence(ctx.pres()); });
  add("quotient", "relations span a braided Hopf ideal (coideal, counit, braiding, antipode)", false,
      [](const CheckContext& ctx) { return check_quotient_compatibility(ctx.pres(), ctx.degree); });

  add("associativity", "mu(mu(a,b),c) = mu(a,mu(b,c))", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    return all_of(ctx, "associativity", {[&] {
                    return compare(
                        ctx, "associativity", 3, [&](const Tuple& t) { return elem(A.mul(A.mul(t[0], t[1]), Element(t[2]))); },
                        [&](const Tuple& t) { return elem(A.mul(Element(t[0]), A.mul(t[1], t[2]))); });
                  }});
  });

  add("involution", "* is an involutive anti-homomorphism", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const std::string id = "involution";
    return all_of(ctx, id,
                  {[&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return elem(A.involution(A.involution(t[0]))); }, basis,
                         "** = id");
                   },
                   [&] {
                     return compare(
                         ctx, id, 2, [&](const Tuple& t) { return elem(A.involution(A.mul(t[0], t[1]))); },
                         [&](const Tuple& t) { return elem(A.mul(A.involution(t[1]), A.involution(t[0]))); },
                         "(ab)* = b* a*");
                   }});
  });

  add("antipode", "mu (S ⊗ id) Delta = 1 delta = mu (id ⊗ S) Delta", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const std::string id = "antipode";
    auto unit = [](const Tuple& t) { return unit_times_counit(t[0]); };
    return all_of(ctx, id,
                  {[&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return mul_at(A, antipode_at(A, comul(A, t[0]), 0), 0); },
                         unit, "left antipode identity");
                   },
                   [&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return mul_at(A, antipode_at(A, comul(A, t[0]), 1), 0); },
                         unit, "right antipode identity");
                   }});
  });

  add("antipode-square", "S^2 = id when Delta is cocommutative", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    if (!cocommutative(ctx)) return Report{"antipode-square", Status::skipped, ctx.degree, {}, "not cocommutative"};
    return all_of(ctx, "antipode-square", {[&] {
                    return compare(
                        ctx, "antipode-square", 1, [&](const Tuple& t) { return elem(A.antipode(A.antipode(t[0]))); },
                        basis);
                  }});
  });

  add("braid-equation", "(beta ⊗ id)(id ⊗ beta)(beta ⊗ id) = (id ⊗ beta)(beta ⊗ id)(id ⊗ beta)", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        return all_of(ctx, "braid-equation", {[&] {
                        return compare(
                            ctx, "braid-equation", 3,
                            [&](const Tuple& t) { return braid_at(A, braid_at(A, braid_at(A, basis(t), 0), 1), 0); },
                            [&](const Tuple& t) { return braid_at(A, braid_at(A, braid_at(A, basis(t), 1), 0), 1); });
                      }});
      });

  add("braid-inverse", "beta_{m,n} followed by its inverse is the identity", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const std::string id = "braid-inverse";
    for (std::size_t rank = 2; rank <= 4; ++rank)
      for (std::size_t m = 1; m < rank; ++m) {
        const std::size_t n = rank - m;
        auto r = compare(
            ctx, id, rank, [&](const Tuple& t) { return braid_mn(A, braid_mn(A, basis(t), m, n), m, n, true); }, basis,
            "beta_{" + std::to_string(m) + "," + std::to_string(n) + "}");
        if (r) return *r;
      }
    return all_of(ctx, id, {[&] {
                    return compare(
                        ctx, id, 2, [&](const Tuple& t) { return braid_at(A, braid_at(A, basis(t), 0, true), 0); },
                        basis, "beta beta^{-1} = id");
                  }});
  });

  add("beta-mu", "beta (id ⊗ mu) = (mu ⊗ id) beta_{1,2} and beta (mu ⊗ id) = (id ⊗ mu) beta_{2,1}", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const std::string id = "beta-mu";
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 3, [&](const Tuple& t) { return braid_at(A, mul_at(A, basis(t), 1), 0); },
                             [&](const Tuple& t) { return mul_at(A, braid_mn(A, basis(t), 1, 2), 0); });
                       },
                       [&] {
                         return compare(
                             ctx, id, 3, [&](const Tuple& t) { return braid_at(A, mul_at(A, basis(t), 0), 0); },
                             [&](const Tuple& t) { return mul_at(A, braid_mn(A, basis(t), 2, 1), 1); });
                       }});
      });

  add("beta-unit", "beta(1 ⊗ a) = a ⊗ 1 and beta(a ⊗ 1) = 1 ⊗ a", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const std::string id = "beta-unit";
    return all_of(ctx, id,
                  {[&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return braid_pair(A, Word{}, t[0]); },
                         [&](const Tuple& t) { return basis(Tuple{t[0], Word{}}); });
                   },
                   [&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return braid_pair(A, t[0], Word{}); },
                         [&](const Tuple& t) { return basis(Tuple{Word{}, t[0]}); });
                   }});
  });

  add("beta-comul", "(Delta ⊗ id) beta = beta_{1,2} (id ⊗ Delta) and (id ⊗ Delta) beta = beta_{2,1} (Delta ⊗ id)",
      false, [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const std::string id = "beta-comul";
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 2, [&](const Tuple& t) { return comul_at(A, braid_at(A, basis(t), 0), 0); },
                             [&](const Tuple& t) { return braid_mn(A, comul_at(A, basis(t), 1), 1, 2); });
                       },
                       [&] {
                         return compare(
                             ctx, id, 2, [&](const Tuple& t) { return comul_at(A, braid_at(A, basis(t), 0), 1); },
                             [&](const Tuple& t) { return braid_mn(A, comul_at(A, basis(t), 0), 2, 1); });
                       }});
      });

  add("beta-counit", "(delta ⊗ id) beta = id ⊗ delta and (id ⊗ delta) beta = delta ⊗ id", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const std::string id = "beta-counit";
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 2, [&](const Tuple& t) { return counit_at(braid_at(A, basis(t), 0), 0); },
                             [&](const Tuple& t) { return counit_at(basis(t), 1); });
                       },
                       [&] {
                         return compare(
                             ctx, id, 2, [&](const Tuple& t) { return counit_at(braid_at(A, basis(t), 0), 1); },
                             [&](const Tuple& t) { return counit_at(basis(t), 0); });
                       }});
      });

  add("beta-antipode", "(S ⊗ id) beta = beta (id ⊗ S) and (id ⊗ S) beta = beta (S ⊗ id)", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const std::string id = "beta-antipode";
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 2, [&](const Tuple& t) { return antipode_at(A, braid_at(A, basis(t), 0), 0); },
                             [&](const Tuple& t) { return braid_at(A, antipode_at(A, basis(t), 1), 0); });
                       },
                       [&] {
                         return compare(
                             ctx, id, 2, [&](const Tuple& t) { return antipode_at(A, braid_at(A, basis(t), 0), 1); },
                             [&](const Tuple& t) { return braid_at(A, antipode_at(A, basis(t), 0), 0); });
                       }});
      });

  add("bialgebra", "Delta mu = (mu ⊗ mu)(id ⊗ beta ⊗ id)(Delta ⊗ Delta)", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    return all_of(ctx, "bialgebra", {[&] {
                    return compare(
                        ctx, "bialgebra", 2, [&](const Tuple& t) { return comul(A, A.mul(t[0], t[1])); },
                        [&](const Tuple& t) {
                          const Tensor x = braid_at(A, outer(comul(A, t[0]), comul(A, t[1])), 1);
                          return mul_at(A, mul_at(A, x, 0), 1);
                        });
                  }});
  });

  add("coassociativity", "(Delta ⊗ id) Delta = (id ⊗ Delta) Delta", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    return all_of(ctx, "coassociativity", {[&] {
                    return compare(
                        ctx, "coassociativity", 1, [&](const Tuple& t) { return comul_at(A, comul(A, t[0]), 0); },
                        [&](const Tuple& t) { return comul_at(A, comul(A, t[0]), 1); });
                  }});
  });

  add("counit", "(delta ⊗ id) Delta = id = (id ⊗ delta) Delta", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const std::string id = "counit";
    return all_of(ctx, id,
                  {[&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return counit_at(comul(A, t[0]), 0); }, basis);
                   },
                   [&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return counit_at(comul(A, t[0]), 1); }, basis);
                   }});
  });

  add("cocommutativity", "beta Delta = Delta", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    return all_of(ctx, "cocommutativity", {[&] {
                    return compare(
                        ctx, "cocommutativity", 1, [&](const Tuple& t) { return braid_at(A, comul(A, t[0]), 0); },
                        [&](const Tuple& t) { return comul(A, t[0]); });
                  }});
  });

  add("star-tensor", "the involution beta (* ⊗ *) tau of B ⊗ B squares to the identity", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        return all_of(ctx, "star-tensor", {[&] {
                        return compare(
                            ctx, "star-tensor", 2, [&](const Tuple& t) { return star_tensor(A, star_tensor(A, basis(t))); },
                            basis);
                      }});
      });

  add("star-comul", "Delta(a*) = (Delta a)* in B ⊗ B", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    return all_of(ctx, "star-comul", {[&] {
                    return compare(
                        ctx, "star-comul", 1, [&](const Tuple& t) { return comul(A, A.involution(t[0])); },
                        [&](const Tuple& t) { return star_tensor(A, comul(A, t[0])); });
                  }});
  });

  add("braiding-reconstruction", "beta = (mu ⊗ mu)(S ⊗ Delta mu ⊗ S)(Delta ⊗ Delta)", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        return all_of(ctx, "braiding-reconstruction", {[&] {
                        return compare(
                            ctx, "braiding-reconstruction", 2, [&](const Tuple& t) { return braid_at(A, basis(t), 0); },
                            [&](const Tuple& t) {
                              Tensor x = outer(comul(A, t[0]), comul(A, t[1]));
                              x = antipode_at(A, antipode_at(A, x, 0), 3);
                              x = map_slots(x, 1, 2, 2, [&](const Tuple& k) { return comul(A, A.mul(k[0], k[1])); });
                              return mul_at(A, mul_at(A, x, 0), 1);
                            });
                      }});
      });

  add("antipode-braided", "S mu = mu beta (S ⊗ S) and Delta S = (S ⊗ S) beta Delta", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const std::string id = "antipode-braided";
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 2, [&](const Tuple& t) { return elem(A.antipode(A.mul(t[0], t[1]))); },
                             [&](const Tuple& t) {
                               return mul_at(A, braid_at(A, antipode_at(A, antipode_at(A, basis(t), 0), 1), 0), 0);
                             });
                       },
                       [&] {
                         return compare(
                             ctx, id, 1, [&](const Tuple& t) { return comul(A, A.antipode(t[0])); },
                             [&](const Tuple& t) {
                               return antipode_at(A, antipode_at(A, braid_at(A, comul(A, t[0]), 0), 0), 1);
                             });
                       }});
      });

  add("beta-L", "L is beta-invariant: (L ⊗ id) beta_{1,2} = id ⊗ L and (id ⊗ L) beta_{2,1} = L ⊗ id", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const auto& L = ctx.def.generator();
        const std::string id = "beta-L";
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 3, [&](const Tuple& t) { return slots_map(braid_mn(A, basis(t), 1, 2), 0, L); },
                             [&](const Tuple& t) { return slots_map(basis(t), 1, L); });
                       },
                       [&] {
                         return compare(
                             ctx, id, 3, [&](const Tuple& t) { return slots_map(braid_mn(A, basis(t), 2, 1), 1, L); },
                             [&](const Tuple& t) { return slots_map(basis(t), 0, L); });
                       }});
      });

  add("L-commutes", "L ⋆ mu = mu ⋆ L", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& L = ctx.def.generator();
    const LinearMap left = convolve(A, L, mul_map(A));
    const LinearMap right = convolve(A, mul_map(A), L);
    return all_of(ctx, "L-commutes", {[&] {
                    return compare(
                        ctx, "L-commutes", 2, [&](const Tuple& t) { return left.on_basis(t); },
                        [&](const Tuple& t) { return right.on_basis(t); });
                  }});
  });

  add("L-unit", "L(1 ⊗ 1) = 0", false, [](const CheckContext& ctx) {
    const Tuple unit{Word{}, Word{}};
    const TPoly v = ctx.def.generator().value(unit);
    if (v.is_zero()) return pass(ctx, "L-unit");
    return failure(ctx, "L-unit", format_tuple(ctx.pres(), unit), value(v), value(TPoly()), "");
  });

  add("cocycle", "coboundary of L vanishes on all triples", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& L = ctx.def.generator();
    return all_of(ctx, "cocycle", {[&] {
                    return compare(
                        ctx, "cocycle", 3, [&](const Tuple& t) { return value(cocycle_defect(A, L, t[0], t[1], t[2])); },
                        [](const Tuple&) { return value(TPoly()); }, "coboundary defect");
                  }});
  });

  add("L-hermitian", "L(a* ⊗ b*) = conj L(b ⊗ a)", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& L = ctx.def.generator();
    return all_of(ctx, "L-hermitian", {[&] {
                    return compare(
                        ctx, "L-hermitian", 2,
                        [&](const Tuple& t) { return value(L.value(outer(A.involution(t[0]), A.involution(t[1])))); },
                        [&](const Tuple& t) { return value(L.value(Tuple{t[1], t[0]}).conj()); });
                  }});
  });

  add("exp-nilpotency", "F^{⋆n} vanishes beyond the total degree (F = L, sigma)", false, [](const CheckContext& ctx) {
    const std::string id = "exp-nilpotency";
    auto beyond = [](const ConvolutionExponential& e) {
      return [&e](const Tuple& t) { return value(e.power(total_degree(t) + 1).value(t)); };
    };
    auto zero = [](const Tuple&) { return value(TPoly()); };
    return all_of(ctx, id,
                  {[&] { return compare(ctx, id, 2, beyond(ctx.def.exp_generator()), zero, "L"); },
                   [&] { return compare(ctx, id, 1, beyond(ctx.def.exp_sigma()), zero, "sigma"); }});
  });

  add("mu_t-unit", "mu_t(1 ⊗ a) = a = mu_t(a ⊗ 1) and mu_0 = mu", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& mt = ctx.def.mu_t();
    const std::string id = "mu_t-unit";
    return all_of(ctx, id,
                  {[&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return mt.on_basis(Tuple{Word{}, t[0]}); }, basis);
                   },
                   [&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return mt.on_basis(Tuple{t[0], Word{}}); }, basis);
                   },
                   [&] {
                     return compare(
                         ctx, id, 2, [&](const Tuple& t) { return eval_at(mt.on_basis(t), Rational(0)); },
                         [&](const Tuple& t) { return elem(A.mul(t[0], t[1])); }, "mu_0 = mu");
                   }});
  });

  add("mu_t-associativity", "mu_t (mu_t ⊗ id) = mu_t (id ⊗ mu_t) as polynomials in t", true,
      [](const CheckContext& ctx) {
        const auto& mt = ctx.def.mu_t();
        return all_of(ctx, "mu_t-associativity", {[&] {
                        return compare(
                            ctx, "mu_t-associativity", 3,
                            [&](const Tuple& t) { return slots_map(slots_map(basis(t), 0, mt), 0, mt); },
                            [&](const Tuple& t) { return slots_map(slots_map(basis(t), 1, mt), 0, mt); });
                      }});
      });

  add("exp-associativity-intermediate", "(e^{tL} (id ⊗ mu)) ⋆ (delta ⊗ e^{tL}) = (e^{tL} (mu ⊗ id)) ⋆ (e^{tL} ⊗ delta)", true,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const LinearMap& e = ctx.def.exp_generator().as_map();
        const LinearMap left = convolve(A, compose(e, tensor(identity_map(1), mul_map(A))), tensor(counit_map(), e));
        const LinearMap right = convolve(A, compose(e, tensor(mul_map(A), identity_map(1))), tensor(e, counit_map()));
        return all_of(ctx, "exp-associativity-intermediate", {[&] {
                        return compare(
                            ctx, "exp-associativity-intermediate", 3, [&](const Tuple& t) { return left.on_basis(t); },
                            [&](const Tuple& t) { return right.on_basis(t); });
                      }});
      });

  add("mu_t-beta", "mu_t is beta-compatible", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& mt = ctx.def.mu_t();
    const std::string id = "mu_t-beta";
    return all_of(ctx, id,
                  {[&] {
                     return compare(
                         ctx, id, 3, [&](const Tuple& t) { return braid_at(A, slots_map(basis(t), 1, mt), 0); },
                         [&](const Tuple& t) { return slots_map(braid_mn(A, basis(t), 1, 2), 0, mt); });
                   },
                   [&] {
                     return compare(
                         ctx, id, 3, [&](const Tuple& t) { return braid_at(A, slots_map(basis(t), 0, mt), 0); },
                         [&](const Tuple& t) { return slots_map(braid_mn(A, basis(t), 2, 1), 1, mt); });
                   }});
  });

  add("deformation-law", "Delta mu_{t+s} = (mu_t ⊗ mu_s)(id ⊗ beta ⊗ id)(Delta ⊗ Delta) on a 5 x 5 grid", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const auto& mt = ctx.def.mu_t();
        const std::string id = "deformation-law";
        for (const auto& t : ctx.tuples(2)) {
          const Tensor lhs_formal = comul_at(A, mt.on_basis(t), 0);
          const Tensor crossed = braid_at(A, outer(comul(A, t[0]), comul(A, t[1])), 1);
          for (const auto& tv : grid())
            for (const auto& sv : grid()) {
              const Tensor lhs = eval_at(lhs_formal, tv + sv);
              Tensor rhs = map_slots(crossed, 0, 2, 1, [&](const Tuple& k) { return eval_at(mt.on_basis(k), tv); });
              rhs = map_slots(rhs, 1, 2, 1, [&](const Tuple& k) { return eval_at(mt.on_basis(k), sv); });
              if (!(lhs == rhs)) return failure(ctx, id, format_tuple(ctx.pres(), t), lhs, rhs, at_point(tv, sv));
            }
        }
        return pass(ctx, id);
      });

  add("semigroup", "e^{tL} ⋆ e^{sL} = e^{(t+s)L} on a 5 x 5 grid", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& e = ctx.def.exp_generator();
    const std::string id = "semigroup";
    for (const auto& t : ctx.tuples(2)) {
      const TPoly formal = e(t);
      const Tensor split = lambda(A, basis(t));
      for (const auto& tv : grid())
        for (const auto& sv : grid()) {
          const Scalar lhs = tpoly_eval(formal, tv + sv);
          Scalar rhs;
          for (const auto& [k, c] : split.terms())
            rhs += c.constant_term() * tpoly_eval(e(Tuple{k[0], k[1]}), tv) * tpoly_eval(e(Tuple{k[2], k[3]}), sv);
          if (!(lhs == rhs))
            return failure(ctx, id, format_tuple(ctx.pres(), t), value(TPoly(lhs)), value(TPoly(rhs)), at_point(tv, sv));
        }
    }
    return pass(ctx, id);
  });

  add("generator-recovery", "delta mu_t = e^{tL}", false, [](const CheckContext& ctx) {
    const auto& mt = ctx.def.mu_t();
    const auto& e = ctx.def.exp_generator();
    return all_of(ctx, "generator-recovery", {[&] {
                    return compare(
                        ctx, "generator-recovery", 2, [&](const Tuple& t) { return counit_at(mt.on_basis(t), 0); },
                        [&](const Tuple& t) { return value(e(t)); });
                  }});
  });

  add("star-deformation", "mu_t(a* ⊗ b*) = mu_t(b ⊗ a)*", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& D = ctx.def;
    return all_of(ctx, "star-deformation", {[&] {
                    return compare(
                        ctx, "star-deformation", 2,
                        [&](const Tuple& t) { return elem(D.mu_t(A.involution(t[0]), A.involution(t[1]))); },
                        [&](const Tuple& t) { return elem(A.involution(D.mu_t(Element(t[1]), Element(t[0])))); });
                  }});
  });

  add("expL-hermitian", "e^{tL} is hermitian at t = 1/2, 1, 2", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& e = ctx.def.exp_generator();
    for (const Rational& tv : {Rational(1, 2), Rational(1), Rational(2)}) {
      auto r = compare(
          ctx, "expL-hermitian", 2,
          [&](const Tuple& t) { return value(TPoly(e(outer(A.involution(t[0]), A.involution(t[1]))).eval(tv))); },
          [&](const Tuple& t) { return value(TPoly(e(Tuple{t[1], t[0]}).eval(tv).conj())); },
          "at t = " + to_string(tv));
      if (r) return *r;
    }
    return pass(ctx, "expL-hermitian");
  });

  add("primitive-formula", "mu_t(a ⊗ b) = ab + t L(a ⊗ b) 1 for primitive a, b", false, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& L = ctx.def.generator();
    std::vector<Tuple> pairs;
    for (std::size_t g = 0; g < A.generator_count(); ++g)
      for (std::size_t h = 0; h < A.generator_count(); ++h)
        pairs.push_back(Tuple{Word{static_cast<Gen>(g)}, Word{static_cast<Gen>(h)}});
    return all_of(ctx, "primitive-formula", {[&] {
                    return compare_on(
                        ctx, "primitive-formula", pairs, [&](const Tuple& t) { return ctx.def.mu_t().on_basis(t); },
                        [&](const Tuple& t) {
                          Element e = A.mul(t[0], t[1]);
                          e.add(Word{}, L.value(t) * TPoly::t());
                          return elem(e);
                        });
                  }});
  });

  add("sigma-symmetric", "L (id ⊗ S) Delta = L (S ⊗ id) Delta", true, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& L = ctx.def.generator();
    return all_of(ctx, "sigma-symmetric", {[&] {
                    return compare(
                        ctx, "sigma-symmetric", 1,
                        [&](const Tuple& t) { return value(L.value(antipode_at(A, comul(A, t[0]), 1))); },
                        [&](const Tuple& t) { return ctx.def.sigma().on_basis(t); });
                  }});
  });

  add("sigma-central", "sigma ⋆ id = id ⋆ sigma and e^{t sigma} ⋆ id = id ⋆ e^{t sigma}", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const std::string id = "sigma-central";
        const LinearMap& s = ctx.def.sigma();
        const LinearMap& f = ctx.def.exp_sigma().as_map();
        const LinearMap a1 = convolve(A, s, identity_map(1));
        const LinearMap b1 = convolve(A, identity_map(1), s);
        const LinearMap a2 = convolve(A, f, identity_map(1));
        const LinearMap b2 = convolve(A, identity_map(1), f);
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 1, [&](const Tuple& t) { return a1.on_basis(t); },
                             [&](const Tuple& t) { return b1.on_basis(t); }, "sigma");
                       },
                       [&] {
                         return compare(
                             ctx, id, 1, [&](const Tuple& t) { return a2.on_basis(t); },
                             [&](const Tuple& t) { return b2.on_basis(t); }, "exponential");
                       }});
      });

  add("Ft-agreement", "e^{tL} (S ⊗ id) Delta = e^{t sigma} = e^{tL} (id ⊗ S) Delta", true, [](const CheckContext& ctx) {
    const auto& A = ctx.alg;
    const auto& e = ctx.def.exp_generator();
    const auto& f = ctx.def.exp_sigma();
    const std::string id = "Ft-agreement";
    auto target = [&](const Tuple& t) { return value(f(t)); };
    return all_of(ctx, id,
                  {[&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return value(e(antipode_at(A, comul(A, t[0]), 0))); }, target,
                         "left");
                   },
                   [&] {
                     return compare(
                         ctx, id, 1, [&](const Tuple& t) { return value(e(antipode_at(A, comul(A, t[0]), 1))); }, target,
                         "right");
                   }});
  });

  add("deformed-antipode", "mu_t (id ⊗ S_t) Delta = 1 delta = mu_t (S_t ⊗ id) Delta", true,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const auto& mt = ctx.def.mu_t();
        const auto& st = ctx.def.deformed_antipode();
        const std::string id = "deformed-antipode";
        auto unit = [](const Tuple& t) { return unit_times_counit(t[0]); };
        return all_of(ctx, id,
                      {[&] {
                         return compare(
                             ctx, id, 1, [&](const Tuple& t) { return slots_map(slots_map(comul(A, t[0]), 1, st), 0, mt); },
                             unit, "right");
                       },
                       [&] {
                         return compare(
                             ctx, id, 1, [&](const Tuple& t) { return slots_map(slots_map(comul(A, t[0]), 0, st), 0, mt); },
                             unit, "left");
                       }});
      });

  add("deformed-antipode-corollary",
      "S_t(1) = 1; S_t mu_{-t} = mu_t (S_t ⊗ S_t) beta; Delta S_{t+r} = (S_t ⊗ S_r) beta Delta; "
      "S_t S_{-t} = id if cocommutative; S_{-t} * S_t * = id",
      true, [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const auto& mt = ctx.def.mu_t();
        const auto& st = ctx.def.deformed_antipode();
        const LinearMap m_neg = rescale_t(mt, Scalar(-1));
        const LinearMap s_neg = rescale_t(st, Scalar(-1));
        const std::string id = "deformed-antipode-corollary";
        const bool cocomm = cocommutative(ctx);
        auto star = [&](const Tensor& u) { return star_slots(A, u); };
        return all_of(
            ctx, id,
            {[&] {
               const std::vector<Tuple> unit{Tuple{Word{}}};
               return compare_on(
                   ctx, id, unit, [&](const Tuple& t) { return st.on_basis(t); }, basis, "(i) S_t(1) = 1");
             },
             [&] {
               return compare(
                   ctx, id, 2, [&](const Tuple& t) { return st(m_neg.on_basis(t)); },
                   [&](const Tuple& t) {
                     return mt(slots_map(slots_map(braid_at(A, basis(t), 0), 0, st), 1, st));
                   },
                   "(ii) S_t mu_{-t} = mu_t (S_t ⊗ S_t) beta");
             },
             [&]() -> std::optional<Report> {
               for (const auto& t : ctx.tuples(1)) {
                 const Tensor lhs_formal = comul_at(A, st.on_basis(t), 0);
                 const Tensor crossed = braid_at(A, comul(A, t[0]), 0);
                 for (const auto& tv : grid())
                   for (const auto& rv : grid()) {
                     const Tensor lhs = eval_at(lhs_formal, tv + rv);
                     Tensor rhs = map_slots(crossed, 0, 1, 1, [&](const Tuple& k) { return eval_at(st.on_basis(k), tv); });
                     rhs = map_slots(rhs, 1, 1, 1, [&](const Tuple& k) { return eval_at(st.on_basis(k), rv); });
                     if (!(lhs == rhs))
                       return failure(ctx, id, format_tuple(ctx.pres(), t), lhs, rhs,
                                      "(iii) Delta S_{t+r} = (S_t ⊗ S_r) beta Delta at t = " + to_string(tv) +
                                          ", r = " + to_string(rv));
                   }
               }
               return std::nullopt;
             },
             [&]() -> std::optional<Report> {
               if (!cocomm) return std::nullopt;
               return compare(
                   ctx, id, 1, [&](const Tuple& t) { return st(s_neg.on_basis(t)); }, basis, "(iv) S_t S_{-t} = id");
             },
             [&] {
               return compare(
                   ctx, id, 1, [&](const Tuple& t) { return s_neg(star(st(star(basis(t))))); }, basis,
                   "(v) S_{-t} * S_t * = id");
             }});
      });

  add("sesqui-convolution", "sesquilinearization turns ⋆ into the conjugate-coalgebra convolution", false,
      [](const CheckContext& ctx) {
        const auto& A = ctx.alg;
        const auto& L = ctx.def.generator();
        const std::string id = "sesqui-convolution";
        const LinearMap e1 = substitute(ctx.def.exp_generator().as_map(), Scalar(1));
        const std::vector<std::pair<std::string, std::pair<LinearMap, LinearMap>>> cases = {
            {"M = L, K = L", {L, L}}, {"M = e^{L} (t = 1), K = L", {e1, L}}};
        for (const auto& [label, mk] : cases) {
          const SesquiForm lhs = sesquilinearize(A, convolve(A, mk.first, mk.second));
          const SesquiForm rhs = conv_sesqui(A, sesquilinearize(A, mk.first), sesquilinearize(A, mk.second));
          auto r = compare(
              ctx, id, 2, [&](const Tuple& t) { return value(lhs(t[0], t[1])); },
              [&](const Tuple& t) { return value(rhs(t[0], t[1])); }, label);
          if (r) return *r;
        }
        return pass(ctx, id);
      });

  add("schoenberg-zero", "psi = 0: L conditionally positive and delta a state on B_t for t in {0, 1/2, 1, 2}", false,
      [](const CheckContext& ctx) {
        const std::vector<Rational> samples = {Rational(0), Rational(1, 2), Rational(1), Rational(2)};
        Report r = schoenberg_check(ctx.alg, {}, ctx.degree, samples).report;
        r.id = "schoenberg-zero";
        return r;
      });

  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<Report> run_catalog(const Presentation& p, const std::vector<std::string>& ids, int max_degree) {
  const auto& entries = catalog();
  std::set<std::string> wanted(ids.begin(), ids.end());
  for (const auto& id : wanted) {
    bool known = false;
    for (const auto& e : entries) known = known || e.id == id;
    if (!known) throw std::invalid_argument("unknown check id '" + id + "'");
  }
  const Algebra alg(p);
  std::unique_ptr<Deformation> def;
  std::vector<Report> out;
  bool certified = true;
  for (const auto& e : entries) {
    if (!wanted.empty() && !wanted.count(e.id)) continue;
    const bool structural = e.id == "confluence" || e.id == "quotient";
    if (!certified && !structural) {
      out.push_back(Report{e.id, Status::skipped, max_degree, std::nullopt, "presentation not certified"});
      continue;
    }
    if (!def && !structural) def = std::make_unique<Deformation>(alg);
    const Deformation* dp = def.get();
    std::unique_ptr<Deformation> placeholder;
    if (!dp) {
      placeholder = std::make_unique<Deformation>(alg);
      dp = placeholder.get();
    }
    CheckContext ctx{alg, *dp, max_degree, {}};
    Report r;
    try {
      r = e.run(ctx);
    } catch (const std::exception& ex) {
      r = Report{e.id, Status::fail, max_degree, Witness{"", "", "", ex.what()}, std::string("error: ") + ex.what()};
    }
    if (structural && r.status == Status::fail) certified = false;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bhopf

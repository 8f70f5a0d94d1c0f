// Small worked values for individual operations.
#include "support.hpp"

#include <doctest.h>

using namespace bhopf;

namespace {

struct Car {
  Algebra alg{testing::load("car.alg")};
  Deformation def{alg};
  const Presentation& p = alg.presentation();
  Word x = testing::word(p, "x");
  Word xs = testing::word(p, "xs");
  Word xxs = testing::word(p, "x xs");
};

}  // namespace

TEST_CASE("scalar operations") {
  const Scalar a = parse_scalar("1/2 + i");
  CHECK(scalar_op(a, parse_scalar("1/2 - i"), ScalarOp::mul) == Scalar(Rational(5, 4)));
  CHECK(scalar_op(Scalar(3), Scalar(), ScalarOp::conj_first) == Scalar(3));
  CHECK(scalar_op(Scalar::i(), Scalar(), ScalarOp::invert_first) == -Scalar::i());
  CHECK(tpoly_eval(TPoly::t(), Rational(1, 2)) == Scalar(Rational(1, 2)));
  CHECK(tpoly_eval(TPoly{Scalar(-1), Scalar(0)}, Rational(7)) == Scalar(-1));
  CHECK(tpoly_eval(TPoly{Scalar(0), Scalar(-1), Scalar(1)}, Rational(2)) == Scalar(2));
}

TEST_CASE("braiding of basis pairs") {
  Car c;
  CHECK(braid_pair(c.alg, c.x, c.xs) == Tensor::basis({c.xs, c.x}, TPoly(-1)));
  CHECK(braid_pair(c.alg, Word{}, c.x) == Tensor::basis({c.x, Word{}}));
  CHECK(braid_pair(c.alg, c.xxs, c.x) == Tensor::basis({c.x, c.xxs}));
  const Tensor xxx = Tensor::basis({c.x, c.x, c.x});
  CHECK(braid_mn(c.alg, xxx, 1, 2) == xxx);
  CHECK(braid_mn(c.alg, xxx, 1, 0) == xxx);
  const Algebra q(load_presentation(testing::fixture("q.alg"), Scalar(2)));
  CHECK_THROWS(braid_mn(q, Tensor::basis({c.x}), 1, 1));
}

TEST_CASE("slot permutations") {
  Car c;
  CHECK(permute(Tensor::basis({c.x, c.xs}), {1, 0}) == Tensor::basis({c.xs, c.x}));
  const Tuple abcd{c.x, c.xs, c.xxs, Word{}};
  CHECK(permute(Tensor::basis(abcd), {2, 3, 0, 1}) == Tensor::basis({c.xxs, Word{}, c.x, c.xs}));
  CHECK(permute(Tensor::basis({c.x, Word{}, Word{}, c.xs}), {3, 1, 2, 0}) ==
        Tensor::basis({c.xs, Word{}, Word{}, c.x}));
  CHECK_THROWS(permute(Tensor::basis({c.x, c.xs}), {0}));
}

TEST_CASE("braided products and comultiplication") {
  Car c;
  const Word xx = testing::word(c.p, "x x");
  CHECK(braided_product(c.alg, Tensor::basis({c.x, Word{}}), Tensor::basis({Word{}, c.x})) ==
        Tensor::basis({c.x, c.x}));
  CHECK(braided_product(c.alg, Tensor::basis({Word{}, c.x}), Tensor::basis({c.x, Word{}})) ==
        Tensor::basis({c.x, c.x}, TPoly(-1)));
  CHECK(braided_product(c.alg, Tensor::basis({c.xs}), Tensor::basis({c.x})) ==
        Tensor::from_element(c.alg.mul(c.xs, c.x)));
  CHECK_THROWS(braided_product(c.alg, Tensor::basis({c.x}), Tensor::basis({c.x, c.x})));

  CHECK(comul(c.alg, c.x) == Tensor::basis({c.x, Word{}}) + Tensor::basis({Word{}, c.x}));
  CHECK(comul(c.alg, xx) == Tensor::basis({xx, Word{}}) + Tensor::basis({Word{}, xx}));
  CHECK(comul_iter(c.alg, testing::elem(c.p, "x"), 3) ==
        Tensor::basis({c.x, Word{}, Word{}}) + Tensor::basis({Word{}, c.x, Word{}}) +
            Tensor::basis({Word{}, Word{}, c.x}));
  CHECK(comul_iter(c.alg, c.alg.unit(), 3) == Tensor::basis({Word{}, Word{}, Word{}}));
  const Tensor d = comul(c.alg, c.xxs);
  CHECK(comul_at(c.alg, d, 0) == comul_at(c.alg, d, 1));

  CHECK(c.alg.counit(c.alg.unit()) == TPoly(1));
  CHECK(c.alg.counit(testing::elem(c.p, "x xs")).is_zero());
  CHECK(c.alg.counit(testing::elem(c.p, "3 + 2 x xs")) == TPoly(3));
}

TEST_CASE("tensor square involution") {
  Car c;
  CHECK(star_tensor(c.alg, Tensor::basis({Word{}, Word{}})) == Tensor::basis({Word{}, Word{}}));
  for (const auto& t : basis_tuples(c.alg, 2, 4))
    CHECK(star_tensor(c.alg, star_tensor(c.alg, Tensor::basis(t))) == Tensor::basis(t));
  CHECK_THROWS(star_tensor(c.alg, Tensor::basis({c.x})));
}

TEST_CASE("functionals and their convolutions") {
  Car c;
  const LinearMap& l = c.def.generator();
  CHECK(l.value(Tuple{c.xs, c.x}) == TPoly(1));
  CHECK(l.value(Tuple{c.x, c.xs}).is_zero());
  CHECK(l.value(Tuple{Word{}, c.xxs}).is_zero());
  CHECK_THROWS(l.value(Tuple{c.x}));

  const LinearMap delta = counit_map();
  CHECK(convolve(c.alg, delta, delta).value(Tuple{c.x}).is_zero());
  CHECK(convolve(c.alg, delta, delta).value(Tuple{Word{}}) == TPoly(1));
  CHECK(convolve(c.alg, l, l).value(Tuple{c.xs, c.x}).is_zero());
  CHECK_THROWS(convolve(c.alg, l, delta));

  const LinearMap mul = mul_map(c.alg);
  const LinearMap commutator = sum(convolve(c.alg, l, mul), convolve(c.alg, mul, l), TPoly(-1));
  for (const auto& t : basis_tuples(c.alg, 2, 4)) CHECK(commutator.on_basis(t).is_zero());

  const ConvolutionExponential& e = c.def.exp_generator();
  CHECK(e(Tuple{c.xs, c.x}) == TPoly::t());
  CHECK(e(Tuple{Word{}, Word{}}) == TPoly(1));
  CHECK(e(Tuple{c.x, Word{}}).is_zero());
  CHECK(e(Tuple{Word{}, c.xs}).is_zero());
}

TEST_CASE("deformed product, sigma and deformed antipode") {
  Car c;
  for (const auto& m : c.alg.monomials(4)) {
    CHECK(c.def.mu_t(c.alg.unit(), Element(m)) == Element(m));
    CHECK(c.def.mu_t(Element(m), c.alg.unit()) == Element(m));
  }
  const LinearMap id = identity_map(1);
  CHECK(convolve(c.alg, antipode_map(c.alg), id).on_basis(Tuple{c.x}).is_zero());
  for (const auto& m : c.alg.monomials(3))
    CHECK(convolve(c.alg, id, counit_map()).on_basis(Tuple{m}) == Tensor::basis(Tuple{m}));
  const LinearMap s_t = convolve(c.alg, antipode_map(c.alg), c.def.exp_minus_sigma().as_map());
  CHECK(s_t.on_basis(Tuple{c.xxs}) == Tensor::from_element(testing::elem(c.p, "x xs")) +
                                         Tensor::basis(Tuple{Word{}}, TPoly{Scalar(0), Scalar(-1)}));

  const LinearMap& sigma = c.def.sigma();
  CHECK(sigma.value(Tuple{c.x}).is_zero());
  CHECK(sigma.value(Tuple{c.xs}).is_zero());
  CHECK(sigma.value(Tuple{c.xxs}) == TPoly(1));
  CHECK(sigma.value(Tuple{Word{}}).is_zero());
  CHECK(c.def.deformed_antipode(c.alg.unit()) == c.alg.unit());
}

TEST_CASE("sesquilinear convolution") {
  Car c;
  const SesquiForm lt = sesquilinearize(c.alg, c.def.generator());
  CHECK(lt(c.x, c.x) == TPoly(1));
  CHECK(lt(c.xs, c.xs).is_zero());

  const SesquiForm dt = sesquilinearize(c.alg, counit_power(2));
  CHECK(conv_sesqui(c.alg, dt, dt)(Word{}, Word{}) == TPoly(1));
  const SesquiForm mu_l = conv_sesqui(c.alg, sesquilinearize(c.alg, compose(counit_map(), mul_map(c.alg))), lt);
  const SesquiForm direct =
      sesquilinearize(c.alg, convolve(c.alg, compose(counit_map(), mul_map(c.alg)), c.def.generator()));
  CHECK(mu_l(c.x, c.x) == direct(c.x, c.x));
  CHECK(conv_sesqui(c.alg, lt, lt)(c.x, c.x).is_zero());
  CHECK(conv_sesqui(c.alg, lt, lt)(c.x, c.x) ==
        sesquilinearize(c.alg, convolve(c.alg, c.def.generator(), c.def.generator()))(c.x, c.x));

  const std::map<Word, Scalar> psi{{c.xxs, Scalar(1)}};
  const LinearMap k = sum(compose(monomial_functional(psi), mul_map(c.alg)), c.def.generator());
  const SesquiForm kt = sesquilinearize(c.alg, k);
  for (const auto& b : c.alg.monomials(3)) {
    const TPoly v = kt(b, b);
    CHECK(v == v.conj());
  }
}

TEST_CASE("cocycle defect spot values") {
  Car c;
  CHECK(cocycle_defect(c.alg, c.def.generator(), c.x, c.xs, c.x).is_zero());
  for (const auto& t : basis_tuples(c.alg, 2, 3))
    CHECK(cocycle_defect(c.alg, c.def.generator(), Word{}, t[0], t[1]).is_zero());
}

TEST_CASE("verification spot values") {
  CHECK(psd_exact(HermitianMatrix({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0)}})).psd);

  const auto bad = run_catalog(testing::load("car-badL.alg"), {"cocycle"}, 4);
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].status == Status::fail);
  REQUIRE(bad[0].witness);
  CHECK(bad[0].witness->input == "x ⊗ x ⊗ xs xs");

  const auto free = run_catalog(testing::load("free2.alg"), {"braid-equation"}, 3);
  CHECK(free.at(0).status == Status::pass);

  const auto a = run_catalog(testing::load("car.alg"), {}, 2);
  const auto b = run_catalog(testing::load("car.alg"), {}, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].status == b[k].status);
    CHECK(a[k].witness == b[k].witness);
  }

  const Word x{0};
  const QnogoResult minus = qnogo_eval(Scalar(-1), Rational(1));
  CHECK(minus.equal);
  CHECK(minus.lhs == Tensor::basis({Word{}, x}));
  const QnogoResult one = qnogo_eval(Scalar(1), Rational(3));
  CHECK(one.lhs == Tensor::basis({Word{}, x}, TPoly(3)));
  CHECK(one.rhs == one.lhs);
}

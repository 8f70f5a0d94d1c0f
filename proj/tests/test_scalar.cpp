#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace bhopf;

namespace {

// Independent int64 fraction arithmetic.
struct Frac {
  long n = 0;
  long d = 1;
  Frac(long num = 0, long den = 1) : n(num), d(den) {
    if (d < 0) n = -n, d = -d;
    const long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  friend Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
  friend Frac operator-(Frac a, Frac b) { return {a.n * b.d - b.n * a.d, a.d * b.d}; }
  friend Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }
  friend Frac operator/(Frac a, Frac b) { return {a.n * b.d, a.d * b.n}; }
};

struct Gauss {
  Frac re, im;
};

Gauss g_mul(Gauss a, Gauss b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Gauss g_inv(Gauss a) {
  const Frac norm = a.re * a.re + a.im * a.im;
  return {a.re / norm, Frac(0) - a.im / norm};
}

Scalar to_scalar(Gauss g) { return Scalar(Rational(g.re.n, g.re.d), Rational(g.im.n, g.im.d)); }

Gauss random_gauss() {
  return {Frac(testing::uniform(-6, 6), testing::uniform(1, 5)), Frac(testing::uniform(-6, 6), testing::uniform(1, 5))};
}

}  // namespace

TEST_CASE("gaussian rational arithmetic matches int64 fractions") {
  for (int k = 0; k < 2000; ++k) {
    const Gauss a = random_gauss();
    const Gauss b = random_gauss();
    const Scalar sa = to_scalar(a);
    const Scalar sb = to_scalar(b);
    CHECK(sa + sb == to_scalar({a.re + b.re, a.im + b.im}));
    CHECK(sa - sb == to_scalar({a.re - b.re, a.im - b.im}));
    CHECK(sa * sb == to_scalar(g_mul(a, b)));
    CHECK(sa.conj() == to_scalar({a.re, Frac(0) - a.im}));
    if (!sb.is_zero()) {
      CHECK(sb.inverse() == to_scalar(g_inv(b)));
      CHECK((sa / sb) * sb == sa);
    }
  }
}

TEST_CASE("inverse of zero throws") { CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError); }

TEST_CASE("scalar parse and print round trip") {
  CHECK(parse_scalar("3/6") == Scalar(Rational(1, 2)));
  CHECK(parse_scalar("i") == Scalar::i());
  CHECK(parse_scalar("-i") == -Scalar::i());
  CHECK(parse_scalar("2 i") == Scalar(Rational(0), Rational(2)));
  CHECK(parse_scalar("(1/2 - 3 i)") == Scalar(Rational(1, 2), Rational(-3)));
  CHECK(to_string(Scalar(Rational(-2, 4))) == "-1/2");
  for (int k = 0; k < 500; ++k) {
    const Scalar s = to_scalar(random_gauss());
    CHECK(parse_scalar(to_string(s)) == s);
  }
  CHECK_THROWS(parse_scalar("1/0"));
  CHECK_THROWS(parse_scalar("abc"));
}

TEST_CASE("polynomial product and evaluation against direct sums") {
  for (int k = 0; k < 300; ++k) {
    std::vector<Scalar> a(testing::uniform(0, 4)), b(testing::uniform(0, 4));
    for (auto& c : a) c = to_scalar(random_gauss());
    for (auto& c : b) c = to_scalar(random_gauss());
    const TPoly pa(a), pb(b);
    const Scalar at = to_scalar(random_gauss());
    auto direct = [&](const std::vector<Scalar>& cs) {
      Scalar acc, power(1);
      for (const auto& c : cs) {
        acc += c * power;
        power *= at;
      }
      return acc;
    };
    CHECK((pa * pb).eval(at) == direct(a) * direct(b));
    CHECK((pa + pb).eval(at) == direct(a) + direct(b));
    CHECK(pa.rescale(Scalar(-1)).eval(at) == pa.eval(-at));
    CHECK(pa.rescale(Scalar(3)).eval(at) == pa.eval(Scalar(3) * at));
    CHECK(pa.conj().eval(at.conj()) == pa.eval(at).conj());
  }
}

TEST_CASE("polynomial normal form strips trailing zeros") {
  const TPoly p({Scalar(1), Scalar(0), Scalar(0)});
  CHECK(p.degree() == 0);
  CHECK(TPoly().degree() == -1);
  CHECK((TPoly::t() - TPoly::t()).is_zero());
  CHECK(to_string(TPoly({Scalar(0), Scalar(-1)})) == "-t");
}

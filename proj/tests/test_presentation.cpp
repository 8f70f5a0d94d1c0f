#include "support.hpp"

#include <doctest.h>

using namespace bhopf;

namespace {

const char* kHeader = R"([algebra]
generators = x xs
involution = x:xs
)";

// Line and column of the ParseError raised by text, or (0, 0).
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("car fixture loads") {
  const Presentation p = testing::load("car.alg");
  CHECK(p.name == "car");
  REQUIRE(p.size() == 2);
  CHECK(p.generators[0] == "x");
  CHECK(p.star[0] == 1);
  CHECK(p.star[1] == 0);
  CHECK(p.braiding == BraidingKind::graded_sign);
  REQUIRE(p.rules.size() == 1);
  CHECK(p.rules[0].lhs == testing::word(p, "xs x"));
  CHECK(p.rules[0].rhs == Element(testing::word(p, "x xs"), TPoly(-1)));
  CHECK(p.cocycle.at({testing::word(p, "xs"), testing::word(p, "x")}) == Scalar(1));
  CHECK(p.is_normal(testing::word(p, "x x xs")));
  CHECK_FALSE(p.is_normal(testing::word(p, "x xs x")));
}

TEST_CASE("canonical text round trips") {
  for (const char* name : {"car.alg", "free2.alg", "car-badL.alg", "car-negL.alg", "car-wrongsign.alg"}) {
    const Presentation p = testing::load(name);
    const Presentation again = parse_presentation(to_text(p));
    CHECK(to_text(again) == to_text(p));
    CHECK(again.rules.size() == p.rules.size());
    CHECK(again.cocycle == p.cocycle);
  }
  const Presentation q = load_presentation(testing::fixture("q.alg"), Scalar(Rational(2, 3)));
  CHECK(to_text(parse_presentation(to_text(q))) == to_text(q));
}

TEST_CASE("template instantiation") {
  const Presentation q = load_presentation(testing::fixture("q.alg"), Scalar(2));
  CHECK(q.name == "q2");
  CHECK(q.braiding == BraidingKind::diagonal);
  CHECK(q.braid_table[0][0] == Scalar(2));
  CHECK(q.braid_table[1][0] == Scalar(Rational(1, 2)));
  CHECK(q.rules[0].rhs == Element(testing::word(q, "x xs"), TPoly(Scalar(Rational(1, 2)))));
  const Presentation qi = load_presentation(testing::fixture("q.alg"), Scalar::i());
  CHECK(qi.braid_table[1][1] == -Scalar::i());
  CHECK_THROWS_AS(load_presentation(testing::fixture("q.alg")), ParseError);
  CHECK_THROWS(load_presentation(testing::fixture("q.alg"), Scalar(0)));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_at(std::string(kHeader) + "bogus = 1\n") == std::pair<std::size_t, std::size_t>{4, 1});
  CHECK(error_at("[algebra]\ngenerators = x y\ninvolution = x:y y:y\n").first == 3);
  CHECK(error_at(std::string(kHeader) + "[relations]\nx xs = xs x\n").first == 5);
  CHECK(error_at(std::string(kHeader) + "[relations]\nxs x = x x\n").first == 5);
  CHECK(error_at(std::string(kHeader) + "[relations]\nxs x = - x xs\n[cocycle]\nxs x | x = 1\n").first == 7);
  CHECK(error_at(std::string(kHeader) + "[cocycle]\n1 | x = 1\n").first == 5);
  CHECK(error_at(std::string(kHeader) + "[braiding]\nkind = diagonal\nx x = 1\n").first > 0);
  CHECK(error_at(std::string(kHeader) + "[nonsense]\n").first == 4);
  CHECK(error_at("[algebra]\ngenerators = x t\ninvolution = x:x t:t\n").first == 2);
  CHECK(error_at("[algebra]\ngenerators = x x\n").first == 2);
  CHECK(error_at("[algebra]\ngenerators = x y\ninvolution = x:y\ngrade = x:1 y:2\n").first == 4);
  CHECK_THROWS_AS(load_presentation("/nonexistent/file.alg"), std::runtime_error);
}

TEST_CASE("element expressions") {
  const Presentation p = testing::load("car.alg");
  const Element e = testing::elem(p, "2 x xs - 1/3 xs + i x + (1 + i) + 1");
  CHECK(e.coeff(testing::word(p, "x xs")) == TPoly(2));
  CHECK(e.coeff(testing::word(p, "xs")) == TPoly(Scalar(Rational(-1, 3))));
  CHECK(e.coeff(testing::word(p, "x")) == TPoly(Scalar::i()));
  CHECK(e.coeff(Word{}) == TPoly(Scalar(Rational(2), Rational(1))));
  CHECK(format(p, e) == "2 x xs + i x - 1/3 xs + (2 + i)");
  CHECK(testing::elem(p, format(p, e)) == e);
  CHECK_THROWS_AS(testing::elem(p, "x + y"), ParseError);
  CHECK_THROWS_AS(testing::elem(p, "x +"), ParseError);
}

TEST_CASE("monomial tables") {
  const Presentation p = testing::load("car.alg");
  CHECK(parse_monomial_table(p, "# nothing\n").empty());
  const auto table = parse_monomial_table(p, "x xs = 1/2\nxs = 0\n");
  REQUIRE(table.size() == 1);
  CHECK(table.at(testing::word(p, "x xs")) == Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(parse_monomial_table(p, "xs x = 1\n"), ParseError);
}

TEST_CASE("confluence detects ambiguous overlaps") {
  CHECK(check_confluence(testing::load("car.alg")).status == Status::pass);
  CHECK(check_confluence(testing::load("free2.alg")).status == Status::pass);
  // c b a reduces to c via (b a) and to a via (c b).
  const Presentation bad = parse_presentation(R"([algebra]
generators = a b c
involution = a:a b:b c:c
[relations]
b a = 1
c b = 1
c a = a c
)");
  const Report r = check_confluence(bad);
  CHECK(r.status == Status::fail);
  REQUIRE(r.witness);
  CHECK(r.witness->input == "c b a");
}

TEST_CASE("quotient compatibility") {
  CHECK(check_quotient_compatibility(testing::load("car.alg"), 4).status == Status::pass);
  const Report wrong = check_quotient_compatibility(testing::load("car-wrongsign.alg"), 4);
  CHECK(wrong.status == Status::fail);
  CHECK(wrong.message.find("sub-check (a)") != std::string::npos);
  REQUIRE(wrong.witness);
  CHECK(wrong.witness->input == "xs x = x xs");
  // Δ(xs x) - Δ(x xs) under the sign braiding.
  CHECK(wrong.witness->note.find("- 2 (x ⊗ xs) + 2 (xs ⊗ x)") != std::string::npos);

  for (const char* q : {"2", "-1", "1/3", "i"})
    CHECK(check_quotient_compatibility(load_presentation(testing::fixture("q.alg"), parse_scalar(q)), 4).status ==
          Status::pass);

  // The q relation under a braiding table that disagrees with it.
  const std::string mismatched = R"([algebra]
generators = x xs
involution = x:xs
[braiding]
kind = diagonal
x x = 2
x xs = 2
xs x = 1/2
xs xs = 1/2
[relations]
xs x = 3 x xs
)";
  const Report m = check_quotient_compatibility(parse_presentation(mismatched), 4);
  CHECK(m.status == Status::fail);
  CHECK(m.message.find("sub-check (a)") != std::string::npos);
}

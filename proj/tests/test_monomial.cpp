#include <limits>

#include "doctest.h"
#include "stanley/errors.hpp"
#include "support.hpp"

using namespace testsupport;

TEST_CASE("variable sets validate their names") {
  CHECK_THROWS_AS(vars({"x", "x"}), DomainError);
  CHECK_THROWS_AS(vars({""}), DomainError);
  CHECK_THROWS_AS(vars({"a*b"}), DomainError);
  VariableSet vs = vars({"x", "y"});
  CHECK(vs.size() == 2);
  CHECK(vs.index_of("y") == 1);
  CHECK(!vs.index_of("z"));
  CHECK(vs.project(0).names() == std::vector<std::string>{"y"});
  CHECK(vs.project(0).project(0).empty());
}

TEST_CASE("divisibility") {
  VariableSet vs = vars({"x", "y"});
  CHECK(divides(mono(vs, "1"), mono(vs, "x^2*y")));
  CHECK_FALSE(divides(mono(vs, "x*y"), mono(vs, "x")));
  CHECK(divides(mono(vs, "x"), mono(vs, "x*y")));
  VariableSet other = vars({"a", "b"});
  CHECK_THROWS_AS(divides(mono(vs, "x"), mono(other, "a")), AmbientMismatchError);
}

TEST_CASE("gcd and lcm are componentwise min and max") {
  VariableSet vs = vars({"x", "y"});
  CHECK(gcd(mono(vs, "x^2*y"), mono(vs, "x*y^3")) == mono(vs, "x*y"));
  CHECK(gcd(mono(vs, "x^5*y^2"), mono(vs, "1")) == mono(vs, "1"));
  CHECK(lcm(mono(vs, "x^2"), mono(vs, "y")) == mono(vs, "x^2*y"));
  CHECK(lcm(mono(vs, "x*y"), mono(vs, "1")) == mono(vs, "x*y"));
}

TEST_CASE("monomial basics") {
  VariableSet vs = vars({"x", "y", "z"});
  Monomial m = mono(vs, "x^2*z");
  CHECK(m.total_degree() == 3);
  CHECK(m.support() == std::vector<std::size_t>{0, 2});
  CHECK(m.project(1) == io::parse_monomial("x^2*z", vs.project(1)));
  CHECK(mono(vs, "1").is_one());
  CHECK_THROWS_AS(Monomial(vs, {1, 2}), DomainError);
  CHECK_THROWS_AS(Monomial(vs, {1, -1, 0}), DomainError);
}

TEST_CASE("colon of monomials follows the gcd formula") {
  VariableSet vs = vars({"x", "y"});
  CHECK(mono(vs, "x*y").colon_by(mono(vs, "x")) == mono(vs, "y"));
  CHECK(mono(vs, "x^3").colon_by(mono(vs, "x*y^4")) == mono(vs, "x^2"));
  CHECK(mono(vs, "y").colon_by(mono(vs, "y^5")) == mono(vs, "1"));
}

TEST_CASE("products detect exponent overflow") {
  VariableSet vs = vars({"x"});
  Monomial big(vs, {std::numeric_limits<int>::max()});
  CHECK_THROWS_AS(big * mono(vs, "x"), OverflowError);
  CHECK((big * mono(vs, "1")).exponent(0) == std::numeric_limits<int>::max());
}

TEST_CASE("lexicographic order on exponent vectors") {
  VariableSet vs = vars({"x", "y"});
  CHECK(lex_less(mono(vs, "1"), mono(vs, "y")));
  CHECK(lex_less(mono(vs, "y^9"), mono(vs, "x")));
  CHECK_FALSE(lex_less(mono(vs, "x"), mono(vs, "x")));
}

#include "doctest.h"

#include "surftutte/corpus.hpp"
#include "surftutte/error.hpp"
#include "surftutte/poly.hpp"

using surftutte::Poly;

namespace {

const Poly X = Poly::variable("X");
const Poly Y = Poly::variable("Y");
const Poly A = Poly::variable("A");
const Poly B = Poly::variable("B");

Poly random_poly(surftutte::Rng& rng) {
  static const char* names[] = {"A", "B", "X", "Y"};
  Poly p;
  const int terms = rng.between(0, 4);
  for (int t = 0; t < terms; ++t) {
    std::map<std::string, int> powers;
    for (const char* name : names)
      if (rng.coin()) powers[name] = rng.between(-2, 3);
    p += Poly::monomial(rng.between(-5, 5), powers);
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK((1 + X) * (1 + X) == 1 + 2 * X + X * X);
  CHECK(((1 + X) * (1 + X)).to_string() == "1 + 2*X + X^2");
  CHECK(((Y + Y.pow(-1)) * Y).to_string() == "1 + Y^2");
  CHECK(((A + B) + (-B)) == A);
  CHECK(((A + B) + (-B)).variables() == std::vector<std::string>{"A"});
}

TEST_CASE("canonical strings") {
  CHECK(Poly().to_string() == "0");
  CHECK((Y.pow(-1) + Y).to_string() == "Y^-1 + Y");
  CHECK((2 + A + B).to_string() == "2 + A + B");
  CHECK((B * B + 2 * Y + Y * Y * A * A).to_string() == "2*Y + B^2 + A^2*Y^2");
  CHECK((-X + 1).to_string() == "1 - X");
  CHECK((-X).to_string() == "-X");
  CHECK((-3 * X * Y.pow(-2)).to_string() == "-3*X*Y^-2");
}

TEST_CASE("parse round-trips canonical text") {
  for (const char* text : {"0", "2 + A + B", "Y^-1 + Y", "1 - X", "-3*X*Y^-2", "2*Y + B^2 + A^2*Y^2",
                           "-u^-16 + u^-12 + u^-4"}) {
    CHECK(Poly::parse(text).to_string() == text);
  }
  CHECK(Poly::parse(" X*X  -  2 ") == X * X - 2);
  CHECK_THROWS_AS(Poly::parse("X +"), surftutte::Error);
  CHECK_THROWS_AS(Poly::parse("X^"), surftutte::Error);
}

TEST_CASE("substitution") {
  CHECK((2 + A + B).substitute({{"A", Y}, {"B", Y.pow(-1)}}) == 2 + Y + Y.pow(-1));
  CHECK((1 + X).substitute({{"X", X - 1}}) == X);
  const Poly d = Poly::variable("d");
  CHECK((A * A).substitute({{"A", B * d * A.pow(-1)}}) == B * B * d * d * A.pow(-2));
  CHECK((A * X).substitute({{"Y", X}}) == A * X);
  CHECK_THROWS_AS((A.pow(-1)).substitute({{"A", 1 + X}}), surftutte::Error);
  CHECK((A * A).substitute({{"A", 1 + X}}) == 1 + 2 * X + X * X);
}

TEST_CASE("scale_exponent and rename") {
  const Poly Z = Poly::variable("Z");
  CHECK((Z * Z + Z.pow(-4)).scale_exponent("Z", 2) == Z + Z.pow(-2));
  CHECK_THROWS_AS(Z.scale_exponent("Z", 2), surftutte::Error);
  CHECK((X + Y).rename("X", "Z") == Z + Y);
}

TEST_CASE("coefficients are arbitrary precision") {
  const Poly p = (1 + X).pow(200);
  CHECK(p.coefficient({{"X", 100}}) == mpz_class("90548514656103281165404177077484163874504589675413336841320"));
}

TEST_CASE("ring axioms on random polynomials") {
  surftutte::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Poly());
    CHECK(p.substitute({{"X", X}, {"A", A}}) == p);
    CHECK(Poly::parse(p.to_string()) == p);
    const std::map<std::string, Poly> bind{{"X", 1 + Y}, {"A", B * B}};
    if (p.min_degree("X") >= 0 && q.min_degree("X") >= 0) {
      CHECK((p + q).substitute(bind) == p.substitute(bind) + q.substitute(bind));
      CHECK((p * q).substitute(bind) == p.substitute(bind) * q.substitute(bind));
    }
  }
}

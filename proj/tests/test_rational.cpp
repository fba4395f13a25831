#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffv/rational.hpp"

#include <stdexcept>
#include <vector>

using ffv::Rational;
using ffv::RationalSampler;
using ffv::SamplePoint;

namespace {

std::vector<SamplePoint> sample_poly(const std::vector<Rational>& coeffs,
                                     const std::vector<Rational>& nodes) {
  std::vector<SamplePoint> out;
  for (const Rational& x : nodes) {
    Rational v;
    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    out.push_back({x, v});
  }
  return out;
}

}  // namespace

TEST_CASE("normalization reduces to canonical form") {
  CHECK(ffv::normalize(2, 4) == Rational(1, 2));
  CHECK(ffv::normalize(-3, -6) == Rational(1, 2));
  CHECK(ffv::normalize(0, 5) == Rational(0));
  CHECK(ffv::normalize(0, 5).str() == "0/1");
  CHECK(ffv::normalize(7, -3) == Rational(-7, 3));
  CHECK(ffv::normalize(7, -3).denominator() > 0);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trips") {
  CHECK(Rational::parse("-4/1") == Rational(-4));
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("15") == Rational(15));
  CHECK(Rational::parse("-3.25") == Rational(-13, 4));
  CHECK(Rational::parse("+0.5") == Rational(1, 2));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational::parse(Rational(-9, 8).str()) == Rational(-9, 8));

  CHECK(Rational(1, 2).decimal_str() == "0.5");
  CHECK(Rational(-13, 4).decimal_str() == "-3.25");
  CHECK(Rational(7).decimal_str() == "7");
  CHECK(Rational(1, 3).decimal_str() == "1/3");

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1//2"), std::invalid_argument);
}

TEST_CASE("division and inversion guard against zero") {
  CHECK(Rational(3, 4).inverse() == Rational(4, 3));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("interpolated degree of pinned polynomials") {
  std::vector<Rational> nodes012 = {Rational(0), Rational(1), Rational(2)};
  CHECK(ffv::exact_degree(sample_poly({Rational(5)}, nodes012)) == 0);

  std::vector<Rational> nodes0123 = {Rational(0), Rational(1), Rational(2), Rational(3)};
  CHECK(ffv::exact_degree(sample_poly({Rational(0), Rational(0), Rational(1)}, nodes0123)) == 2);

  std::vector<Rational> nodes124 = {Rational(1), Rational(2), Rational(4)};
  CHECK(ffv::exact_degree(sample_poly({Rational(1), Rational(3)}, nodes124)) == 1);

  // Zero polynomial has degree 0 by convention.
  CHECK(ffv::exact_degree(sample_poly({Rational(0)}, nodes0123)) == 0);

  CHECK_THROWS_AS(ffv::exact_degree({}), std::invalid_argument);
  CHECK_THROWS_AS(
      ffv::exact_degree({{Rational(1), Rational(2)}, {Rational(1), Rational(3)}}),
      std::invalid_argument);
}

TEST_CASE("interpolated degree of random polynomials") {
  RationalSampler gen(0xfeedULL);
  for (int trial = 0; trial < 30; ++trial) {
    int degree = static_cast<int>(gen.raw() % 6);
    std::vector<Rational> coeffs;
    for (int i = 0; i < degree; ++i) coeffs.push_back(gen.next());
    coeffs.push_back(gen.next_nonzero());  // leading coefficient

    std::vector<Rational> nodes;
    while (static_cast<int>(nodes.size()) < degree + 2) {
      Rational x = gen.next();
      bool fresh = true;
      for (const Rational& seen : nodes)
        if (seen == x) fresh = false;
      if (fresh) nodes.push_back(x);
    }
    CHECK(ffv::exact_degree(sample_poly(coeffs, nodes)) == degree);
  }
}

TEST_CASE("lagrange evaluation reproduces the sampled polynomial") {
  std::vector<Rational> coeffs = {Rational(2), Rational(-1, 3), Rational(5, 7)};
  std::vector<Rational> nodes = {Rational(-2), Rational(0), Rational(1), Rational(3)};
  auto samples = sample_poly(coeffs, nodes);
  auto probe = sample_poly(coeffs, {Rational(11, 5)});
  CHECK(ffv::lagrange_eval(samples, Rational(11, 5)) == probe[0].value);
}

TEST_CASE("field axioms on seeded triples") {
  RationalSampler gen(0xabcdULL);
  for (int trial = 0; trial < 50; ++trial) {
    Rational a = gen.next(), b = gen.next(), c = gen.next();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    Rational nz = gen.next_nonzero();
    CHECK(nz * nz.inverse() == Rational(1));
    CHECK(a - a == Rational(0));
  }
}

TEST_CASE("sampler streams are deterministic and bounded") {
  RationalSampler a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    Rational va = a.next(), vb = b.next();
    CHECK(va == vb);
    CHECK(Rational(-9) < va + Rational(1));  // numerator range [-9, 9]
    CHECK(va < Rational(10));
  }
  RationalSampler c(7);
  for (int i = 0; i < 100; ++i) CHECK(!c.next_nonzero().is_zero());

  CHECK(ffv::mix_seed(1, 2) != ffv::mix_seed(2, 1));
  CHECK(ffv::mix_seed(1, 2) == ffv::mix_seed(1, 2));
}

#include <doctest.h>

#include <random>

#include "coxlink/error.hpp"
#include "coxlink/polyalg.hpp"

using namespace coxlink::polyalg;

namespace {

const std::vector<std::string> kQT{"a", "Q", "T"};

LaurentPoly P(const std::string& s, const std::vector<std::string>& v = kQT) { return LaurentPoly::parse(s, v); }

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> e(-2, 3), c(-4, 4), len(0, 5);
  LaurentPoly p(vars);
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    Exponent ex;
    for (std::size_t k = 0; k < vars.size(); ++k) ex.push_back(e(rng));
    p.add_term(ex, c(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical string and parse round trip") {
  auto p = P("1 - a*Q^2*T");
  CHECK(p.to_string() == "-a*Q^2*T + 1");
  CHECK(P(p.to_string()) == p);
  CHECK(LaurentPoly(kQT).to_string() == "0");
  CHECK(P("Q^-1 + 3").to_string() == "3 + Q^-1");
  CHECK_THROWS_AS(P("Q^"), coxlink::ParseError);
  CHECK_THROWS_AS(P("z"), coxlink::ParseError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto r = random_poly(rng, kQT);
    CHECK(P(r.to_string()) == r);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto x = random_poly(rng, kQT), y = random_poly(rng, kQT), z = random_poly(rng, kQT);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x - x == LaurentPoly(kQT));
    CHECK(x + LaurentPoly(kQT) == x);
  }
}

TEST_CASE("binomial product expands") {
  CHECK((P("1 - a*Q") * P("1 - a*T")) == P("1 - a*Q - a*T + a^2*Q*T"));
  CHECK(P("1 - Q").pow(3) == P("1 - 3*Q + 3*Q^2 - Q^3"));
}

TEST_CASE("substitution") {
  Substitution s{{"q", "t"}, {{"Q", {1, {2, -2}}}, {"T", {1, {0, 2}}}}};
  CHECK(substitute(P("Q*T", {"Q", "T"}), s) == P("q^2", {"q", "t"}));
  CHECK(substitute(P("Q^-1", {"Q", "T"}), s) == P("q^-2*t^2", {"q", "t"}));
  Substitution neg{kQT, {{"a", {-1, {1, 0, 0}}}}};
  CHECK(substitute(P("a*Q + T"), neg) == P("-a*Q + T"));
}

TEST_CASE("rational addition over the least common denominator") {
  BinomialRational one_over(P("1"), {{0, 1, 0}});
  BinomialRational minus_q(P("-Q"), {{0, 1, 0}});
  auto s = add(one_over, minus_q);
  CHECK(s.is_polynomial());
  CHECK(s.numerator() == P("1"));

  BinomialRational x(P("Q - a*Q^2"), {{0, 1, 1}});
  BinomialRational y(P("T - a*T^2"), {{0, 1, 1}});
  auto sum = add(x, y);
  CHECK(sum.equals(BinomialRational(P("Q + T - a*Q^2 - a*T^2"), {{0, 1, 1}})));

  BinomialRational p(P("a + Q"));
  CHECK((p + BinomialRational(LaurentPoly(kQT))).equals(p));
}

TEST_CASE("denominator orientation and normalization") {
  BinomialRational r(P("1"), {{0, -1, 0}});
  CHECK(r.denominator().begin()->first == Exponent{0, 1, 0});
  CHECK(r.equals(BinomialRational(P("-Q"), {{0, 1, 0}})));

  BinomialRational c(P("1 - Q^2"), {{0, 1, 0}});
  c.normalize();
  CHECK(c.is_polynomial());
  CHECK(c.numerator() == P("1 + Q"));
  CHECK(c.is_normalized());
  CHECK(c.to_string() == "Q + 1");
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(3);
  std::vector<Exponent> pool{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 2, -1}};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto rnd = [&] {
    BinomialRational r(random_poly(rng, kQT));
    r.divide_by_binomial(pool[pick(rng)]);
    return r;
  };
  for (int i = 0; i < 50; ++i) {
    auto x = rnd(), y = rnd(), z = rnd();
    CHECK((x * (y + z)).equals(x * y + x * z));
    CHECK(add(x, y).equals(add(y, x)));
    CHECK((x - x).is_zero() == true);
    CHECK(add(add(x, y), z).is_normalized());
  }
}

TEST_CASE("truncated series") {
  BinomialRational g(P("1", {"q"}), {{2}});
  CHECK(truncate_series(g, {1}, 5) == P("1 + q^2 + q^4", {"q"}));

  BinomialRational qt(P("Q + T", {"Q", "T"}), {{1, 1}});
  CHECK(truncate_series(qt, {2, 2}, 6) == P("Q + T + Q^2*T + Q*T^2", {"Q", "T"}));

  BinomialRational flipped(P("1", {"q"}), {{-2}});
  CHECK(truncate_series(flipped, {1}, 4) == P("-q^2 - q^4", {"q"}));

  BinomialRational flat(P("1", {"Q", "T"}), {{1, -1}});
  CHECK_THROWS_AS(truncate_series(flat, {1, 1}, 4), coxlink::ExpansionError);
}

TEST_CASE("exact division by a binomial") {
  LaurentPoly quot;
  CHECK(divide_exact_by_binomial(P("1 - Q^3"), {0, 1, 0}, quot));
  CHECK(quot == P("1 + Q + Q^2"));
  CHECK_FALSE(divide_exact_by_binomial(P("1 + Q"), {0, 1, 0}, quot));
}

TEST_CASE("rational substitution requires unit denominators") {
  BinomialRational r(P("a"), {{0, 1, 1}});
  Substitution s{{"a", "q", "t"}, {{"Q", {1, {0, 2, -2}}}, {"T", {1, {0, 0, 2}}}}};
  auto img = substitute(r, s);
  CHECK(img.equals(BinomialRational(P("a", {"a", "q", "t"}), {{0, 2, 0}})));
  Substitution bad{{"a", "q", "t"}, {{"Q", {-1, {0, 2, 0}}}}};
  CHECK_THROWS(substitute(r, bad));
}

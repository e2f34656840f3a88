#include <doctest.h>

#include <algorithm>
#include <random>

#include "coxlink/bridge.hpp"
#include "coxlink/error.hpp"
#include "coxlink/homfly.hpp"
#include "skein_resolver.hpp"

using namespace coxlink::homfly;
using coxlink::polyalg::LaurentPoly;

namespace {

LaurentPoly Z(const std::string& s) { return LaurentPoly::parse(s, homfly_vars()); }

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_len) {
  std::uniform_int_distribution<int> ns(1, max_strands), len(0, max_len), sgn(0, 1);
  BraidWord b;
  b.strands = ns(rng);
  if (b.strands == 1) return b;
  std::uniform_int_distribution<int> gen(1, b.strands - 1);
  int l = len(rng);
  for (int i = 0; i < l; ++i) b.word.push_back({gen(rng), sgn(rng) ? 1 : -1});
  return b;
}

}  // namespace

TEST_CASE("braid grammar") {
  auto b = parse_braid("strands=3 s2 s1^-1 s1^1");
  CHECK(b.strands == 3);
  CHECK(b.word == std::vector<Crossing>{{2, 1}, {1, -1}, {1, 1}});
  CHECK(b.to_string() == "strands=3 s2 s1^-1 s1");
  CHECK(parse_braid(b.to_string()) == b);
  auto l = parse_braid("[1,-2, 1]");
  CHECK(l.strands == 3);
  CHECK(l.word == std::vector<Crossing>{{1, 1}, {2, -1}, {1, 1}});
  CHECK(parse_braid("strands=2").word.empty());
  CHECK_THROWS_AS(parse_braid("strands=2 s2"), coxlink::Error);
  CHECK_THROWS_AS(parse_braid("s1^2"), coxlink::ParseError);
  CHECK_THROWS_AS(parse_braid("[1,0]"), coxlink::Error);
}

TEST_CASE("braid invariants") {
  auto t = parse_braid("strands=2 s1 s1 s1");
  CHECK(t.writhe() == 3);
  CHECK(t.components() == 1);
  CHECK(parse_braid("strands=2 s1 s1").components() == 2);
  CHECK(parse_braid("strands=3").components() == 3);
}

TEST_CASE("coxeter braids") {
  CHECK(coxeter_braid(2, {}, {1}).to_string() == "strands=2 s1 s1 s1");
  CHECK(coxeter_braid(3, {}, {0, 0}).to_string() == "strands=3 s2 s1");
  CHECK(coxeter_braid(3, {1}, {0, 0}).to_string() == "strands=3 s2");
  CHECK(coxeter_braid(3, {}, {0, 1}).to_string() == "strands=3 s2 s1 s2 s2");
  CHECK(coxeter_braid(3, {}, {1, 0}).to_string() == "strands=3 s2 s1 s1 s2 s2 s1");
  CHECK(coxeter_braid(4, {}, {1, 1, 1}).components() == 1);
}

TEST_CASE("Hecke quadratic relation") {
  HeckeElement sq(3), lin(3);
  sq.right_multiply(1);
  sq.right_multiply(1);
  lin.right_multiply(1);
  const std::vector<std::string> vars{"z", "tau"};
  LaurentPoly z = LaurentPoly::variable(vars, "z");
  // T_1^2 = z T_1 + 1
  REQUIRE(lin.coefficients().size() == 1);
  const auto& s1 = lin.coefficients().begin()->first;
  CHECK(sq.coefficients().size() == 2);
  CHECK(sq.coefficients().at(s1) == z);
  CHECK(sq.coefficients().at({0, 1, 2}) == LaurentPoly::constant(vars, 1));
  HeckeElement inv(3);
  inv.right_multiply(1, 1);
  inv.right_multiply(1, -1);
  REQUIRE(inv.coefficients().size() == 1);
  CHECK(inv.coefficients().begin()->second == LaurentPoly::constant(vars, 1));
}

TEST_CASE("known values") {
  CHECK(homfly(parse_braid("strands=1")) == Z("1"));
  CHECK(homfly(parse_braid("strands=2 s1")) == Z("1"));
  CHECK(homfly(parse_braid("strands=2")) == Z("a*z^-1 - a^-1*z^-1"));
  CHECK(homfly(parse_braid("strands=2 s1 s1 s1")) == Z("a^-2*z^2 + 2*a^-2 - a^-4"));
  CHECK(homfly(parse_braid("strands=3 s1 s2^-1 s1 s2^-1")) == Z("a^2 - z^2 - 1 + a^-2"));
  CHECK_THROWS_AS(homfly(parse_braid("strands=7")), coxlink::CapacityError);
}

TEST_CASE("Hecke trace agrees with the skein resolver") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto b = random_braid(rng, 4, 8);
    CHECK(homfly(b) == coxlink::oracles::skein_homfly(b));
  }
}

TEST_CASE("Markov moves") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    auto b = random_braid(rng, 4, 6);
    auto base = homfly(b);
    if (b.strands > 1) {
      auto c = b;
      c.word.insert(c.word.begin(), {1, 1});
      c.word.push_back({1, -1});
      CHECK(homfly(c) == base);
      if (!b.word.empty()) {
        auto r = b;
        std::rotate(r.word.begin(), r.word.begin() + 1, r.word.end());
        CHECK(homfly(r) == base);
      }
    }
    for (int s : {1, -1}) {
      auto st = b;
      st.strands += 1;
      st.word.push_back({b.strands, s});
      CHECK(homfly(st) == base);
    }
  }
}

TEST_CASE("z to q substitution") {
  auto q = homfly_in_q(Z("z^2 + a"));
  CHECK(q == LaurentPoly::parse("q^2 - 2 + q^-2 + a", {"a", "q"}));
  CHECK_THROWS_AS(homfly_in_q(Z("z^-1")), coxlink::ArithmeticError);
}

TEST_CASE("specialization bridge") {
  auto r = coxlink::bridge::find_bridge();
  CHECK(r.candidates == 4000);
  REQUIRE(r.found);
  CHECK(r.holds());
  for (const auto& c : r.checks) CHECK(c.matches);
  CHECK(r.chosen == coxlink::bridge::Specialization{-1, 0, -2, 1, -1, 0, 0});
}

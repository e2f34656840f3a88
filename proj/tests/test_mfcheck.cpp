#include <doctest.h>

#include "coxlink/error.hpp"
#include "coxlink/mfcheck.hpp"

using namespace coxlink::mfcheck;

TEST_CASE("matrix helpers") {
  auto id = identity(3);
  CHECK(determinant(id) == 1);
  CHECK(multiply(id, id) == id);
  RationalMatrix m{{2, 1}, {1, 1}};
  CHECK(determinant(m) == 1);
  CHECK(multiply(m, inverse(m)) == identity(2));
  CHECK_THROWS_AS(inverse(RationalMatrix{{1, 2}, {2, 4}}), coxlink::ArithmeticError);
  CHECK(is_hessenberg(RationalMatrix{{1, 2, 3}, {4, 5, 6}, {0, 7, 8}}));
  CHECK_FALSE(is_hessenberg(RationalMatrix{{1, 2, 3}, {4, 5, 6}, {1, 7, 8}}));
}

TEST_CASE("F at the identity") {
  for (int n = 2; n <= 4; ++n) CHECK(identity_specialization_holds(n));
  RationalMatrix X{{1, 2, 3}, {0, 5, 6}, {0, 0, 9}};
  CHECK(F(1, X, identity(3)) == 4);
  CHECK(F(2, X, identity(3)) == 8);
  CHECK_THROWS_AS(F(3, X, identity(3)), coxlink::ArgumentError);
}

TEST_CASE("sampled points satisfy both identities") {
  for (int n = 2; n <= 5; ++n) {
    auto r = run_samples(n, 100, 1);
    CHECK(r.passed());
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("samples are reproducible") {
  auto a = draw_sample(4, 42), b = draw_sample(4, 42), c = draw_sample(4, 43);
  CHECK(a.X == b.X);
  CHECK(a.g == b.g);
  CHECK_FALSE(a.X == c.X);
  CHECK(is_hessenberg(a.g));
  CHECK(determinant(a.g) != 0);
}

TEST_CASE("containment needs a Hessenberg g") {
  auto bad = identity(3);
  bad[2][0] = 1;
  CHECK_THROWS_AS(hessenberg_check(bad, identity(3)), coxlink::ArgumentError);
  auto ctl = negative_control(3, 0);
  CHECK(ctl.found);
  CHECK_FALSE(is_hessenberg(ctl.g));
  for (int i = 1; i < 3; ++i) CHECK(F(i, ctl.X, ctl.g) == 0);
  CHECK_FALSE(conjugate_is_upper(ctl.g, ctl.X));
}

TEST_CASE("commutator entries") {
  auto X = identity(4), Y = identity(4);
  X[0][1] = 1;
  Y[1][2] = 1;
  auto e = commutator_entries(X, Y, {});
  CHECK(e.size() == 3);
  for (const auto& c : e)
    if (c.i == 1 && c.j == 3) CHECK(c.value == 1);
  CHECK(commutator_entries(X, Y, {1, 2}).size() == 5);
  CHECK_THROWS_AS(commutator_entries(X, Y, {4}), coxlink::ArgumentError);
}

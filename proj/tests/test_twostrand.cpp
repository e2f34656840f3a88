#include <doctest.h>

#include "coxlink/polyalg.hpp"
#include "coxlink/twostrand.hpp"

using namespace coxlink::twostrand;

namespace {

const std::vector<std::string> kVars{"a", "q", "t"};

LaurentPoly H(const std::string& s) { return LaurentPoly::parse(s, kVars); }

}  // namespace

TEST_CASE("cohomology of line bundles on P1") {
  CHECK(dim_H0_P1(-1).is_zero());
  CHECK(dim_H0_P1(0) == H("1"));
  CHECK(dim_H0_P1(1) == H("q^2 + q^-2*t^2"));
  CHECK(dim_H1_P1(-1).is_zero());
  CHECK(dim_H1_P1(-2) == H("1"));
  CHECK(dim_H1_P1(-3) == H("q^2 + q^-2*t^2"));
  CHECK(dim_V_second(-2) == H("1"));
  CHECK(dim_V_second(-1).is_zero());
}

TEST_CASE("unknot and trefoil") {
  CHECK(homology_T2_odd(0).equals(BinomialRational(H("1"), {{0, 2, 0}})));
  auto trefoil = homology_T2_odd(1);
  CHECK(trefoil.equals(BinomialRational(H("a*q^2*t^-1 + a*q^-2*t + a^2*t^-1"), {{0, 2, 0}})));
}

TEST_CASE("reduced odd homology is a polynomial with k+1 lowest terms") {
  for (int k = 0; k <= 6; ++k) {
    auto r = homology_T2_odd(k);
    BinomialRational reduced = r * BinomialRational(H("1 - q^2"));
    reduced.normalize();
    REQUIRE(reduced.is_polynomial());
    int lo = reduced.numerator().degree_range(0).first;
    int count = 0;
    for (const auto& [e, c] : reduced.numerator().terms()) {
      CHECK(c > 0);
      count += e[0] == lo;
    }
    CHECK(count == k + 1);
  }
}

TEST_CASE("t-parity") {
  for (int k = 1; k <= 5; ++k) {
    int bits = t_parities(homology_T2_odd(k));
    CHECK((bits == 1 || bits == 2));
  }
  CHECK(t_parities(homology_T2_even(-1)) == 3);
  CHECK(t_parities(homology_T2_even(-2)) == 3);
}

TEST_CASE("even family is defined on both sides of zero") {
  for (int n = -3; n <= 3; ++n) CHECK_FALSE(homology_T2_even(n).is_zero());
}

#include <doctest.h>

#include "coxlink/error.hpp"
#include "coxlink/localization.hpp"
#include "coxlink/twostrand.hpp"
#include "young.hpp"

using namespace coxlink::localization;
using coxlink::charts::build_chart;
using coxlink::charts::decode_nested_pair;
using coxlink::polyalg::Substitution;

namespace {

const char* kFamily = "x:{3,4}{3}{}{} y:{4}{4}{4}{}";

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s, localization_vars()); }
LaurentPoly H(const std::string& s) { return LaurentPoly::parse(s, homology_vars()); }

// Terms of smallest a-degree.
LaurentPoly lowest_a(const LaurentPoly& p) {
  int lo = p.degree_range(0).first;
  LaurentPoly out(p.variables());
  for (const auto& [e, c] : p.terms())
    if (e[0] == lo) out.add_term(e, c);
  return out;
}

// a^m t^{-m} C_n(q^2, t^2/q^2)
LaurentPoly catalan_image(int n, int m) {
  Substitution s{homology_vars(), {{"q", {1, {0, 2, 0}}}, {"t", {1, {0, -2, 2}}}}};
  return coxlink::polyalg::substitute(coxlink::oracles::qt_catalan(n), s).shifted({m, 0, -m});
}

}  // namespace

TEST_CASE("printed localization weight on small charts") {
  auto x = omega(build_chart(decode_nested_pair("x:{2}{} y:{}{}")), WeightConvention::AsPrinted);
  CHECK(x.equals(BinomialRational(L("1 - a*Q"), {{0, 1, 1}})));
  auto y = omega(build_chart(decode_nested_pair("x:{}{} y:{2}{}")), WeightConvention::AsPrinted);
  CHECK(y.equals(BinomialRational(L("1 - a*T"), {{0, 1, 1}})));
  auto one = omega(build_chart(decode_nested_pair("x:{} y:{}")), WeightConvention::AsPrinted);
  CHECK(one.equals(BinomialRational(L("1"))));
}

TEST_CASE("printed two-strand sum") {
  Options opt;
  opt.convention = WeightConvention::AsPrinted;
  opt.apply_calibration = false;
  auto sp = superpolynomial_even(2, {1}, {}, opt);
  CHECK(sp.value.equals(BinomialRational(L("Q - a*Q^2 + T - a*T^2"), {{0, 1, 1}})));
  CHECK_FALSE(sp.warnings.empty());
}

TEST_CASE("degenerate charts") {
  CHECK_THROWS_AS(omega(build_chart(decode_nested_pair(kFamily)), WeightConvention::AsPrinted),
                  coxlink::DegenerateChartError);
  for (auto conv : {WeightConvention::TorusAction, WeightConvention::AsPrinted}) {
    CHECK(detect_degenerate(2, conv).empty());
    CHECK(detect_degenerate(3, conv).empty());
  }
  bool family = false;
  for (const auto& s : detect_degenerate(4, WeightConvention::AsPrinted)) family = family || s.encode() == kFamily;
  CHECK(family);
}

TEST_CASE("calibration is unique and fixed") {
  auto search = calibrate();
  CHECK(search.candidates == 400);
  REQUIRE(search.matches.size() == 1);
  CHECK(search.matches[0] == Calibration{});
  CHECK(fixed_calibration() == Calibration{});
}

TEST_CASE("unknot") {
  auto sp = superpolynomial_even(1, {});
  CHECK(sp.image.equals(BinomialRational(H("1"), {{0, 2, 0}})));
  CHECK(sp.reduced == H("1"));
}

TEST_CASE("two strands agree with the closed form") {
  for (int k = 0; k <= 5; ++k) {
    auto sp = superpolynomial_even(2, {k});
    CHECK(sp.calibrated);
    CHECK(sp.image.equals(coxlink::twostrand::homology_T2_odd(k)));
    CHECK(sp.positivity == Positivity::NonNegative);
  }
}

TEST_CASE("fixed points match standard tableaux") {
  for (int n = 1; n <= 5; ++n) {
    auto terms = fixed_point_terms(n, std::vector<int>(n - 1, 1), {}, WeightConvention::TorusAction);
    CHECK(terms.size() == coxlink::oracles::standard_young_tableaux(n).size());
  }
}

TEST_CASE("lowest a-degree part is the q,t-Catalan number") {
  auto t34 = superpolynomial_even(3, {1, 1});
  REQUIRE(t34.reduced);
  CHECK(t34.reduced->size() == 11);
  CHECK(lowest_a(*t34.reduced) == catalan_image(3, 2));

  auto t45 = superpolynomial_even(4, {1, 1, 1});
  REQUIRE(t45.reduced);
  CHECK(t45.fixed_points == 10);
  CHECK(lowest_a(*t45.reduced) == catalan_image(4, 3));
  CHECK(t45.positivity == Positivity::NonNegative);
}

TEST_CASE("positivity regime") {
  auto good = superpolynomial_even(3, {2, 1});
  CHECK(good.in_positive_regime);
  CHECK(good.warnings.empty());
  CHECK(good.positivity == Positivity::NonNegative);
  auto bad = superpolynomial_even(3, {1, -1});
  CHECK_FALSE(bad.in_positive_regime);
  CHECK_FALSE(bad.warnings.empty());
  CHECK(monotone_positive({3, 2, 2, 0}));
  CHECK_FALSE(monotone_positive({1, 2}));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(superpolynomial_even(3, {1}), coxlink::ArgumentError);
  CHECK_THROWS_AS(superpolynomial_even(8, std::vector<int>(7, 0)), coxlink::Error);
  CHECK_THROWS_AS(superpolynomial_even(3, {1, 1}, {3}), coxlink::ArgumentError);
}

TEST_CASE("serial and parallel sums agree") {
  for (int n = 2; n <= 5; ++n) {
    auto terms = fixed_point_terms(n, std::vector<int>(n - 1, 1), {}, WeightConvention::TorusAction);
    auto serial = sum_terms_serial(terms);
    auto parallel = sum_terms_parallel(terms, coxlink::Execution::Parallel);
    CHECK(serial.numerator() == parallel.numerator());
    CHECK(serial.denominator() == parallel.denominator());
  }
}

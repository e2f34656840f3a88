#include <doctest.h>

#include "coxlink/error.hpp"
#include "coxlink/serialize.hpp"

using namespace coxlink;
using serialize::Json;

TEST_CASE("chart records") {
  auto c = charts::build_chart(charts::decode_nested_pair("x:{2}{} y:{}{}"));
  CHECK(serialize::chart_line(c) ==
        "chart x:{2}{} y:{}{} px=(1,2) py= nx= ny=(1,2) words=1,X gyt=(0,0):{1} (1,0):{2} commuting=1");
  auto t = serialize::chart_tree(c);
  CHECK(t["label"] == "x:{2}{} y:{}{}");
  CHECK(t["px"] == Json::parse("[[1,2]]"));
  CHECK(charts::decode_nested_pair(t["label"].get<std::string>()) == c.label);
  auto round = Json::parse(t.dump());
  CHECK(round == t);
}

TEST_CASE("weights records") {
  auto c = charts::build_chart(charts::decode_nested_pair("x:{2,3}{3}{} y:{}{}{}"));
  auto line = serialize::weights_line(c, weights::WeightConvention::AsPrinted);
  CHECK(line.find("wx=2,1,0") != std::string::npos);
  CHECK(line.find("obstruction=13:(3,1)") != std::string::npos);
  auto t = serialize::weights_tree(c, weights::WeightConvention::TorusAction);
  CHECK(t["convention"] == "torus-action");
  CHECK(t["remark_inequality"] == true);
}

TEST_CASE("polynomial and rational trees round trip") {
  for (int n = 1; n <= 4; ++n) {
    auto sp = localization::superpolynomial_even(n, std::vector<int>(n - 1, 1));
    auto rt = serialize::rational_tree(sp.value);
    CHECK(serialize::rational_from_tree(Json::parse(rt.dump())).equals(sp.value));
    CHECK(serialize::rational_from_tree(serialize::rational_tree(sp.image)).equals(sp.image));
    REQUIRE(sp.reduced);
    CHECK(serialize::poly_from_tree(serialize::poly_tree(*sp.reduced)) == *sp.reduced);

    auto full = serialize::superpolynomial_tree(sp);
    CHECK(full["n"] == n);
    CHECK(full["calibrated"] == true);
    CHECK(serialize::rational_from_tree(full["image"]).equals(sp.image));
    CHECK(serialize::poly_from_tree(full["reduced"]) == *sp.reduced);
  }
}

TEST_CASE("tampered records are rejected") {
  auto sp = localization::superpolynomial_even(2, {1});
  auto t = serialize::rational_tree(sp.value);
  REQUIRE(!t["denominator"].empty());
  t["denominator"][0]["binomial"] = "1 - a";
  CHECK_THROWS_AS(serialize::rational_from_tree(t), ParseError);
}

TEST_CASE("text record of a superpolynomial") {
  auto sp = localization::superpolynomial_even(2, {1});
  auto text = serialize::superpolynomial_text(sp);
  CHECK(text.rfind("n=2 k=1 link_s= convention=torus-action\n", 0) == 0);
  CHECK(text.find("calibration: ") != std::string::npos);
  CHECK(text.find("reduced: ") != std::string::npos);
}

TEST_CASE("report trees") {
  auto rep = mfcheck::run_samples(3, 10, 7);
  auto t = serialize::mfcheck_tree(rep, nullptr);
  CHECK(t["seed"] == 7);
  CHECK(t["passed"] == true);
  CHECK_FALSE(t.contains("negative_control"));
}

#include <doctest.h>

#include "coxlink/charts.hpp"
#include "coxlink/weights.hpp"

using namespace coxlink::weights;
using coxlink::charts::all_charts;
using coxlink::charts::build_chart;
using coxlink::charts::decode_nested_pair;

namespace {

Chart chart(const char* code) { return build_chart(decode_nested_pair(code)); }

const char* kFamily = "x:{3,4}{3}{}{} y:{4}{4}{4}{}";

}  // namespace

TEST_CASE("weight vectors") {
  auto allx = weight_vectors(chart("x:{2,3}{3}{} y:{}{}{}"));
  CHECK(allx.wx == std::vector<int>{2, 1, 0});
  CHECK(allx.wy == std::vector<int>{0, 0, 0});
  auto y2 = weight_vectors(chart("x:{}{} y:{2}{}"));
  CHECK(y2.wx == std::vector<int>{0, 0});
  CHECK(y2.wy == std::vector<int>{1, 0});
  auto fam = weight_vectors(chart(kFamily));
  CHECK(fam.wx == std::vector<int>{1, 1, 0, 0});
  CHECK(fam.wy == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("printed tangent and obstruction weights") {
  auto x2 = tangent_weights(chart("x:{2}{} y:{}{}"), WeightConvention::AsPrinted);
  REQUIRE(x2.size() == 1);
  CHECK(x2[0].side == Side::Y);
  CHECK(x2[0].dx == 1);
  CHECK(x2[0].dy == 1);
  auto y2 = tangent_weights(chart("x:{}{} y:{2}{}"), WeightConvention::AsPrinted);
  REQUIRE(y2.size() == 1);
  CHECK(y2[0].dx == 1);
  CHECK(y2[0].dy == 1);

  CHECK(obstruction_weights(chart("x:{2}{} y:{}{}"), WeightConvention::AsPrinted).empty());
  auto ox = obstruction_weights(chart("x:{2,3}{3}{} y:{}{}{}"), WeightConvention::AsPrinted);
  REQUIRE(ox.size() == 1);
  CHECK(ox[0].index == IndexPair{1, 3});
  CHECK(ox[0].ox == 3);
  CHECK(ox[0].oy == 1);
  auto oy = obstruction_weights(chart("x:{}{}{} y:{2,3}{3}{}"), WeightConvention::AsPrinted);
  REQUIRE(oy.size() == 1);
  CHECK(oy[0].ox == 1);
  CHECK(oy[0].oy == 3);
}

TEST_CASE("torus-action weights on two strands") {
  auto x = tangent_weights(chart("x:{2}{} y:{}{}"));
  REQUIRE(x.size() == 1);
  CHECK(x[0].dx == -1);
  CHECK(x[0].dy == 1);
  auto y = tangent_weights(chart("x:{}{} y:{2}{}"));
  REQUIRE(y.size() == 1);
  CHECK(y[0].dx == 1);
  CHECK(y[0].dy == -1);
  for (const auto& c : all_charts(2)) {
    auto fd = fixed_dim_check(c);
    CHECK(fd.dim_t0 == 0);
    CHECK(fd.dim_ob0 == 0);
  }
}

TEST_CASE("pivots are torus invariant, so the rescaled point stays in the chart") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : all_charts(n)) {
      auto w = weight_vectors(c);
      CHECK(w.wx[n - 1] == 0);
      CHECK(w.wy[n - 1] == 0);
      for (int i = 1; i < n; ++i) {
        auto p = c.pivot_of_row(i);
        int dx = w.wx[i - 1] - w.wx[p.j - 1], dy = w.wy[i - 1] - w.wy[p.j - 1];
        // Character of the pivot coordinate under the torus action.
        if (p.side == Side::X) {
          CHECK(1 - dx == 0);
          CHECK(-dy == 0);
        } else {
          CHECK(-dx == 0);
          CHECK(1 - dy == 0);
        }
      }
    }
  }
}

TEST_CASE("record counts") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : all_charts(n)) {
      CHECK(static_cast<int>(tangent_weights(c).size()) == n * (n - 1) / 2);
      CHECK(static_cast<int>(obstruction_weights(c).size()) == (n - 1) * (n - 2) / 2);
      if (n > 1)
        CHECK(obstruction_weights(c, WeightConvention::TorusAction, {1}).size() == obstruction_weights(c).size() + 1);
    }
}

TEST_CASE("remark inequality in the torus-action convention") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : all_charts(n)) CHECK(fixed_dim_check(c).holds());
}

TEST_CASE("fixed points") {
  auto fam = chart(kFamily);
  auto fp = fixed_point(fam);
  CHECK(fp.x[0][3] == 1);
  CHECK(fp.x[1][2] == 1);
  CHECK(fp.y[2][3] == 1);
  for (const auto& c : all_charts(4)) {
    auto p = fixed_point(c);
    CHECK(p.commuting == coxlink::charts::is_zero(coxlink::charts::commutator(p.x, p.y)));
  }
}

#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "coxlink/localization.hpp"
#include "coxlink/mfcheck.hpp"
#include "coxlink/parallel.hpp"

using namespace coxlink;

TEST_CASE("parallel map keeps index order") {
  auto sq = parallel_map(1000, [](std::size_t i) { return static_cast<long>(i * i); }, Execution::Parallel);
  for (std::size_t i = 0; i < sq.size(); ++i) CHECK(sq[i] == static_cast<long>(i * i));
}

TEST_CASE("parallel map rethrows the first error") {
  auto body = [](std::size_t i) -> int {
    if (i == 17 || i == 400) throw std::runtime_error("bad " + std::to_string(i));
    return 0;
  };
  for (auto ex : {Execution::Serial, Execution::Parallel}) {
    try {
      parallel_map(1000, body, ex);
      FAIL("no exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "bad 17");
    }
  }
}

TEST_CASE("tree reduction matches a fold") {
  std::vector<long> v(777);
  std::iota(v.begin(), v.end(), 1);
  long fold = std::accumulate(v.begin(), v.end(), 0L);
  CHECK(tree_reduce(v, 0L, std::plus<long>(), Execution::Parallel) == fold);
  CHECK(tree_reduce(v, 0L, std::plus<long>(), Execution::Serial) == fold);
  CHECK(tree_reduce(std::vector<long>{}, 5L, std::plus<long>(), Execution::Parallel) == 5);
}

TEST_CASE("localization output does not depend on execution") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> k(n - 1, 1);
    auto s = localization::fixed_point_terms(n, k, {}, weights::WeightConvention::TorusAction, Execution::Serial);
    auto p = localization::fixed_point_terms(n, k, {}, weights::WeightConvention::TorusAction, Execution::Parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].chart == p[i].chart);
      CHECK(s[i].value.numerator() == p[i].value.numerator());
    }
    localization::Options serial;
    serial.execution = Execution::Serial;
    auto a = localization::superpolynomial_even(n, k, {}, serial);
    auto b = localization::superpolynomial_even(n, k);
    CHECK(a.value.to_string() == b.value.to_string());
    CHECK(a.image.to_string() == b.image.to_string());
  }
}

TEST_CASE("sampling does not depend on execution") {
  for (int n = 2; n <= 5; ++n) {
    auto s = mfcheck::run_samples(n, 64, 3, Execution::Serial);
    auto p = mfcheck::run_samples(n, 64, 3, Execution::Parallel);
    CHECK(s.vanishing_failures == p.vanishing_failures);
    CHECK(s.containment_failures == p.containment_failures);
  }
}

#include <sstream>

#include "doctest.h"
#include "xclique/bench.hpp"

using namespace xclique;

TEST_CASE("bench families") {
  CHECK(bench_instance("path", 10).order() == 10);
  CHECK(bench_instance("even-cycle", 7).order() == 8);
  CHECK(bench_instance("sierpinski", 3).order() == 27);
  CHECK(bench_instance("subdivided-line", 4).order() == 24);
  CHECK_THROWS_AS(bench_instance("tree", 4), std::invalid_argument);
  for (const char* family : {"path", "even-cycle", "sierpinski", "subdivided-line"}) {
    CHECK(is_bench_family(family));
    CHECK(bench_one(family, 5).accepted);
  }
}

TEST_CASE("csv") {
  const auto rows = run_bench("path", {10, 20});
  const std::string csv = bench_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,n,m,steps,millis");
  std::getline(in, line);
  CHECK(line.rfind("path,10,9,", 0) == 0);
}

TEST_CASE("fit_linear") {
  const auto exact = fit_linear({1, 2, 3, 4}, {3, 5, 7, 9});
  CHECK(exact.slope == doctest::Approx(2.0));
  CHECK(exact.intercept == doctest::Approx(1.0));
  CHECK(exact.r2 == doctest::Approx(1.0));
  const auto noisy = fit_linear({1, 2, 3, 4}, {1, 3, 2, 4});
  CHECK(noisy.r2 < 0.9);
  CHECK_THROWS_AS(fit_linear({1}, {1}), std::invalid_argument);
}

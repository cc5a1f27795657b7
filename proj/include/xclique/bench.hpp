#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xclique/graph.hpp"

namespace xclique {

// Families: "path" (n vertices), "even-cycle" (n rounded up to even, >= 6),
// "sierpinski" (S(size, 3)), "subdivided-line" (L(S(prism on size rungs))).
Graph bench_instance(const std::string& family, std::size_t size);
bool is_bench_family(const std::string& family);

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t steps = 0;
  double millis = 0;
  bool accepted = false;
};

BenchRow bench_one(const std::string& family, std::size_t size);
std::vector<BenchRow> run_bench(const std::string& family, const std::vector<std::size_t>& sizes);

// Header "family,n,m,steps,millis", one line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

// Least squares y = slope * x + intercept.
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace xclique

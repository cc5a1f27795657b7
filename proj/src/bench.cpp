#include "xclique/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "xclique/builders.hpp"
#include "xclique/recognizer.hpp"

namespace xclique {

bool is_bench_family(const std::string& family) {
  return family == "path" || family == "even-cycle" || family == "sierpinski" || family == "subdivided-line";
}

Graph bench_instance(const std::string& family, std::size_t size) {
  if (family == "path") return path(size);
  if (family == "even-cycle") return cycle(std::max<std::size_t>(6, size + size % 2));
  if (family == "sierpinski") return sierpinski(static_cast<int>(size), 3);
  if (family == "subdivided-line") return subdivided_line_graph(circular_ladder(size));
  throw std::invalid_argument("unknown bench family '" + family + "'");
}

BenchRow bench_one(const std::string& family, std::size_t size) {
  const Graph g = bench_instance(family, size);
  RecognitionStats stats;
  const auto start = std::chrono::steady_clock::now();
  const Recognition result = recognize(g, stats);
  const auto stop = std::chrono::steady_clock::now();
  BenchRow row;
  row.family = family;
  row.n = g.order();
  row.m = g.size();
  row.steps = stats.steps;
  row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
  row.accepted = accepted(result);
  return row;
}

std::vector<BenchRow> run_bench(const std::string& family, const std::vector<std::size_t>& sizes) {
  std::vector<BenchRow> rows;
  for (std::size_t size : sizes) rows.push_back(bench_one(family, size));
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "family,n,m,steps,millis\n";
  char millis[32];
  for (const BenchRow& r : rows) {
    std::snprintf(millis, sizeof millis, "%.3f", r.millis);
    out += r.family + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.steps) + ',' +
           millis + '\n';
  }
  return out;
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_linear: need two or more paired samples");
  const double k = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("fit_linear: x values are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace xclique

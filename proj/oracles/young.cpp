#include "young.hpp"

#include <functional>

namespace coxlink::oracles {

std::vector<std::vector<std::vector<int>>> standard_young_tableaux(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> rows;
  // Place 1..n one at a time at every outer corner.
  std::function<void(int)> place = [&](int next) {
    if (next > n) {
      out.push_back(rows);
      return;
    }
    for (std::size_t r = 0; r <= rows.size(); ++r) {
      if (r == rows.size()) {
        rows.push_back({next});
        place(next + 1);
        rows.pop_back();
      } else if (r == 0 || rows[r].size() < rows[r - 1].size()) {
        rows[r].push_back(next);
        place(next + 1);
        rows[r].pop_back();
      }
    }
  };
  place(1);
  return out;
}

namespace {

// Steps: true = north, false = east; the path stays weakly above the diagonal.
int area(const std::vector<bool>& path) {
  int x = 0, y = 0, a = 0;
  for (bool north : path) {
    if (north) {
      ++y;
      a += (y - 1) - x;  // full cells between the path and the diagonal in this row
    } else {
      ++x;
    }
  }
  return a;
}

// Haglund's bounce statistic, read from (0,0): go north until meeting the
// start of an east step of the path, then east to the diagonal, and repeat.
// Each diagonal touch (j,j) with j < n contributes n - j.
int bounce(const std::vector<bool>& path) {
  const int n = static_cast<int>(path.size()) / 2;
  int x = 0, y = 0;
  std::vector<int> east_start(n + 1, -1);  // first y at which the path leaves column x
  for (bool north : path) {
    if (north) ++y;
    else {
      if (east_start[x] < 0) east_start[x] = y;
      ++x;
    }
  }
  int total = 0;
  int bx = 0, by = 0;
  std::vector<int> touches;
  while (by < n) {
    by = east_start[bx];
    bx = by;
    if (by < n) touches.push_back(by);
  }
  for (int t : touches) total += n - t;
  return total;
}

}  // namespace

polyalg::LaurentPoly qt_catalan(int n) {
  const std::vector<std::string> vars{"q", "t"};
  polyalg::LaurentPoly out(vars);
  std::vector<bool> path;
  std::function<void(int, int)> walk = [&](int north, int east) {
    if (north == n && east == n) {
      out.add_term({area(path), bounce(path)}, 1);
      return;
    }
    if (north < n) {
      path.push_back(true);
      walk(north + 1, east);
      path.pop_back();
    }
    if (east < north) {
      path.push_back(false);
      walk(north, east + 1);
      path.pop_back();
    }
  };
  walk(0, 0);
  return out;
}

}  // namespace coxlink::oracles

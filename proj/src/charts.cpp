#include "coxlink/charts.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <sstream>

#include "coxlink/error.hpp"

namespace coxlink::charts {

namespace {

const char* kModule = "charts";

std::string set_string(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

void invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(kModule, what, "construct labels with enumerate_nested_pairs");
}

}  // namespace

char side_letter(Side s) { return s == Side::X ? 'X' : 'Y'; }

std::vector<std::vector<int>> NestedSetPair::flattened() const {
  std::vector<std::vector<int>> out;
  out.reserve(sx.size() + sy.size());
  for (const auto& s : sx) out.emplace_back(s.begin(), s.end());
  for (const auto& s : sy) out.emplace_back(s.begin(), s.end());
  return out;
}

std::string NestedSetPair::encode() const {
  std::string out = "x:";
  for (const auto& s : sx) out += set_string(s);
  out += " y:";
  for (const auto& s : sy) out += set_string(s);
  return out;
}

NestedSetPair decode_nested_pair(const std::string& text) {
  NestedSetPair p;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(kModule, what, pos, "use the form 'x:{3,4}{3}{}{} y:{4}{4}{4}{}'");
  };
  auto chain = [&](char tag, std::vector<std::set<int>>& out) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (text.compare(pos, 2, std::string{tag, ':'}) != 0) fail(std::string("expected '") + tag + ":'");
    pos += 2;
    while (pos < text.size() && text[pos] == '{') {
      ++pos;
      std::set<int> level;
      while (pos < text.size() && text[pos] != '}') {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        level.insert(std::stoi(text.substr(start, pos - start)));
        if (pos < text.size() && text[pos] == ',') ++pos;
      }
      if (pos >= text.size()) fail("unterminated set");
      ++pos;
      out.push_back(std::move(level));
    }
  };
  chain('x', p.sx);
  chain('y', p.sy);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) fail("trailing characters");
  p.n = static_cast<int>(p.sx.size());
  p.validate();
  return p;
}

void NestedSetPair::validate() const {
  invariant(n >= 1, "n must be positive");
  invariant(static_cast<int>(sx.size()) == n && static_cast<int>(sy.size()) == n, "each chain needs n levels");
  for (int i = 1; i <= n; ++i) {
    const auto& x = sx[i - 1];
    const auto& y = sy[i - 1];
    for (int v : x) invariant(v > i && v <= n, "S_x^" + std::to_string(i) + " must lie in {i+1..n}");
    for (int v : y) invariant(v > i && v <= n, "S_y^" + std::to_string(i) + " must lie in {i+1..n}");
    invariant(static_cast<int>(x.size() + y.size()) == n - i,
              "|S_x^" + std::to_string(i) + "| + |S_y^" + std::to_string(i) + "| must equal n - i");
    if (i < n) {
      invariant(std::includes(x.begin(), x.end(), sx[i].begin(), sx[i].end()), "S_x chain is not nested");
      invariant(std::includes(y.begin(), y.end(), sy[i].begin(), sy[i].end()), "S_y chain is not nested");
    }
  }
}

std::vector<NestedSetPair> enumerate_nested_pairs(int n) {
  if (n < 1) throw ArgumentError(kModule, "n must be at least 1", "pass a positive matrix size");
  if (n > 9) throw CapacityError(kModule, "n = " + std::to_string(n) + " exceeds the limit 9", "use n <= 9");
  std::vector<NestedSetPair> out;
  NestedSetPair cur;
  cur.n = n;
  cur.sx.assign(n, {});
  cur.sy.assign(n, {});
  // Level i adds exactly one element to one of the chains, so NS_n has n! leaves.
  std::function<void(int)> rec = [&](int i) {
    if (i == 0) {
      out.push_back(cur);
      return;
    }
    for (auto* chain : {&cur.sx, &cur.sy}) {
      for (int e = i + 1; e <= n; ++e) {
        if ((*chain)[i].count(e)) continue;
        (*chain)[i - 1] = (*chain)[i];
        (*chain)[i - 1].insert(e);
        auto* other = chain == &cur.sx ? &cur.sy : &cur.sx;
        (*other)[i - 1] = (*other)[i];
        rec(i - 1);
      }
    }
  };
  rec(n - 1);
  std::sort(out.begin(), out.end());
  return out;
}

Pivot Chart::pivot_of_row(int i) const {
  for (const auto& [r, c] : px) {
    if (r == i) return {r, c, Side::X};
  }
  for (const auto& [r, c] : py) {
    if (r == i) return {r, c, Side::Y};
  }
  throw InvariantError(kModule, "row " + std::to_string(i) + " has no pivot", "rebuild the chart from a valid label");
}

Chart build_chart(const NestedSetPair& s) {
  s.validate();
  const int n = s.n;
  Chart c;
  c.label = s;
  auto level = [&](const std::vector<std::set<int>>& chain, int i) -> const std::set<int>& {
    static const std::set<int> empty;
    return i <= n ? chain[i - 1] : empty;
  };
  for (int i = 1; i < n; ++i) {
    for (int j : level(s.sx, i)) {
      if (!level(s.sx, i + 1).count(j)) c.px.emplace_back(i, j);
    }
    for (int j : level(s.sy, i)) {
      if (!level(s.sy, i + 1).count(j)) c.py.emplace_back(i, j);
    }
  }
  std::set<IndexPair> zx, zy;
  for (int i = 2; i <= n; ++i) {
    for (int j : level(s.sx, i)) zx.emplace(i - 1, j);
    for (int j : level(s.sy, i)) zy.emplace(i - 1, j);
  }
  c.zx.assign(zx.begin(), zx.end());
  c.zy.assign(zy.begin(), zy.end());
  std::set<IndexPair> pxs(c.px.begin(), c.px.end()), pys(c.py.begin(), c.py.end());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      IndexPair p{i, j};
      if (!pxs.count(p) && !zx.count(p)) c.nx.push_back(p);
      if (!pys.count(p) && !zy.count(p)) c.ny.push_back(p);
    }
  }
  for (const auto& p : c.px) invariant(!zx.count(p), "x pivot coincides with a constrained zero");
  for (const auto& p : c.py) invariant(!zy.count(p), "y pivot coincides with a constrained zero");
  invariant(c.px.size() + c.py.size() == static_cast<std::size_t>(n - 1), "expected one pivot per row");
  invariant(c.nx.size() + c.ny.size() == static_cast<std::size_t>(n * (n - 1) / 2),
            "free coordinate count differs from n(n-1)/2");

  c.mx.assign(n, std::vector<long>(n, 0));
  c.my.assign(n, std::vector<long>(n, 0));
  for (const auto& [i, j] : c.px) c.mx[i - 1][j - 1] = 1;
  for (const auto& [i, j] : c.py) c.my[i - 1][j - 1] = 1;
  return c;
}

std::vector<Chart> all_charts(int n) {
  std::vector<Chart> out;
  for (const auto& s : enumerate_nested_pairs(n)) out.push_back(build_chart(s));
  return out;
}

std::vector<std::string> basis_words(const Chart& c) {
  const int n = c.n();
  std::vector<std::string> word(n + 1);
  std::vector<bool> done(n + 1, false);
  done[n] = true;
  // Pivots point to larger indices, so filling from n downwards always finds
  // the target word already built.
  for (int i = n - 1; i >= 1; --i) {
    Pivot p = c.pivot_of_row(i);
    if (!done[p.j]) {
      throw InvariantError(kModule, "word of index " + std::to_string(p.j) + " requested before it was built",
                           "check the chart's pivot data");
    }
    word[i] = side_letter(p.side) + word[p.j];
    done[i] = true;
  }
  return {word.begin() + 1, word.end()};
}

std::vector<std::string> monomial_vector(const Chart& c) {
  auto w = basis_words(c);
  std::reverse(w.begin(), w.end());
  return w;
}

GYT GYT::normalized() const {
  if (cells.empty()) return *this;
  int r0 = cells.begin()->first.first, c0 = cells.begin()->first.second;
  for (const auto& [cell, labels] : cells) {
    r0 = std::min(r0, cell.first);
    c0 = std::min(c0, cell.second);
  }
  GYT out;
  for (const auto& [cell, labels] : cells) out.cells[{cell.first - r0, cell.second - c0}] = labels;
  return out;
}

bool GYT::connected() const {
  if (cells.empty()) return true;
  std::set<std::pair<int, int>> seen;
  std::queue<std::pair<int, int>> todo;
  todo.push(cells.begin()->first);
  seen.insert(cells.begin()->first);
  while (!todo.empty()) {
    auto [r, c] = todo.front();
    todo.pop();
    for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      std::pair<int, int> nb{r + dr, c + dc};
      if (cells.count(nb) && seen.insert(nb).second) todo.push(nb);
    }
  }
  return seen.size() == cells.size();
}

bool GYT::all_singletons() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

bool GYT::is_young_shape() const {
  for (const auto& [cell, labels] : cells) {
    auto [r, c] = cell;
    if (r < 0 || c < 0) return false;
    if (r > 0 && !cells.count({r - 1, c})) return false;
    if (c > 0 && !cells.count({r, c - 1})) return false;
  }
  return true;
}

bool GYT::is_standard() const {
  if (!is_young_shape() || !all_singletons()) return false;
  for (const auto& [cell, labels] : cells) {
    auto [r, c] = cell;
    int v = *labels.begin();
    auto right = cells.find({r + 1, c});
    if (right != cells.end() && *right->second.begin() <= v) return false;
    auto up = cells.find({r, c + 1});
    if (up != cells.end() && *up->second.begin() <= v) return false;
  }
  return true;
}

std::string GYT::encode() const {
  std::string out;
  for (const auto& [cell, labels] : cells) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(cell.first) + "," + std::to_string(cell.second) + "):" + set_string(labels);
  }
  return out;
}

GYT to_gyt(const Chart& c) {
  auto m = monomial_vector(c);
  GYT g;
  for (std::size_t k = 0; k < m.size(); ++k) {
    int dx = static_cast<int>(std::count(m[k].begin(), m[k].end(), 'X'));
    int dy = static_cast<int>(std::count(m[k].begin(), m[k].end(), 'Y'));
    auto& labels = g.cells[{dx, dy}];
    invariant(labels.insert(static_cast<int>(k + 1)).second, "label repeated in tableau");
  }
  g = g.normalized();
  invariant(g.connected(), "tableau of chart " + c.label.encode() + " is disconnected");
  return g;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix ab = matmul(a, b), ba = matmul(b, a);
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

bool is_zero(const IntMatrix& m) {
  for (const auto& row : m)
    for (long v : row)
      if (v != 0) return false;
  return true;
}

bool is_commutative(const Chart& c) { return is_zero(commutator(c.mx, c.my)); }

InjectivityReport gyt_injectivity_report(int n) {
  if (n > 7) throw CapacityError(kModule, "injectivity report limited to n <= 7", "use n <= 7");
  InjectivityReport r;
  r.n = n;
  std::map<GYT, std::vector<NestedSetPair>> groups;
  for (const auto& s : enumerate_nested_pairs(n)) {
    groups[to_gyt(build_chart(s))].push_back(s);
    ++r.charts;
  }
  r.images = groups.size();
  for (auto& [g, members] : groups) {
    if (members.size() > 1) r.collisions.push_back(std::move(members));
  }
  return r;
}

}  // namespace coxlink::charts

#include "coxlink/weights.hpp"

#include "coxlink/error.hpp"

namespace coxlink::weights {

const char* convention_name(WeightConvention c) {
  return c == WeightConvention::TorusAction ? "torus-action" : "as-printed";
}

WeightVectors weight_vectors(const Chart& c) {
  const int n = c.n();
  WeightVectors w;
  w.wx.assign(n, 0);
  w.wy.assign(n, 0);
  for (int i = n - 1; i >= 1; --i) {
    auto p = c.pivot_of_row(i);
    if (p.j <= i || p.j > n) {
      throw InvariantError("weights", "pivot in row " + std::to_string(i) + " does not point right",
                           "rebuild the chart from a valid label");
    }
    w.wx[i - 1] = w.wx[p.j - 1] + (p.side == Side::X ? 1 : 0);
    w.wy[i - 1] = w.wy[p.j - 1] + (p.side == Side::Y ? 1 : 0);
  }
  return w;
}

namespace {

std::pair<int, int> delta(const WeightVectors& w, IndexPair p) {
  return {w.wx[p.first - 1] - w.wx[p.second - 1], w.wy[p.first - 1] - w.wy[p.second - 1]};
}

TangentRecord tangent_record(const WeightVectors& w, IndexPair p, Side side, WeightConvention conv) {
  auto [ddx, ddy] = delta(w, p);
  int ex = side == Side::X ? 1 : 0;
  int ey = side == Side::Y ? 1 : 0;
  if (conv == WeightConvention::TorusAction) return {p, side, ex - ddx, ey - ddy};
  return {p, side, ddx + ex, ddy + ey};
}

}  // namespace

std::vector<TangentRecord> tangent_weights(const Chart& c, WeightConvention conv) {
  auto w = weight_vectors(c);
  std::vector<TangentRecord> out;
  out.reserve(c.nx.size() + c.ny.size());
  for (const auto& p : c.nx) out.push_back(tangent_record(w, p, Side::X, conv));
  for (const auto& p : c.ny) out.push_back(tangent_record(w, p, Side::Y, conv));
  return out;
}

std::vector<ObstructionRecord> obstruction_weights(const Chart& c, WeightConvention conv,
                                                   const std::set<int>& link_s) {
  const int n = c.n();
  auto w = weight_vectors(c);
  std::vector<IndexPair> idx;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) idx.emplace_back(i, j);
  for (int i : link_s) {
    if (i < 1 || i >= n) {
      throw ArgumentError("weights", "link subset entry " + std::to_string(i) + " out of range",
                          "use entries in 1..n-1");
    }
    idx.emplace_back(i, i + 1);
  }
  std::vector<ObstructionRecord> out;
  out.reserve(idx.size());
  for (const auto& p : idx) {
    auto [ddx, ddy] = delta(w, p);
    if (conv == WeightConvention::TorusAction) out.push_back({p, 1 - ddx, 1 - ddy});
    else out.push_back({p, ddx + 1, ddy + 1});
  }
  return out;
}

WeightData weight_data(const Chart& c, WeightConvention conv, const std::set<int>& link_s) {
  return {weight_vectors(c), tangent_weights(c, conv), obstruction_weights(c, conv, link_s)};
}

FixedDimCheck fixed_dim_check(const Chart& c, WeightConvention conv) {
  FixedDimCheck r;
  for (const auto& t : tangent_weights(c, conv)) r.dim_t0 += (t.dx == 0 && t.dy == 0);
  for (const auto& o : obstruction_weights(c, conv)) r.dim_ob0 += (o.ox == 0 && o.oy == 0);
  return r;
}

FixedPoint fixed_point(const Chart& c) {
  FixedPoint f;
  f.x = c.mx;
  f.y = c.my;
  for (const auto& t : tangent_weights(c, WeightConvention::TorusAction)) {
    if (t.dx != 0 || t.dy != 0) continue;
    auto& m = t.side == Side::X ? f.x : f.y;
    m[t.index.first - 1][t.index.second - 1] = 1;
  }
  f.commuting = charts::is_zero(charts::commutator(f.x, f.y));
  return f;
}

}  // namespace coxlink::weights

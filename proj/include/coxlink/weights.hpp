#pragma once

// Torus weights of a chart: weight vectors of the basis, the characters of
// the free coordinates (tangent space) and of the obstruction space.

#include <set>
#include <vector>

#include "coxlink/charts.hpp"

namespace coxlink::weights {

using charts::Chart;
using charts::IndexPair;
using charts::IntMatrix;
using charts::Side;

/// TorusAction: characters of the coordinates under (X, Y) -> (λ⁻¹ D X D⁻¹, μ⁻¹ D Y D⁻¹)
///   with D = diag(λ^{w_x} μ^{w_y}); x_ij has (1 - Δx, -Δy), y_ij has (-Δx, 1 - Δy),
///   obstruction (1 - Δx, 1 - Δy), where Δ = w^i - w^j.
/// AsPrinted: x_ij has (Δx + 1, Δy), y_ij has (Δx, Δy + 1), obstruction (Δx + 1, Δy + 1).
enum class WeightConvention { TorusAction, AsPrinted };

const char* convention_name(WeightConvention c);

struct WeightVectors {
  std::vector<int> wx;  // wx[i-1] = w_x^i
  std::vector<int> wy;
};

struct TangentRecord {
  IndexPair index;
  Side side;
  int dx;
  int dy;
};

struct ObstructionRecord {
  IndexPair index;
  int ox;
  int oy;
};

struct WeightData {
  WeightVectors w;
  std::vector<TangentRecord> tangent;
  std::vector<ObstructionRecord> obstruction;
};

/// w^n = 0 and w^i = w^j + e_L for the pivot (i, j) on side L.
WeightVectors weight_vectors(const Chart& c);

std::vector<TangentRecord> tangent_weights(const Chart& c, WeightConvention conv = WeightConvention::TorusAction);

/// Pairs with j - i > 1, followed by (i, i+1) for i in link_s.
std::vector<ObstructionRecord> obstruction_weights(const Chart& c,
                                                   WeightConvention conv = WeightConvention::TorusAction,
                                                   const std::set<int>& link_s = {});

WeightData weight_data(const Chart& c, WeightConvention conv = WeightConvention::TorusAction,
                       const std::set<int>& link_s = {});

struct FixedDimCheck {
  int dim_t0 = 0;   // tangent records with weight (0,0)
  int dim_ob0 = 0;  // obstruction records with weight (0,0)
  bool holds() const { return dim_ob0 >= dim_t0; }
};

FixedDimCheck fixed_dim_check(const Chart& c, WeightConvention conv = WeightConvention::TorusAction);

/// Torus-fixed point of a chart: pivots and every zero-weight free coordinate
/// set to 1 (TorusAction convention), all other coordinates 0.
struct FixedPoint {
  IntMatrix x;
  IntMatrix y;
  bool commuting = false;
};

FixedPoint fixed_point(const Chart& c);

}  // namespace coxlink::weights

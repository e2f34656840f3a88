#pragma once

// Fixed-point localization of the even superpolynomial of Coxeter links.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxlink/charts.hpp"
#include "coxlink/parallel.hpp"
#include "coxlink/polyalg.hpp"
#include "coxlink/weights.hpp"

namespace coxlink::localization {

using polyalg::BinomialRational;
using polyalg::Exponent;
using polyalg::LaurentPoly;
using weights::WeightConvention;

/// Variable order of localization output: (a, Q, T).
const std::vector<std::string>& localization_vars();
/// Variable order of homological output: (a, q, t).
const std::vector<std::string>& homology_vars();

/// Per-point weight, prefactor excluded.
///  TorusAction: prod_ob (1 - Q^ox T^oy) prod_{i<n} (1 - a Q^{-w_x^i} T^{-w_y^i})
///               / (prod_tan (1 - Q^dx T^dy) (1 - Q)^{1+|S|}),
///               zero-weight factors cancelled in pairs; zero if the obstruction
///               has more zero weights, DegenerateChartError if the tangent has.
///  AsPrinted:   prod_ob (1 - Q^ox T^oy) prod_{i<n} (1 - a Q^{w_x^i} T^{w_y^i})
///               / prod_tan (1 - Q^dx T^dy); DegenerateChartError on any zero tangent weight.
BinomialRational omega(const charts::Chart& c, WeightConvention conv = WeightConvention::TorusAction,
                       const std::set<int>& link_s = {});

struct FixedPointTerm {
  charts::NestedSetPair chart;
  weights::WeightVectors w;
  Exponent prefactor;  // exponent of Q^{k.w_x} T^{k.w_y} in (a, Q, T)
  int cancelled_zero_pairs = 0;
  bool vanishes = false;
  BinomialRational value;  // prefactor * omega
};

/// TorusAction: one term per distinct commuting torus-fixed point (first chart
/// in canonical order wins). AsPrinted: one term per chart whose base point commutes.
std::vector<FixedPointTerm> fixed_point_terms(int n, const std::vector<int>& k, const std::set<int>& link_s,
                                              WeightConvention conv, Execution ex = Execution::Parallel);

/// a -> sign*a, Q -> image_q, T -> image_t, then times shift^{sum k}.
struct Calibration {
  int a_sign = -1;
  Exponent image_q{0, 2, 0};      // in (a, q, t)
  Exponent image_t{0, -2, 2};
  Exponent shift_per_twist{1, 0, -1};
  std::string describe() const;
  bool operator==(const Calibration& o) const = default;
};

/// Candidate scan at n = 2, k = (1) against the two-strand odd formula.
struct CalibrationSearch {
  std::size_t candidates = 0;
  std::vector<Calibration> matches;
};

CalibrationSearch calibrate();
/// First match of calibrate(), computed once.
const Calibration& fixed_calibration();

BinomialRational apply_calibration(const BinomialRational& value, const Calibration& cal, int twist_sum);

bool monotone_positive(const std::vector<int>& k);

enum class Positivity { NonNegative, HasNegative, Undetermined };
const char* positivity_name(Positivity p);

struct Options {
  WeightConvention convention = WeightConvention::TorusAction;
  Execution execution = Execution::Parallel;
  bool apply_calibration = true;
};

struct Superpolynomial {
  int n = 0;
  std::vector<int> k;
  std::set<int> link_s;
  WeightConvention convention = WeightConvention::TorusAction;
  BinomialRational value;  // (a, Q, T)
  BinomialRational image;  // (a, q, t), calibrated when `calibrated`
  bool calibrated = false;
  Calibration calibration;
  std::optional<LaurentPoly> reduced;  // image * (1 - q^2) when that is a polynomial
  Positivity positivity = Positivity::Undetermined;
  bool in_positive_regime = true;
  std::vector<std::string> warnings;
  std::size_t fixed_points = 0;
  std::size_t vanishing_terms = 0;
};

/// Preconditions: 1 <= n <= 7, k has n - 1 entries, link_s within 1..n-1.
Superpolynomial superpolynomial_even(int n, const std::vector<int>& k, const std::set<int>& link_s = {},
                                     const Options& opt = {});

/// Serial reference: left fold in canonical order, normalized once.
BinomialRational sum_terms_serial(const std::vector<FixedPointTerm>& terms);
/// Pairwise tree reduction, normalized once; equal to the serial result.
BinomialRational sum_terms_parallel(const std::vector<FixedPointTerm>& terms, Execution ex);

/// Charts with some tangent weight (0,0).
std::vector<charts::NestedSetPair> detect_degenerate(int n, WeightConvention conv = WeightConvention::TorusAction);

}  // namespace coxlink::localization

#include "coxlink/localization.hpp"

#include "coxlink/error.hpp"
#include "coxlink/twostrand.hpp"

namespace coxlink::localization {

namespace {

const char* kModule = "localization";

LaurentPoly one() { return LaurentPoly::constant(localization_vars(), 1); }

Exponent qt(int q, int t) { return {0, q, t}; }

// 1 - a Q^x T^y
LaurentPoly lambda_factor(int x, int y) {
  LaurentPoly f = one();
  f.add_term({1, x, y}, -1);
  return f;
}

void check_inputs(int n, const std::vector<int>& k, const std::set<int>& link_s) {
  if (n < 1) throw ArgumentError(kModule, "n must be at least 1", "pass a positive strand count");
  if (n > 7) throw CapacityError(kModule, "n = " + std::to_string(n) + " exceeds the limit 7", "use n <= 7");
  if (static_cast<int>(k.size()) != n - 1) {
    throw ArgumentError(kModule, "k must have n - 1 = " + std::to_string(n - 1) + " entries",
                        "pass one twist exponent per Jucys-Murphy element");
  }
  for (int i : link_s) {
    if (i < 1 || i >= n) {
      throw ArgumentError(kModule, "link subset entry " + std::to_string(i) + " out of range", "use entries in 1..n-1");
    }
  }
}

}  // namespace

const std::vector<std::string>& localization_vars() {
  static const std::vector<std::string> v{"a", "Q", "T"};
  return v;
}

const std::vector<std::string>& homology_vars() {
  static const std::vector<std::string> v{"a", "q", "t"};
  return v;
}

BinomialRational omega(const charts::Chart& c, WeightConvention conv, const std::set<int>& link_s) {
  const int n = c.n();
  auto wd = weights::weight_data(c, conv, link_s);
  int tan0 = 0, ob0 = 0;
  LaurentPoly num = one();
  for (const auto& o : wd.obstruction) {
    if (o.ox == 0 && o.oy == 0) {
      ++ob0;
      continue;
    }
    num *= polyalg::binomial(localization_vars(), qt(o.ox, o.oy));
  }
  std::vector<Exponent> den;
  for (const auto& t : wd.tangent) {
    if (t.dx == 0 && t.dy == 0) {
      ++tan0;
      continue;
    }
    den.push_back(qt(t.dx, t.dy));
  }
  const int sign = conv == WeightConvention::TorusAction ? -1 : 1;
  for (int i = 1; i < n; ++i) num *= lambda_factor(sign * wd.w.wx[i - 1], sign * wd.w.wy[i - 1]);

  if (conv == WeightConvention::AsPrinted) {
    if (tan0 > 0) {
      throw DegenerateChartError(kModule, "chart " + c.label.encode() + " has a zero tangent weight",
                                 "exclude degenerate charts (see `coxlink degenerate`)");
    }
    if (ob0 > 0) return BinomialRational(LaurentPoly(localization_vars()));
    return BinomialRational(num, den);
  }
  if (tan0 > ob0) {
    throw DegenerateChartError(kModule,
                               "chart " + c.label.encode() + " has " + std::to_string(tan0) +
                                   " zero tangent weights but only " + std::to_string(ob0) + " zero obstruction weights",
                               "this fixed point is not isolated; localization does not apply");
  }
  if (ob0 > tan0) return BinomialRational(LaurentPoly(localization_vars()));
  for (int i = 0; i < 1 + static_cast<int>(link_s.size()); ++i) den.push_back(qt(1, 0));
  return BinomialRational(num, den);
}

std::vector<FixedPointTerm> fixed_point_terms(int n, const std::vector<int>& k, const std::set<int>& link_s,
                                              WeightConvention conv, Execution ex) {
  check_inputs(n, k, link_s);
  auto labels = charts::enumerate_nested_pairs(n);

  struct Candidate {
    bool keep = false;
    std::vector<int> key;
  };
  auto cands = parallel_map(
      labels.size(),
      [&](std::size_t idx) {
        Candidate cand;
        auto c = charts::build_chart(labels[idx]);
        if (conv == WeightConvention::TorusAction) {
          auto fp = weights::fixed_point(c);
          if (!fp.commuting) return cand;
          auto w = weights::weight_vectors(c);
          cand.key = w.wx;
          cand.key.insert(cand.key.end(), w.wy.begin(), w.wy.end());
        } else if (!charts::is_commutative(c)) {
          return cand;
        }
        cand.keep = true;
        return cand;
      },
      ex);

  std::vector<std::size_t> chosen;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!cands[i].keep) continue;
    if (conv == WeightConvention::TorusAction && !seen.insert(cands[i].key).second) continue;
    chosen.push_back(i);
  }

  return parallel_map(
      chosen.size(),
      [&](std::size_t idx) {
        auto c = charts::build_chart(labels[chosen[idx]]);
        FixedPointTerm term;
        term.chart = c.label;
        term.w = weights::weight_vectors(c);
        int ex_q = 0, ex_t = 0;
        for (int i = 1; i < n; ++i) {
          ex_q += k[i - 1] * term.w.wx[i - 1];
          ex_t += k[i - 1] * term.w.wy[i - 1];
        }
        term.prefactor = qt(ex_q, ex_t);
        auto fd = weights::fixed_dim_check(c, conv);
        term.cancelled_zero_pairs = std::min(fd.dim_t0, fd.dim_ob0);
        BinomialRational om = omega(c, conv, link_s);
        term.vanishes = om.is_zero();
        term.value = BinomialRational(LaurentPoly::monomial(localization_vars(), term.prefactor)) * om;
        return term;
      },
      ex);
}

BinomialRational sum_terms_serial(const std::vector<FixedPointTerm>& terms) {
  BinomialRational acc{LaurentPoly(localization_vars())};
  for (const auto& t : terms) acc += t.value;
  return acc.normalize();
}

BinomialRational sum_terms_parallel(const std::vector<FixedPointTerm>& terms, Execution ex) {
  std::vector<BinomialRational> values;
  values.reserve(terms.size());
  for (const auto& t : terms) values.push_back(t.value);
  BinomialRational acc = tree_reduce(
      std::move(values), BinomialRational{LaurentPoly(localization_vars())},
      [](const BinomialRational& x, const BinomialRational& y) { return x + y; }, ex);
  return acc.normalize();
}

std::string Calibration::describe() const {
  auto show = [](const Exponent& e) { return LaurentPoly::monomial(homology_vars(), e).to_string(); };
  return std::string("a -> ") + (a_sign < 0 ? "-a" : "a") + ", Q -> " + show(image_q) + ", T -> " + show(image_t) +
         ", times (" + show(shift_per_twist) + ")^(sum k)";
}

BinomialRational apply_calibration(const BinomialRational& value, const Calibration& cal, int twist_sum) {
  polyalg::Substitution s;
  s.target = homology_vars();
  s.images["a"] = {cal.a_sign, {1, 0, 0}};
  s.images["Q"] = {1, cal.image_q};
  s.images["T"] = {1, cal.image_t};
  BinomialRational r = polyalg::substitute(value, s);
  Exponent shift = cal.shift_per_twist;
  for (int& v : shift) v *= twist_sum;
  r = BinomialRational(LaurentPoly::monomial(homology_vars(), shift)) * r;
  return r.normalize();
}

CalibrationSearch calibrate() {
  CalibrationSearch out;
  auto terms = fixed_point_terms(2, {1}, {}, WeightConvention::TorusAction, Execution::Serial);
  BinomialRational p = sum_terms_serial(terms);
  BinomialRational target = twostrand::homology_T2_odd(1);
  // Orientation of the (Q, T) -> (q^2, t^2/q^2) grading change, and its swaps.
  const std::vector<std::pair<Exponent, Exponent>> qt_images{
      {{0, 2, 0}, {0, -2, 2}}, {{0, -2, 2}, {0, 2, 0}}, {{0, -2, 0}, {0, 2, -2}}, {{0, 2, -2}, {0, -2, 0}}};
  for (int sign : {-1, 1}) {
    for (const auto& [iq, it] : qt_images) {
      for (int sa = 0; sa <= 1; ++sa) {
        for (int sq = -2; sq <= 2; ++sq) {
          for (int st = -2; st <= 2; ++st) {
            Calibration cal{sign, iq, it, {sa, sq, st}};
            ++out.candidates;
            if (apply_calibration(p, cal, 1).equals(target)) out.matches.push_back(cal);
          }
        }
      }
    }
  }
  return out;
}

const Calibration& fixed_calibration() {
  static const Calibration cal = [] {
    auto search = calibrate();
    if (search.matches.empty()) {
      throw InvariantError(kModule, "no calibration matches the two-strand reference at n = 2, k = 1",
                           "check the weight convention");
    }
    return search.matches.front();
  }();
  return cal;
}

bool monotone_positive(const std::vector<int>& k) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) return false;
    if (i + 1 < k.size() && k[i] < k[i + 1]) return false;
  }
  return true;
}

const char* positivity_name(Positivity p) {
  switch (p) {
    case Positivity::NonNegative: return "nonnegative";
    case Positivity::HasNegative: return "has-negative";
    default: return "undetermined";
  }
}

Superpolynomial superpolynomial_even(int n, const std::vector<int>& k, const std::set<int>& link_s,
                                     const Options& opt) {
  check_inputs(n, k, link_s);
  Superpolynomial sp;
  sp.n = n;
  sp.k = k;
  sp.link_s = link_s;
  sp.convention = opt.convention;
  sp.in_positive_regime = monotone_positive(k);
  if (!sp.in_positive_regime) {
    sp.warnings.push_back("k is outside the regime k_1 >= ... >= k_{n-1} >= 0; the result need not be a link invariant");
  }
  if (!link_s.empty()) {
    sp.warnings.push_back("nonempty link subset: obstruction and k pairing are experimental");
  }
  if (opt.convention == WeightConvention::AsPrinted) {
    sp.warnings.push_back("as-printed weights: verbatim formula over base-point commuting charts, uncalibrated");
  }

  auto terms = fixed_point_terms(n, k, link_s, opt.convention, opt.execution);
  sp.fixed_points = terms.size();
  for (const auto& t : terms) sp.vanishing_terms += t.vanishes;
  sp.value = opt.execution == Execution::Serial ? sum_terms_serial(terms) : sum_terms_parallel(terms, opt.execution);

  int twist = 0;
  for (int v : k) twist += v;
  if (opt.apply_calibration && opt.convention == WeightConvention::TorusAction) {
    sp.calibration = fixed_calibration();
    sp.image = apply_calibration(sp.value, sp.calibration, twist);
    sp.calibrated = true;
  } else {
    Calibration plain{1, {0, 2, 0}, {0, -2, 2}, {0, 0, 0}};
    sp.calibration = plain;
    sp.image = apply_calibration(sp.value, plain, 0);
  }

  BinomialRational red = sp.image * BinomialRational(polyalg::binomial(homology_vars(), {0, 2, 0}));
  red.normalize();
  if (red.is_polynomial()) sp.reduced = red.numerator();

  try {
    LaurentPoly probe = sp.reduced ? *sp.reduced : polyalg::truncate_series(sp.image, {1, 1, 1}, 40);
    sp.positivity = Positivity::NonNegative;
    for (const auto& [e, c] : probe.terms()) {
      if (c < 0) sp.positivity = Positivity::HasNegative;
    }
  } catch (const ExpansionError&) {
    sp.positivity = Positivity::Undetermined;
  }
  return sp;
}

std::vector<charts::NestedSetPair> detect_degenerate(int n, WeightConvention conv) {
  if (n > 7) throw CapacityError(kModule, "degenerate scan limited to n <= 7", "use n <= 7");
  std::vector<charts::NestedSetPair> out;
  for (const auto& c : charts::all_charts(n)) {
    if (weights::fixed_dim_check(c, conv).dim_t0 > 0) out.push_back(c.label);
  }
  return out;
}

}  // namespace coxlink::localization

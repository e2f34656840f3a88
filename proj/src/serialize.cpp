#include "coxlink/serialize.hpp"

#include "coxlink/error.hpp"

namespace coxlink::serialize {

namespace {

std::string pairs(const std::vector<charts::IndexPair>& ps) {
  std::string out;
  for (const auto& [i, j] : ps) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return out;
}

std::string ints(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

std::string words(const std::vector<std::string>& ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : ",") + (w.empty() ? std::string("1") : w);
  return out;
}

Json pair_list(const std::vector<charts::IndexPair>& ps) {
  Json a = Json::array();
  for (const auto& [i, j] : ps) a.push_back({i, j});
  return a;
}

Json chain_tree(const std::vector<std::set<int>>& chain) {
  Json a = Json::array();
  for (const auto& s : chain) a.push_back(std::vector<int>(s.begin(), s.end()));
  return a;
}

Json gyt_tree(const charts::GYT& g) {
  Json a = Json::array();
  for (const auto& [cell, labels] : g.cells) {
    a.push_back({{"cell", {cell.first, cell.second}}, {"labels", std::vector<int>(labels.begin(), labels.end())}});
  }
  return a;
}

}  // namespace

std::string chart_line(const charts::Chart& c) {
  return "chart " + c.label.encode() + " px=" + pairs(c.px) + " py=" + pairs(c.py) + " nx=" + pairs(c.nx) +
         " ny=" + pairs(c.ny) + " words=" + words(charts::monomial_vector(c)) + " gyt=" + charts::to_gyt(c).encode() +
         " commuting=" + (charts::is_commutative(c) ? "1" : "0");
}

std::string weights_line(const charts::Chart& c, weights::WeightConvention conv) {
  auto wd = weights::weight_data(c, conv);
  std::string tan, ob;
  for (const auto& t : wd.tangent) {
    tan += (tan.empty() ? "" : ",") + std::string(1, charts::side_letter(t.side)) + std::to_string(t.index.first) +
           std::to_string(t.index.second) + ":(" + std::to_string(t.dx) + "," + std::to_string(t.dy) + ")";
  }
  for (const auto& o : wd.obstruction) {
    ob += (ob.empty() ? "" : ",") + std::to_string(o.index.first) + std::to_string(o.index.second) + ":(" +
          std::to_string(o.ox) + "," + std::to_string(o.oy) + ")";
  }
  auto fd = weights::fixed_dim_check(c, conv);
  return "weights " + c.label.encode() + " wx=" + ints(wd.w.wx) + " wy=" + ints(wd.w.wy) + " tangent=" + tan +
         " obstruction=" + ob + " dimT0=" + std::to_string(fd.dim_t0) + " dimOb0=" + std::to_string(fd.dim_ob0);
}

Json chart_tree(const charts::Chart& c) {
  Json words_j = Json::array();
  for (const auto& w : charts::monomial_vector(c)) words_j.push_back(w);
  return {{"label", c.label.encode()},
          {"n", c.n()},
          {"sx", chain_tree(c.label.sx)},
          {"sy", chain_tree(c.label.sy)},
          {"px", pair_list(c.px)},
          {"py", pair_list(c.py)},
          {"nx", pair_list(c.nx)},
          {"ny", pair_list(c.ny)},
          {"mx", c.mx},
          {"my", c.my},
          {"words", words_j},
          {"gyt", gyt_tree(charts::to_gyt(c))},
          {"commuting", charts::is_commutative(c)}};
}

Json weights_tree(const charts::Chart& c, weights::WeightConvention conv) {
  auto wd = weights::weight_data(c, conv);
  Json tan = Json::array(), ob = Json::array();
  for (const auto& t : wd.tangent) {
    tan.push_back({{"index", {t.index.first, t.index.second}},
                   {"side", std::string(1, charts::side_letter(t.side))},
                   {"d", {t.dx, t.dy}}});
  }
  for (const auto& o : wd.obstruction) ob.push_back({{"index", {o.index.first, o.index.second}}, {"o", {o.ox, o.oy}}});
  auto fd = weights::fixed_dim_check(c, conv);
  return {{"label", c.label.encode()},
          {"convention", weights::convention_name(conv)},
          {"wx", wd.w.wx},
          {"wy", wd.w.wy},
          {"tangent", tan},
          {"obstruction", ob},
          {"dimT0", fd.dim_t0},
          {"dimOb0", fd.dim_ob0},
          {"remark_inequality", fd.holds()}};
}

Json poly_tree(const polyalg::LaurentPoly& p) { return {{"variables", p.variables()}, {"poly", p.to_string()}}; }

polyalg::LaurentPoly poly_from_tree(const Json& j) {
  return polyalg::LaurentPoly::parse(j.at("poly").get<std::string>(), j.at("variables").get<std::vector<std::string>>());
}

Json rational_tree(const polyalg::BinomialRational& r) {
  Json den = Json::array();
  for (const auto& [e, m] : r.denominator()) {
    den.push_back({{"binomial", polyalg::binomial(r.variables(), e).to_string()}, {"exponent", e}, {"multiplicity", m}});
  }
  return {{"variables", r.variables()}, {"numerator", r.numerator().to_string()}, {"denominator", den}, {"string", r.to_string()}};
}

polyalg::BinomialRational rational_from_tree(const Json& j) {
  auto vars = j.at("variables").get<std::vector<std::string>>();
  polyalg::BinomialRational r(polyalg::LaurentPoly::parse(j.at("numerator").get<std::string>(), vars));
  for (const auto& d : j.at("denominator")) {
    auto b = polyalg::LaurentPoly::parse(d.at("binomial").get<std::string>(), vars);
    auto e = d.at("exponent").get<polyalg::Exponent>();
    if (!(b == polyalg::binomial(vars, e))) {
      throw ParseError("serialize", "binomial string disagrees with its exponent", 0, "regenerate the record");
    }
    r.divide_by_binomial(e, d.at("multiplicity").get<int>());
  }
  return r;
}

Json superpolynomial_tree(const localization::Superpolynomial& s) {
  Json j;
  j["n"] = s.n;
  j["k"] = s.k;
  j["link_s"] = std::vector<int>(s.link_s.begin(), s.link_s.end());
  j["convention"] = weights::convention_name(s.convention);
  j["value"] = rational_tree(s.value);
  j["image"] = rational_tree(s.image);
  j["calibrated"] = s.calibrated;
  j["calibration"] = s.calibrated ? s.calibration.describe() : "none";
  j["reduced"] = s.reduced ? poly_tree(*s.reduced) : Json(nullptr);
  j["positivity"] = localization::positivity_name(s.positivity);
  j["positive_regime"] = s.in_positive_regime;
  j["fixed_points"] = s.fixed_points;
  j["vanishing_terms"] = s.vanishing_terms;
  j["warnings"] = s.warnings;
  return j;
}

std::string superpolynomial_text(const localization::Superpolynomial& s) {
  std::string k;
  for (int v : s.k) k += (k.empty() ? "" : ",") + std::to_string(v);
  std::string ls;
  for (int v : s.link_s) ls += (ls.empty() ? "" : ",") + std::to_string(v);
  std::string out = "n=" + std::to_string(s.n) + " k=" + k + " link_s=" + ls +
                    " convention=" + weights::convention_name(s.convention) + "\n";
  out += "QTa: " + s.value.to_string() + "\n";
  out += "qta: " + s.image.to_string() + "\n";
  if (s.reduced) out += "reduced: " + s.reduced->to_string() + "\n";
  out += "calibration: " + (s.calibrated ? s.calibration.describe() : std::string("none")) + "\n";
  out += "fixed_points=" + std::to_string(s.fixed_points) + " vanishing=" + std::to_string(s.vanishing_terms) +
         " positivity=" + localization::positivity_name(s.positivity) +
         " positive_regime=" + (s.in_positive_regime ? "yes" : "no") + "\n";
  for (const auto& w : s.warnings) out += "warning: " + w + "\n";
  return out;
}

Json bridge_tree(const bridge::BridgeReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"knot", "T(2," + std::to_string(2 * c.k + 1) + ")"},
                      {"matches", c.matches},
                      {"superpolynomial", c.superpolynomial},
                      {"specialized", c.specialized},
                      {"homfly", c.homfly}});
  }
  Json fits = Json::array();
  for (const auto& s : r.calibrated) fits.push_back(s.describe());
  return {{"candidates", r.candidates}, {"found", r.found}, {"fits", fits},
          {"chosen", r.found ? Json(r.chosen.describe()) : Json(nullptr)}, {"checks", checks},
          {"holds", r.holds()}, {"summary", r.summary()}};
}

Json mfcheck_tree(const mfcheck::SampleReport& r, const mfcheck::NegativeControl* control) {
  Json j = {{"n", r.n},
            {"samples", r.samples},
            {"seed", r.seed},
            {"vanishing_failures", r.vanishing_failures},
            {"containment_failures", r.containment_failures},
            {"counterexamples", r.counterexamples},
            {"passed", r.passed()}};
  if (control) {
    j["negative_control"] = {{"found", control->found}, {"tries", control->tries}, {"dump", control->dump}};
  }
  return j;
}

}  // namespace coxlink::serialize

#pragma once

// Text and tree (JSON) records for charts, weights and computed invariants.
// Polynomials inside tree records are canonical strings, so every record can
// be read back with LaurentPoly::parse.

#include <json.hpp>
#include <string>

#include "coxlink/bridge.hpp"
#include "coxlink/charts.hpp"
#include "coxlink/localization.hpp"
#include "coxlink/mfcheck.hpp"
#include "coxlink/polyalg.hpp"
#include "coxlink/weights.hpp"

namespace coxlink::serialize {

using Json = nlohmann::ordered_json;

/// One line: "chart <label> px=... py=... nx=... ny=... words=... gyt=... commuting=0|1".
std::string chart_line(const charts::Chart& c);
/// One line: "weights <label> wx=... wy=... tangent=... obstruction=... dimT0=.. dimOb0=..".
std::string weights_line(const charts::Chart& c, weights::WeightConvention conv);

Json chart_tree(const charts::Chart& c);
Json weights_tree(const charts::Chart& c, weights::WeightConvention conv);

/// {"variables": [...], "numerator": "<poly>", "denominator": [{"binomial": "<poly>",
///  "exponent": [...], "multiplicity": m}, ...], "string": "<rational>"}
Json rational_tree(const polyalg::BinomialRational& r);
polyalg::BinomialRational rational_from_tree(const Json& j);

Json poly_tree(const polyalg::LaurentPoly& p);
polyalg::LaurentPoly poly_from_tree(const Json& j);

Json superpolynomial_tree(const localization::Superpolynomial& s);
std::string superpolynomial_text(const localization::Superpolynomial& s);

Json bridge_tree(const bridge::BridgeReport& r);
Json mfcheck_tree(const mfcheck::SampleReport& r, const mfcheck::NegativeControl* control);

}  // namespace coxlink::serialize

#include "coxlink/bridge.hpp"

#include "coxlink/error.hpp"
#include "coxlink/homfly.hpp"
#include "coxlink/localization.hpp"

namespace coxlink::bridge {

namespace {

const std::vector<std::string> kAQ{"a", "q"};

std::string mono(int sign, int q, int a) {
  auto m = LaurentPoly::monomial(kAQ, {a, q}, sign);
  return m.to_string();
}

}  // namespace

std::string Specialization::describe() const {
  return "a -> " + mono(a_sign, a_q, a_a) + ", q -> " + mono(1, q_pow, 0) + ", t -> " + mono(t_sign, t_q, t_a);
}

LaurentPoly specialize(const LaurentPoly& reduced, const Specialization& s) {
  polyalg::Substitution sub;
  sub.target = kAQ;
  sub.images["a"] = {s.a_sign, {s.a_a, s.a_q}};
  sub.images["q"] = {1, {0, s.q_pow}};
  sub.images["t"] = {s.t_sign, {s.t_a, s.t_q}};
  return polyalg::substitute(reduced, sub);
}

LaurentPoly reduced_two_strand(int k) {
  auto sp = localization::superpolynomial_even(2, {k}, {}, {});
  if (!sp.reduced) {
    throw InvariantError("bridge", "reduced superpolynomial of T(2," + std::to_string(2 * k + 1) + ") is not a polynomial",
                         "check the localization output");
  }
  return *sp.reduced;
}

LaurentPoly homfly_two_strand(int k) {
  return homfly::homfly_in_q(homfly::homfly(homfly::coxeter_braid(2, {}, {k})));
}

bool BridgeReport::holds() const {
  if (!found) return false;
  for (const auto& c : checks)
    if (!c.matches) return false;
  return true;
}

std::string BridgeReport::summary() const {
  if (!found) {
    return "NEGATIVE: none of " + std::to_string(candidates) +
           " monomial specializations maps T(2,3) and T(2,5) to their HOMFLY-PT polynomials";
  }
  std::string out = "phi: " + chosen.describe() + " (" + std::to_string(calibrated.size()) + " of " +
                    std::to_string(candidates) + " candidates fit T(2,3), T(2,5));";
  for (const auto& c : checks) {
    out += " T(2," + std::to_string(2 * c.k + 1) + ") " + (c.matches ? "ok" : "MISMATCH");
  }
  return out;
}

BridgeReport find_bridge() {
  BridgeReport r;
  const LaurentPoly s1 = reduced_two_strand(1), s2 = reduced_two_strand(2);
  const LaurentPoly h1 = homfly_two_strand(1), h2 = homfly_two_strand(2);
  for (int q_pow : {1, -1})
    for (int a_sign : {1, -1})
      for (int t_sign : {1, -1})
        for (int a_a = -2; a_a <= 2; ++a_a)
          for (int a_q = -2; a_q <= 2; ++a_q)
            for (int t_a = -2; t_a <= 2; ++t_a)
              for (int t_q = -2; t_q <= 2; ++t_q) {
                if (a_a == 0) continue;  // a must stay a genuine variable
                Specialization s{a_sign, a_q, a_a, q_pow, t_sign, t_q, t_a};
                ++r.candidates;
                if (specialize(s1, s) == h1 && specialize(s2, s) == h2) r.calibrated.push_back(s);
              }
  if (r.calibrated.empty()) return r;
  r.found = true;
  r.chosen = r.calibrated.front();
  for (int k : {3, 4}) {
    KnotCheck c;
    c.k = k;
    LaurentPoly sp = reduced_two_strand(k), h = homfly_two_strand(k);
    LaurentPoly img = specialize(sp, r.chosen);
    c.matches = img == h;
    c.superpolynomial = sp.to_string();
    c.specialized = img.to_string();
    c.homfly = h.to_string();
    r.checks.push_back(std::move(c));
  }
  return r;
}

}  // namespace coxlink::bridge

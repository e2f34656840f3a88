#pragma once

// Search for a monomial specialization taking calibrated reduced
// superpolynomials of T(2, 2k+1) to HOMFLY-PT (with z = q - q^{-1}).

#include <string>
#include <vector>

#include "coxlink/polyalg.hpp"

namespace coxlink::bridge {

using polyalg::LaurentPoly;

/// a -> a_sign q^a_q a^a_a, q -> q^q_pow, t -> t_sign q^t_q a^t_a.
struct Specialization {
  int a_sign = 1, a_q = 0, a_a = 1;
  int q_pow = 1;
  int t_sign = 1, t_q = 0, t_a = 0;
  std::string describe() const;
  bool operator==(const Specialization& o) const = default;
};

/// Image of a reduced superpolynomial in (a, q, t) under s, in (a, q).
LaurentPoly specialize(const LaurentPoly& reduced, const Specialization& s);

struct KnotCheck {
  int k = 0;  // T(2, 2k+1)
  bool matches = false;
  std::string superpolynomial;
  std::string specialized;
  std::string homfly;
};

struct BridgeReport {
  std::size_t candidates = 0;
  std::vector<Specialization> calibrated;  // all matching T(2,3) and T(2,5)
  bool found = false;
  Specialization chosen;
  std::vector<KnotCheck> checks;  // T(2,7), T(2,9) under `chosen`
  bool holds() const;
  std::string summary() const;
};

/// Reduced calibrated superpolynomial of T(2, 2k+1) from localization.
LaurentPoly reduced_two_strand(int k);
/// HOMFLY-PT of T(2, 2k+1) in (a, q).
LaurentPoly homfly_two_strand(int k);

BridgeReport find_bridge();

}  // namespace coxlink::bridge

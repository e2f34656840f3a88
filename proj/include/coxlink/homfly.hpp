#pragma once

// Braid words, Coxeter-link braids and the HOMFLY-PT polynomial of braid
// closures via the Ocneanu trace on the Hecke algebra.
//
// Braid grammar (parse_braid):
//
//   braid   := header? body
//   header  := 'strands=' digits
//   body    := token* | '[' (int (',' int)*)? ']'
//   token   := 's' digits ('^-1' | '^1')?
//   int     := ['-'] digits            (sign = crossing sign, |int| = generator)
//
// Tokens are separated by whitespace. Without a header the strand count is
// one more than the largest generator index (1 for an empty word).
//
// Skein normalization: a·P(L+) - a⁻¹·P(L-) = z·P(L0), P(unknot) = 1, with
// s_i a positive crossing.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxlink/polyalg.hpp"

namespace coxlink::homfly {

using polyalg::LaurentPoly;

struct Crossing {
  int index = 1;  // generator s_index, 1 <= index < strands
  int sign = 1;   // +1 or -1
  bool operator==(const Crossing& o) const = default;
};

struct BraidWord {
  int strands = 1;
  std::vector<Crossing> word;

  int writhe() const;
  /// Canonical text, e.g. "strands=3 s2 s1^-1".
  std::string to_string() const;
  /// Permutation of the closure (one-line, 0-based): strand at position p ends at perm[p].
  std::vector<int> permutation() const;
  int components() const;
  void validate() const;
  bool operator==(const BraidWord& o) const = default;
};

BraidWord parse_braid(const std::string& text);

/// cox_S · δ_1^{k_1} ⋯ δ_{n-1}^{k_{n-1}}; cox_S = s_{n-1} ⋯ s_1 with s_i omitted for i ∈ S,
/// δ_i = s_i s_{i+1} ⋯ s_{n-1}^2 ⋯ s_{i+1} s_i.
BraidWord coxeter_braid(int n, const std::set<int>& link_s, const std::vector<int>& k);

/// Variables of homfly output: (a, z).
const std::vector<std::string>& homfly_vars();

/// Element of the Hecke algebra H_n over Z[z^{±1}], T_i^2 = z T_i + 1.
class HeckeElement {
 public:
  using Perm = std::vector<int>;  // one-line notation, 0-based values

  explicit HeckeElement(int n);  // the identity T_e
  int strands() const { return n_; }
  const std::map<Perm, LaurentPoly>& coefficients() const { return coeffs_; }

  /// this · T_i^{sign}, i is 1-based.
  void right_multiply(int i, int sign = 1);
  /// Ocneanu trace as a polynomial in (z, tau), tr(1) = 1, tr(x T_{n-1}) = tau tr(x).
  LaurentPoly trace() const;

 private:
  int n_;
  std::map<Perm, LaurentPoly> coeffs_;
};

/// HOMFLY-PT of the closure; CapacityError for more than 6 strands.
LaurentPoly homfly(const BraidWord& b);

/// Unknot-normalized comparison helper: substitute z -> q - q^{-1}, giving (a, q).
LaurentPoly homfly_in_q(const LaurentPoly& p);

}  // namespace coxlink::homfly

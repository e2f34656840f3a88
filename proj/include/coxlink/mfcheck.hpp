#pragma once

// Exact randomized checks of the determinant functions F_i and the
// Hessenberg containment g⁻¹ X g ∈ 𝔟.

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "coxlink/parallel.hpp"

namespace coxlink::mfcheck {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix zeros(int n);
RationalMatrix identity(int n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Rational determinant(RationalMatrix m);
/// ArithmeticError if singular.
RationalMatrix inverse(const RationalMatrix& m);
bool is_upper_triangular(const RationalMatrix& m);
bool is_hessenberg(const RationalMatrix& g);
std::string to_string(const RationalMatrix& m);

/// det of the (i+1)x(i+1) matrix [g_1 .. g_i | X̂_{i+1}] restricted to rows
/// 1..i+1, where X̂ = X - x_11 Id. Requires 1 <= i <= n-1.
Rational F(int i, const RationalMatrix& X, const RationalMatrix& g);

/// g⁻¹ X g is upper triangular. ArithmeticError if g is singular.
bool conjugate_is_upper(const RationalMatrix& g, const RationalMatrix& X);
/// conjugate_is_upper for Hessenberg g; ArgumentError otherwise.
bool hessenberg_check(const RationalMatrix& g, const RationalMatrix& X);

struct CommutatorEntry {
  int i;
  int j;
  Rational value;
};

/// Entries of [X, Y] on the pairs j - i > 1 and (i, i+1) for i in link_s.
std::vector<CommutatorEntry> commutator_entries(const RationalMatrix& X, const RationalMatrix& Y,
                                                const std::set<int>& link_s = {});

/// Checks F_i|_{g=Id} = x_{i+1,i+1} - x_11 as a polynomial identity. F at g = Id
/// is linear in X, so agreement at 0 and at every unit matrix E_ab (a <= b) proves it.
bool identity_specialization_holds(int n);

/// Sample with Hessenberg g, strictly upper K, X = gK + c Id (so X̂ = gK).
struct Sample {
  RationalMatrix g, K, X;
};
Sample draw_sample(int n, std::uint64_t seed);

struct SampleReport {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  int vanishing_failures = 0;
  int containment_failures = 0;
  std::vector<std::string> counterexamples;  // at most 3 dumps
  bool passed() const { return vanishing_failures == 0 && containment_failures == 0; }
};

SampleReport run_samples(int n, int samples, std::uint64_t seed, Execution ex = Execution::Parallel);

/// Non-Hessenberg g with X̂ on the F = 0 locus whose conjugate is not upper triangular.
struct NegativeControl {
  bool found = false;
  int tries = 0;
  RationalMatrix g, X;
  std::string dump;
};

NegativeControl negative_control(int n, std::uint64_t seed, int max_tries = 200);

}  // namespace coxlink::mfcheck

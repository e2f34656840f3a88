#pragma once

// Closed-form triply graded homology of the two-strand torus links, used as
// a reference for the localization output. All values are in (a, q, t).

#include "coxlink/polyalg.hpp"

namespace coxlink::twostrand {

using polyalg::BinomialRational;
using polyalg::LaurentPoly;

/// sum_{i=0}^{m} q^{2i} (t/q)^{2m-2i}; zero for m < 0.
LaurentPoly dim_H0_P1(int m);
/// sum_{i=0}^{-m-2} q^{2i} (t/q)^{-2m-2i-4}; zero for m > -2.
LaurentPoly dim_H1_P1(int m);

/// sum_{i=0}^{m} q^{2i} (t^2/q^2)^{m-i} + q^{2m} q^2 / (1 - q^2)
BinomialRational dim_V(int m);
/// q^{2m} q^2 / (1 - q^2)
BinomialRational dim_V_prime(int m);
/// sum_{i=0}^{-m-2} q^{2i} (t^2/q^2)^{-m-2-i}
LaurentPoly dim_V_second(int m);

/// T(2, 2n+1): (a/t)^n [H0(n) + t H1(n) + a H0(n-1) + a t H1(n-1)] / (1 - q^2).
BinomialRational homology_T2_odd(int n);

/// T(2, 2n). n >= 0: (a/t)^n (t V_n + a t V_{n-1}) / (1 - q^2);
/// n < 0: (a/t)^n (t V'_n + t^2 V''_n + a t V'_{n-1} + a t^2 V''_{n-1}) / (1 - q^2).
/// n = 0 (two-component unlink) uses the first branch.
BinomialRational homology_T2_even(int n);

/// Parities of t-exponents over the series expansion to total degree `depth`
/// (bit 0: even occurs, bit 1: odd occurs).
int t_parities(const BinomialRational& r, long depth = 40);

}  // namespace coxlink::twostrand

#include "coxlink/twostrand.hpp"

namespace coxlink::twostrand {

namespace {

const std::vector<std::string> kVars{"a", "q", "t"};

LaurentPoly mono(int a, int q, int t) { return LaurentPoly::monomial(kVars, {a, q, t}); }

BinomialRational over_one_minus_q2(const LaurentPoly& p) { return BinomialRational(p, {{0, 2, 0}}); }

BinomialRational rat(const LaurentPoly& p) { return BinomialRational(p); }

}  // namespace

LaurentPoly dim_H0_P1(int m) {
  LaurentPoly r(kVars);
  for (int i = 0; i <= m; ++i) r += mono(0, 2 * i - (2 * m - 2 * i), 2 * m - 2 * i);
  return r;
}

LaurentPoly dim_H1_P1(int m) {
  LaurentPoly r(kVars);
  for (int i = 0; i <= -m - 2; ++i) {
    int e = -2 * m - 2 * i - 4;
    r += mono(0, 2 * i - e, e);
  }
  return r;
}

BinomialRational dim_V(int m) {
  LaurentPoly span(kVars);
  for (int i = 0; i <= m; ++i) span += mono(0, 2 * i - 2 * (m - i), 2 * (m - i));
  return rat(span) + dim_V_prime(m);
}

BinomialRational dim_V_prime(int m) { return over_one_minus_q2(mono(0, 2 * m + 2, 0)); }

LaurentPoly dim_V_second(int m) {
  LaurentPoly r(kVars);
  for (int i = 0; i <= -m - 2; ++i) {
    int e = -m - 2 - i;
    r += mono(0, 2 * i - 2 * e, 2 * e);
  }
  return r;
}

BinomialRational homology_T2_odd(int n) {
  LaurentPoly t = mono(0, 0, 1), a = mono(1, 0, 0);
  LaurentPoly body = dim_H0_P1(n) + t * dim_H1_P1(n) + a * dim_H0_P1(n - 1) + a * t * dim_H1_P1(n - 1);
  BinomialRational r = over_one_minus_q2(mono(n, 0, -n) * body);
  return r.normalize();
}

BinomialRational homology_T2_even(int n) {
  LaurentPoly t = mono(0, 0, 1), a = mono(1, 0, 0), t2 = mono(0, 0, 2);
  BinomialRational body;
  if (n >= 0) {
    body = rat(t) * dim_V(n) + rat(a * t) * dim_V(n - 1);
  } else {
    body = rat(t) * dim_V_prime(n) + rat(t2 * dim_V_second(n)) + rat(a * t) * dim_V_prime(n - 1) +
           rat(a * t2 * dim_V_second(n - 1));
  }
  BinomialRational r = rat(mono(n, 0, -n)) * body * over_one_minus_q2(mono(0, 0, 0));
  return r.normalize();
}

int t_parities(const BinomialRational& r, long depth) {
  auto series = polyalg::truncate_series(r, {1, 1, 1}, depth);
  int bits = 0;
  for (const auto& [e, c] : series.terms()) bits |= (e[2] % 2 == 0) ? 1 : 2;
  return bits;
}

}  // namespace coxlink::twostrand

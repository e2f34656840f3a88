#pragma once

// Exact sparse Laurent polynomials over the integers, and rational functions
// whose denominators are products of binomials (1 - monomial).
//
// Canonical string grammar (also accepted by LaurentPoly::parse):
//
//   poly    := '0' | ['-'] term ( ('+' | '-') term )*
//   term    := coeff | [coeff '*'] monomial
//   monomial:= factor ('*' factor)*
//   factor  := name ['^' ['-'] digits]
//   coeff   := digits
//
// Whitespace between tokens is ignored on input. On output terms are ordered
// by total degree (highest first), ties broken by descending lexicographic
// order of the exponent vector in the polynomial's variable order; factors
// inside a monomial follow the variable order; a unit coefficient is omitted
// unless the term is constant. Example: "-a*Q^2*T + 1".

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace coxlink::polyalg {

using Integer = mpz_class;
using Exponent = std::vector<int>;

/// Signed monomial c * x^e, used as the image of a variable under substitution.
struct Monomial {
  Integer coeff{1};
  Exponent exponent;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> variables);

  static LaurentPoly constant(std::vector<std::string> variables, const Integer& c);
  static LaurentPoly monomial(std::vector<std::string> variables, Exponent e, const Integer& c = 1);
  /// The single variable `name` raised to `power`.
  static LaurentPoly variable(std::vector<std::string> variables, const std::string& name, int power = 1);
  static LaurentPoly parse(const std::string& text, std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Integer coefficient(const Exponent& e) const;
  std::size_t variable_index(const std::string& name) const;

  /// Smallest and largest exponent of variable `index` over all terms (0,0 for zero).
  std::pair<int, int> degree_range(std::size_t index) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  bool operator==(const LaurentPoly& rhs) const;

  LaurentPoly pow(unsigned exponent) const;
  /// Product with the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  void add_term(const Exponent& e, const Integer& c);

  std::string to_string() const;

 private:
  void require_compatible(const LaurentPoly& rhs) const;

  std::vector<std::string> vars_;
  std::map<Exponent, Integer> terms_;
};

/// Variable -> signed monomial in `target` variables. Variables of the source
/// that are absent from `images` but present in `target` map to themselves.
struct Substitution {
  std::vector<std::string> target;
  std::map<std::string, Monomial> images;
};

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s);

/// Integer dot product of an exponent vector with a grading vector.
long grading_value(const Exponent& e, const std::vector<int>& grading);

/// Terms of `p` whose grading value is <= max_degree.
LaurentPoly truncate(const LaurentPoly& p, const std::vector<int>& grading, long max_degree);

/// numerator / prod (1 - x^e)^mult. Factors are stored in canonical
/// orientation: the first nonzero entry of e is positive.
class BinomialRational {
 public:
  BinomialRational() = default;
  explicit BinomialRational(LaurentPoly numerator);
  BinomialRational(LaurentPoly numerator, const std::vector<Exponent>& denominator_factors);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const std::map<Exponent, int>& denominator() const noexcept { return den_; }
  const std::vector<std::string>& variables() const noexcept { return num_.variables(); }
  bool is_polynomial() const noexcept { return den_.empty(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  int denominator_degree() const;

  /// Cancel every denominator factor that divides the numerator exactly.
  BinomialRational& normalize();
  bool is_normalized() const;

  BinomialRational& operator+=(const BinomialRational& rhs);
  BinomialRational& operator*=(const BinomialRational& rhs);
  BinomialRational operator-() const;
  friend BinomialRational operator+(BinomialRational lhs, const BinomialRational& rhs) { return lhs += rhs; }
  friend BinomialRational operator-(BinomialRational lhs, const BinomialRational& rhs) { return lhs += -rhs; }
  friend BinomialRational operator*(BinomialRational lhs, const BinomialRational& rhs) { return lhs *= rhs; }

  /// Equality as rational functions (cross multiplication).
  bool equals(const BinomialRational& rhs) const;

  /// Multiply the denominator by (1 - x^e); e must be nonzero.
  void divide_by_binomial(const Exponent& e, int multiplicity = 1);

  /// prod (1 - x^e)^mult expanded as a polynomial.
  LaurentPoly expanded_denominator() const;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  std::map<Exponent, int> den_;
};

/// Normalized sum and product.
BinomialRational add(const BinomialRational& lhs, const BinomialRational& rhs);
BinomialRational mul(const BinomialRational& lhs, const BinomialRational& rhs);

BinomialRational substitute(const BinomialRational& r, const Substitution& s);

/// Graded expansion of `r` keeping terms with grading value <= max_degree.
/// Factors whose monomial has negative grading are re-oriented first; a factor
/// of grading zero makes the expansion infinite and raises ExpansionError.
LaurentPoly truncate_series(const BinomialRational& r, const std::vector<int>& grading, long max_degree);

/// Exact quotient p / (1 - x^e) if it exists.
bool divide_exact_by_binomial(const LaurentPoly& p, const Exponent& e, LaurentPoly& quotient);

/// (1 - x^e) as a polynomial.
LaurentPoly binomial(const std::vector<std::string>& variables, const Exponent& e);

}  // namespace coxlink::polyalg

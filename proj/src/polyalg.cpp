#include "coxlink/polyalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "coxlink/error.hpp"

namespace coxlink::polyalg {

namespace {

const char* kModule = "polyalg";

int total_degree(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

bool is_zero_exponent(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

Exponent negated(Exponent e) {
  for (int& v : e) v = -v;
  return e;
}

// First nonzero entry positive.
bool is_canonical(const Exponent& e) {
  for (int v : e) {
    if (v != 0) return v > 0;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const Integer& c) {
  LaurentPoly p(std::move(variables));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables, Exponent e, const Integer& c) {
  LaurentPoly p(std::move(variables));
  if (e.size() != p.vars_.size()) {
    throw ArgumentError(kModule, "exponent length does not match variable count", "pass one exponent per variable");
  }
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> variables, const std::string& name, int power) {
  LaurentPoly p(std::move(variables));
  Exponent e(p.vars_.size(), 0);
  e[p.variable_index(name)] = power;
  p.add_term(e, 1);
  return p;
}

std::size_t LaurentPoly::variable_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) {
    throw ArgumentError(kModule, "unknown variable '" + name + "'", "use one of the polynomial's declared variables");
  }
  return static_cast<std::size_t>(it - vars_.begin());
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::pair<int, int> LaurentPoly::degree_range(std::size_t index) const {
  if (terms_.empty()) return {0, 0};
  int lo = terms_.begin()->first.at(index);
  int hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e[index]);
    hi = std::max(hi, e[index]);
  }
  return {lo, hi};
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::require_compatible(const LaurentPoly& rhs) const {
  if (vars_ != rhs.vars_) {
    throw ArgumentError(kModule, "variable lists differ", "bring both operands to the same variable order first");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (vars_.empty() && terms_.empty()) vars_ = rhs.vars_;
  if (rhs.vars_.empty() && rhs.terms_.empty()) return *this;
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.require_compatible(rhs);
  LaurentPoly r(lhs.vars_);
  const std::size_t nv = lhs.vars_.size();
  Exponent e(nv);
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      for (std::size_t i = 0; i < nv; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
  if (terms_.empty() && rhs.terms_.empty()) return true;
  return vars_ == rhs.vars_ && terms_ == rhs.terms_;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result = constant(vars_, 1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift.at(i);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponent, Integer>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    int dx = total_degree(x->first), dy = total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const Exponent& e = t->first;
    Integer c = t->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool constant_term = is_zero_exponent(e);
    bool wrote = false;
    if (c != 1 || constant_term) {
      out << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << vars_[i];
      if (e[i] != 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  LaurentPoly run() {
    LaurentPoly p(vars_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    parse_term(p, negative);
    while (true) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(p, c == '-');
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(kModule, what, pos_, "write polynomials as e.g. '-a*Q^2*T + 1'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  void parse_term(LaurentPoly& p, bool negative) {
    skip();
    if (at_end()) fail("expected a term");
    Integer coeff = 1;
    Exponent e(vars_.size(), 0);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      skip();
      if (at_end() || peek() != '*') need_factor = false;
      else {
        ++pos_;
        skip();
      }
    }
    if (need_factor) {
      parse_factor(e);
      while (true) {
        std::size_t save = pos_;
        skip();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip();
          parse_factor(e);
        } else {
          pos_ = save;
          break;
        }
      }
    }
    p.add_term(e, negative ? Integer(-coeff) : coeff);
  }

  void parse_factor(Exponent& e) {
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable name");
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    int power = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (!at_end() && peek() == '-') {
        neg = true;
        ++pos_;
      }
      power = std::stoi(digits());
      if (neg) power = -power;
    }
    e[static_cast<std::size_t>(it - vars_.begin())] += power;
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, std::vector<std::string> variables) {
  return PolyParser(text, variables).run();
}

// --------------------------------------------------------------- substitution

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s) {
  const auto& src = p.variables();
  std::vector<Monomial> images;
  images.reserve(src.size());
  for (const auto& name : src) {
    auto it = s.images.find(name);
    if (it != s.images.end()) {
      if (it->second.exponent.size() != s.target.size()) {
        throw ArgumentError(kModule, "image of '" + name + "' has wrong length", "give one exponent per target variable");
      }
      images.push_back(it->second);
      continue;
    }
    auto jt = std::find(s.target.begin(), s.target.end(), name);
    if (jt == s.target.end()) {
      throw ArgumentError(kModule, "no image for variable '" + name + "'", "map every source variable to a monomial");
    }
    Monomial m;
    m.exponent.assign(s.target.size(), 0);
    m.exponent[static_cast<std::size_t>(jt - s.target.begin())] = 1;
    images.push_back(std::move(m));
  }

  LaurentPoly out(s.target);
  for (const auto& [e, c] : p.terms()) {
    Exponent f(s.target.size(), 0);
    Integer coeff = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < f.size(); ++j) f[j] += e[i] * images[i].exponent[j];
      const Integer& ci = images[i].coeff;
      if (ci == 1) continue;
      if (ci == -1) {
        if (e[i] % 2 != 0) coeff = -coeff;
        continue;
      }
      if (e[i] < 0) {
        throw ArithmeticError(kModule, "negative power of a non-unit coefficient", "map variables to monomials with coefficient +1 or -1");
      }
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), ci.get_mpz_t(), static_cast<unsigned long>(e[i]));
      coeff *= pw;
    }
    out.add_term(f, coeff);
  }
  return out;
}

long grading_value(const Exponent& e, const std::vector<int>& grading) {
  if (grading.size() != e.size()) {
    throw ArgumentError(kModule, "grading length does not match variable count", "give one grading weight per variable");
  }
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += static_cast<long>(e[i]) * grading[i];
  return s;
}

LaurentPoly truncate(const LaurentPoly& p, const std::vector<int>& grading, long max_degree) {
  LaurentPoly r(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (grading_value(e, grading) <= max_degree) r.add_term(e, c);
  }
  return r;
}

LaurentPoly binomial(const std::vector<std::string>& variables, const Exponent& e) {
  LaurentPoly b = LaurentPoly::constant(variables, 1);
  b.add_term(e, -1);
  return b;
}

bool divide_exact_by_binomial(const LaurentPoly& p, const Exponent& e, LaurentPoly& quotient) {
  std::size_t pivot = e.size();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == e.size()) {
    throw ArithmeticError(kModule, "division by the zero binomial (1 - 1)", "drop zero weights before building factors");
  }
  Exponent dir = e[pivot] > 0 ? e : negated(e);
  const int step = dir[pivot];

  // Write every exponent as rep + j*dir with rep[pivot] in [0, step); p is
  // divisible by (1 - x^dir) iff each class's coefficients sum to zero.
  std::map<Exponent, std::map<int, Integer>> classes;
  for (const auto& [v, c] : p.terms()) {
    int q = v[pivot] >= 0 ? v[pivot] / step : -((-v[pivot] + step - 1) / step);
    Exponent rep = v;
    for (std::size_t i = 0; i < rep.size(); ++i) rep[i] -= q * dir[i];
    classes[rep][q] += c;
  }
  LaurentPoly out(p.variables());
  for (const auto& [rep, series] : classes) {
    Integer running = 0;
    int prev = series.begin()->first;
    for (const auto& [j, c] : series) {
      // Cumulative sums are constant between support points.
      if (running != 0) {
        for (int k = prev; k < j; ++k) {
          Exponent v = rep;
          for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * dir[i];
          out.add_term(v, running);
        }
      }
      running += c;
      prev = j;
    }
    if (running != 0) return false;
  }
  // out = p / (1 - x^dir); flip sign and shift when e was the opposite orientation.
  if (dir != e) {
    // 1 - x^{-d} = -x^{-d}(1 - x^d)  =>  p/(1 - x^{-d}) = -x^d * p/(1 - x^d)
    out = -out.shifted(dir);
  }
  quotient = std::move(out);
  return true;
}

// ------------------------------------------------------------ BinomialRational

BinomialRational::BinomialRational(LaurentPoly numerator) : num_(std::move(numerator)) {}

BinomialRational::BinomialRational(LaurentPoly numerator, const std::vector<Exponent>& denominator_factors)
    : num_(std::move(numerator)) {
  for (const auto& e : denominator_factors) divide_by_binomial(e);
}

void BinomialRational::divide_by_binomial(const Exponent& e, int multiplicity) {
  if (e.size() != num_.variables().size()) {
    throw ArgumentError(kModule, "denominator exponent length does not match variable count", "give one exponent per variable");
  }
  if (is_zero_exponent(e)) {
    throw ArithmeticError(kModule, "denominator factor (1 - 1) is a zero divisor", "exclude zero weights before forming the factor");
  }
  if (multiplicity <= 0) return;
  if (is_canonical(e)) {
    den_[e] += multiplicity;
    return;
  }
  // 1/(1 - x^e) = -x^{-e} / (1 - x^{-e})
  Exponent f = negated(e);
  Exponent shift = f;
  for (int& v : shift) v *= multiplicity;
  num_ = num_.shifted(shift);
  if (multiplicity % 2) num_ = -num_;
  den_[f] += multiplicity;
}

int BinomialRational::denominator_degree() const {
  int s = 0;
  for (const auto& [e, m] : den_) s += m;
  return s;
}

LaurentPoly BinomialRational::expanded_denominator() const {
  LaurentPoly d = LaurentPoly::constant(num_.variables(), 1);
  for (const auto& [e, m] : den_) d *= binomial(num_.variables(), e).pow(static_cast<unsigned>(m));
  return d;
}

BinomialRational& BinomialRational::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    LaurentPoly q;
    while (it->second > 0 && divide_exact_by_binomial(num_, it->first, q)) {
      num_ = std::move(q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
  return *this;
}

bool BinomialRational::is_normalized() const {
  if (num_.is_zero()) return den_.empty();
  LaurentPoly q;
  for (const auto& [e, m] : den_) {
    if (divide_exact_by_binomial(num_, e, q)) return false;
  }
  return true;
}

BinomialRational& BinomialRational::operator+=(const BinomialRational& rhs) {
  if (rhs.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = rhs;
  std::map<Exponent, int> lcd = den_;
  for (const auto& [e, m] : rhs.den_) lcd[e] = std::max(lcd[e], m);
  auto lift = [&](const BinomialRational& r) {
    LaurentPoly p = r.num_;
    for (const auto& [e, m] : lcd) {
      auto it = r.den_.find(e);
      int have = it == r.den_.end() ? 0 : it->second;
      if (m > have) p *= binomial(num_.variables(), e).pow(static_cast<unsigned>(m - have));
    }
    return p;
  };
  LaurentPoly sum = lift(*this) + lift(rhs);
  num_ = std::move(sum);
  den_ = std::move(lcd);
  if (num_.is_zero()) den_.clear();
  return *this;
}

BinomialRational& BinomialRational::operator*=(const BinomialRational& rhs) {
  num_ *= rhs.num_;
  for (const auto& [e, m] : rhs.den_) den_[e] += m;
  if (num_.is_zero()) den_.clear();
  return *this;
}

BinomialRational BinomialRational::operator-() const {
  BinomialRational r = *this;
  r.num_ = -r.num_;
  return r;
}

bool BinomialRational::equals(const BinomialRational& rhs) const {
  if (num_.is_zero() || rhs.num_.is_zero()) return num_.is_zero() && rhs.num_.is_zero();
  std::map<Exponent, int> lcd = den_;
  for (const auto& [e, m] : rhs.den_) lcd[e] = std::max(lcd[e], m);
  auto lift = [&](const BinomialRational& r) {
    LaurentPoly p = r.num_;
    for (const auto& [e, m] : lcd) {
      auto it = r.den_.find(e);
      int have = it == r.den_.end() ? 0 : it->second;
      if (m > have) p *= binomial(r.variables(), e).pow(static_cast<unsigned>(m - have));
    }
    return p;
  };
  return lift(*this) == lift(rhs);
}

std::string BinomialRational::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ")/(";
  bool first = true;
  for (const auto& [e, m] : den_) {
    if (!first) out += "*";
    first = false;
    out += "(" + binomial(num_.variables(), e).to_string() + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out + ")";
}

BinomialRational add(const BinomialRational& lhs, const BinomialRational& rhs) {
  BinomialRational r = lhs;
  r += rhs;
  return r.normalize();
}

BinomialRational mul(const BinomialRational& lhs, const BinomialRational& rhs) {
  BinomialRational r = lhs;
  r *= rhs;
  return r.normalize();
}

BinomialRational substitute(const BinomialRational& r, const Substitution& s) {
  BinomialRational out(substitute(r.numerator(), s));
  for (const auto& [e, m] : r.denominator()) {
    LaurentPoly mono = substitute(LaurentPoly::monomial(r.variables(), e), s);
    const auto& [f, c] = *mono.terms().begin();
    if (c != 1) {
      throw ArithmeticError(kModule, "substitution sends a denominator monomial to a non-unit multiple",
                            "use sign-free images for variables appearing in denominators");
    }
    out.divide_by_binomial(f, m);
  }
  return out;
}

LaurentPoly truncate_series(const BinomialRational& r, const std::vector<int>& grading, long max_degree) {
  const auto& vars = r.variables();
  LaurentPoly acc = r.numerator();
  std::vector<std::pair<Exponent, int>> factors;
  for (const auto& [e, m] : r.denominator()) {
    long g = grading_value(e, grading);
    if (g == 0) {
      throw ExpansionError(kModule, "denominator factor " + binomial(vars, e).to_string() + " has grading zero",
                           "choose a grading that is nonzero on every denominator monomial");
    }
    if (g > 0) {
      factors.emplace_back(e, m);
    } else {
      Exponent f = negated(e);
      for (int i = 0; i < m; ++i) acc = -acc.shifted(f);
      factors.emplace_back(f, m);
    }
  }
  acc = truncate(acc, grading, max_degree);
  for (const auto& [e, m] : factors) {
    const long g = grading_value(e, grading);
    for (int rep = 0; rep < m; ++rep) {
      if (acc.is_zero()) return acc;
      long lo = grading_value(acc.terms().begin()->first, grading);
      for (const auto& [v, c] : acc.terms()) lo = std::min(lo, grading_value(v, grading));
      if (lo > max_degree) return LaurentPoly(vars);
      long top = (max_degree - lo) / g;
      LaurentPoly geo(vars);
      Exponent v(vars.size(), 0);
      for (long j = 0; j <= top; ++j) {
        geo.add_term(v, 1);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += e[i];
      }
      acc = truncate(acc * geo, grading, max_degree);
    }
  }
  return acc;
}

}  // namespace coxlink::polyalg

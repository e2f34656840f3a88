#include "coxlink/homfly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "coxlink/error.hpp"

namespace coxlink::homfly {

namespace {

const char* kModule = "homfly";
const std::vector<std::string> kHeckeVars{"z", "tau"};

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
  throw ParseError(kModule, what, pos, "write braids as 'strands=3 s1 s2^-1' or '[1, -2]'");
}

}  // namespace

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& c : word) w += c.sign;
  return w;
}

std::string BraidWord::to_string() const {
  std::string out = "strands=" + std::to_string(strands);
  for (const auto& c : word) out += " s" + std::to_string(c.index) + (c.sign < 0 ? "^-1" : "");
  return out;
}

std::vector<int> BraidWord::permutation() const {
  // Follow each strand bottom to top.
  std::vector<int> perm(strands);
  for (int p = 0; p < strands; ++p) {
    int pos = p;
    for (const auto& c : word) {
      if (pos == c.index - 1) pos = c.index;
      else if (pos == c.index) pos = c.index - 1;
    }
    perm[p] = pos;
  }
  return perm;
}

int BraidWord::components() const {
  auto perm = permutation();
  std::vector<bool> seen(strands, false);
  int cycles = 0;
  for (int p = 0; p < strands; ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (int q = p; !seen[q]; q = perm[q]) seen[q] = true;
  }
  return cycles;
}

void BraidWord::validate() const {
  if (strands < 1) throw ArgumentError(kModule, "a braid needs at least one strand", "use strands >= 1");
  for (const auto& c : word) {
    if (c.index < 1 || c.index >= strands) {
      throw ArgumentError(kModule,
                          "generator s" + std::to_string(c.index) + " out of range for " + std::to_string(strands) +
                              " strands",
                          "use generators s1..s" + std::to_string(strands - 1) + " or raise strands=");
    }
    if (c.sign != 1 && c.sign != -1) throw ArgumentError(kModule, "crossing sign must be +1 or -1", "fix the word");
  }
}

BraidWord parse_braid(const std::string& text) {
  BraidWord b;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) parse_fail("expected digits", pos);
    if (pos - start > 6) parse_fail("number too large", start);
    return std::stoi(text.substr(start, pos - start));
  };
  int header = -1;
  skip();
  if (text.compare(pos, 8, "strands=") == 0) {
    pos += 8;
    header = number();
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      parse_fail("expected whitespace after the header", pos);
    }
  }
  skip();
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    skip();
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
    } else {
      while (true) {
        skip();
        int sign = 1;
        if (pos < text.size() && text[pos] == '-') {
          sign = -1;
          ++pos;
        }
        std::size_t at = pos;
        int idx = number();
        if (idx == 0) parse_fail("generator index 0", at);
        b.word.push_back({idx, sign});
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ']') {
          ++pos;
          break;
        }
        parse_fail("expected ',' or ']'", pos);
      }
    }
    skip();
    if (pos != text.size()) parse_fail("trailing characters", pos);
  } else {
    while (true) {
      skip();
      if (pos >= text.size()) break;
      if (text[pos] != 's') parse_fail("expected a generator 's<i>'", pos);
      ++pos;
      std::size_t at = pos;
      int idx = number();
      if (idx == 0) parse_fail("generator index 0", at);
      int sign = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (text.compare(pos, 2, "-1") == 0) {
          sign = -1;
          pos += 2;
        } else if (text.compare(pos, 1, "1") == 0) {
          pos += 1;
        } else {
          parse_fail("exponent must be 1 or -1", pos);
        }
      }
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
        parse_fail("expected whitespace between generators", pos);
      }
      b.word.push_back({idx, sign});
    }
  }
  int top = 0;
  for (const auto& c : b.word) top = std::max(top, c.index);
  b.strands = header >= 0 ? header : top + 1;
  b.validate();
  return b;
}

BraidWord coxeter_braid(int n, const std::set<int>& link_s, const std::vector<int>& k) {
  if (n < 1) throw ArgumentError(kModule, "n must be at least 1", "pass a positive strand count");
  if (static_cast<int>(k.size()) != n - 1) {
    throw ArgumentError(kModule, "k must have n - 1 = " + std::to_string(n - 1) + " entries",
                        "pass one exponent per Jucys-Murphy element");
  }
  for (int i : link_s) {
    if (i < 1 || i >= n) throw ArgumentError(kModule, "link subset entry out of range", "use entries in 1..n-1");
  }
  BraidWord b;
  b.strands = n;
  for (int i = n - 1; i >= 1; --i) {
    if (!link_s.count(i)) b.word.push_back({i, 1});
  }
  for (int i = 1; i < n; ++i) {
    std::vector<int> delta;
    for (int j = i; j < n; ++j) delta.push_back(j);
    for (int j = n - 1; j >= i; --j) delta.push_back(j);
    // δ_i is a palindrome, so its inverse just flips every sign.
    int sign = k[i - 1] >= 0 ? 1 : -1;
    for (int r = 0; r < std::abs(k[i - 1]); ++r)
      for (int g : delta) b.word.push_back({g, sign});
  }
  return b;
}

const std::vector<std::string>& homfly_vars() {
  static const std::vector<std::string> v{"a", "z"};
  return v;
}

HeckeElement::HeckeElement(int n) : n_(n) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  coeffs_[id] = LaurentPoly::constant(kHeckeVars, 1);
}

void HeckeElement::right_multiply(int i, int sign) {
  const LaurentPoly z = LaurentPoly::variable(kHeckeVars, "z");
  std::map<Perm, LaurentPoly> out;
  auto add = [&](const Perm& p, const LaurentPoly& c) {
    auto [it, inserted] = out.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [w, c] : coeffs_) {
    Perm ws = w;
    std::swap(ws[i - 1], ws[i]);
    // T_w T_i = T_{ws} if the length goes up, else T_{ws} + z T_w.
    add(ws, c);
    if (w[i - 1] > w[i]) add(w, z * c);
    // T_i^{-1} = T_i - z.
    if (sign < 0) add(w, -(z * c));
  }
  coeffs_ = std::move(out);
}

LaurentPoly HeckeElement::trace() const {
  const LaurentPoly tau = LaurentPoly::variable(kHeckeVars, "tau");
  if (n_ == 1) {
    auto it = coeffs_.find(Perm{0});
    return it == coeffs_.end() ? LaurentPoly(kHeckeVars) : it->second;
  }
  // T_w with n at position j equals T_v T_{n-1} T_{n-2} ⋯ T_j, where v moves n
  // to the end; the Markov property turns T_{n-1} into tau.
  HeckeElement lower(n_ - 1);
  lower.coeffs_.clear();
  const int top = n_ - 1;
  for (const auto& [w, c] : coeffs_) {
    int j = static_cast<int>(std::find(w.begin(), w.end(), top) - w.begin());
    Perm v;
    for (int x : w)
      if (x != top) v.push_back(x);
    HeckeElement piece(n_ - 1);
    piece.coeffs_.clear();
    if (j == top) {
      piece.coeffs_[v] = c;
    } else {
      piece.coeffs_[v] = c * tau;
      for (int g = n_ - 2; g >= j + 1; --g) piece.right_multiply(g);
    }
    for (const auto& [p, d] : piece.coeffs_) {
      auto [it, inserted] = lower.coeffs_.try_emplace(p, d);
      if (!inserted) {
        it->second += d;
        if (it->second.is_zero()) lower.coeffs_.erase(it);
      }
    }
  }
  return lower.trace();
}

LaurentPoly homfly(const BraidWord& b) {
  b.validate();
  if (b.strands > 6) {
    throw CapacityError(kModule, "HOMFLY limited to 6 strands (Hecke dimension n!)", "use at most 6 strands");
  }
  const int n = b.strands;
  HeckeElement h(n);
  for (const auto& c : b.word) h.right_multiply(c.index, c.sign);
  LaurentPoly tr = h.trace();

  // ((a - a^{-1})/z)^{n-1} tau^j = (a - a^{-1})^{n-1-j} z^{j-n+1} a^j, tau = a z / (a - a^{-1}).
  const auto& vars = homfly_vars();
  LaurentPoly a_minus = LaurentPoly::variable(vars, "a") - LaurentPoly::variable(vars, "a", -1);
  LaurentPoly result(vars);
  for (const auto& [e, c] : tr.terms()) {
    int zpow = e[0], j = e[1];
    if (j > n - 1) {
      throw InvariantError(kModule, "trace has tau degree above n - 1", "report this braid");
    }
    LaurentPoly term = LaurentPoly::monomial(vars, {j - b.writhe(), zpow + j - n + 1}, c);
    result += term * a_minus.pow(static_cast<unsigned>(n - 1 - j));
  }
  return result;
}

LaurentPoly homfly_in_q(const LaurentPoly& p) {
  const std::vector<std::string> vars{"a", "q"};
  LaurentPoly z = LaurentPoly::variable(vars, "q") - LaurentPoly::variable(vars, "q", -1);
  LaurentPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    if (e[1] < 0) {
      throw ArithmeticError(kModule, "negative power of z cannot be written in q", "compare knots, not links");
    }
    out += LaurentPoly::monomial(vars, {e[0], 0}, c) * z.pow(static_cast<unsigned>(e[1]));
  }
  return out;
}

}  // namespace coxlink::homfly

#include "coxlink/mfcheck.hpp"

#include <random>
#include <sstream>

#include "coxlink/error.hpp"

namespace coxlink::mfcheck {

namespace {

const char* kModule = "mfcheck";

int dim(const RationalMatrix& m) { return static_cast<int>(m.size()); }

// Entries uniform in {-9..9}; one generator per sample keeps parallel runs reproducible.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  Rational next() { return Rational(dist_(rng_)); }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> dist_{-9, 9};
};

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) { return seed * 1000003ULL + index; }

}  // namespace

RationalMatrix zeros(int n) { return RationalMatrix(n, std::vector<Rational>(n, Rational(0))); }

RationalMatrix identity(int n) {
  auto m = zeros(n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const int n = dim(a);
  auto r = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Rational determinant(RationalMatrix m) {
  const int n = dim(m);
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const int n = dim(m);
  RationalMatrix a = m, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ArithmeticError(kModule, "matrix is singular", "draw another g");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

bool is_upper_triangular(const RationalMatrix& m) {
  for (int i = 0; i < dim(m); ++i)
    for (int j = 0; j < i; ++j)
      if (m[i][j] != 0) return false;
  return true;
}

bool is_hessenberg(const RationalMatrix& g) {
  for (int i = 0; i < dim(g); ++i)
    for (int j = 0; j + 1 < i; ++j)
      if (g[i][j] != 0) return false;
  return true;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < dim(m); ++i) {
    out << (i ? "; " : "");
    for (int j = 0; j < dim(m); ++j) out << (j ? " " : "") << m[i][j].get_str();
  }
  out << "]";
  return out.str();
}

Rational F(int i, const RationalMatrix& X, const RationalMatrix& g) {
  const int n = dim(X);
  if (i < 1 || i > n - 1) {
    throw ArgumentError(kModule, "F_i needs 1 <= i <= n-1, got i = " + std::to_string(i), "pick i in range");
  }
  RationalMatrix m(i + 1, std::vector<Rational>(i + 1));
  for (int r = 0; r <= i; ++r) {
    for (int c = 0; c < i; ++c) m[r][c] = g[r][c];
    m[r][i] = X[r][i] - (r == i ? X[0][0] : Rational(0));
  }
  return determinant(std::move(m));
}

bool conjugate_is_upper(const RationalMatrix& g, const RationalMatrix& X) {
  return is_upper_triangular(multiply(inverse(g), multiply(X, g)));
}

bool hessenberg_check(const RationalMatrix& g, const RationalMatrix& X) {
  if (!is_hessenberg(g)) throw ArgumentError(kModule, "g is not Hessenberg", "zero the entries below the subdiagonal");
  return conjugate_is_upper(g, X);
}

std::vector<CommutatorEntry> commutator_entries(const RationalMatrix& X, const RationalMatrix& Y,
                                                const std::set<int>& link_s) {
  const int n = dim(X);
  auto xy = multiply(X, Y), yx = multiply(Y, X);
  std::vector<CommutatorEntry> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) out.push_back({i, j, xy[i - 1][j - 1] - yx[i - 1][j - 1]});
  for (int i : link_s) {
    if (i < 1 || i >= n) throw ArgumentError(kModule, "link subset entry out of range", "use entries in 1..n-1");
    out.push_back({i, i + 1, xy[i - 1][i] - yx[i - 1][i]});
  }
  return out;
}

bool identity_specialization_holds(int n) {
  auto g = identity(n);
  std::vector<RationalMatrix> points{zeros(n)};
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto e = zeros(n);
      e[a][b] = 1;
      points.push_back(e);
    }
  for (const auto& X : points)
    for (int i = 1; i < n; ++i)
      if (F(i, X, g) != X[i][i] - X[0][0]) return false;
  return true;
}

Sample draw_sample(int n, std::uint64_t seed) {
  Sampler s(seed);
  Sample out;
  while (true) {
    out.g = zeros(n);
    for (int i = 0; i < n; ++i)
      for (int j = std::max(0, i - 1); j < n; ++j) out.g[i][j] = s.next();
    if (determinant(out.g) != 0) break;
  }
  out.K = zeros(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.K[i][j] = s.next();
  Rational c = s.next();
  out.X = multiply(out.g, out.K);
  for (int i = 0; i < n; ++i) out.X[i][i] += c;
  return out;
}

SampleReport run_samples(int n, int samples, std::uint64_t seed, Execution ex) {
  if (n < 2) throw ArgumentError(kModule, "need n >= 2", "F_i needs at least one index");
  struct Outcome {
    bool vanish = true, contain = true;
    std::string dump;
  };
  auto outcomes = parallel_map(
      static_cast<std::size_t>(samples),
      [&](std::size_t idx) {
        Outcome o;
        auto s = draw_sample(n, sample_seed(seed, idx));
        for (int i = 1; i < n; ++i) o.vanish = o.vanish && F(i, s.X, s.g) == 0;
        o.contain = hessenberg_check(s.g, s.X);
        if (!o.vanish || !o.contain) o.dump = "sample " + std::to_string(idx) + ": g=" + to_string(s.g) + " X=" + to_string(s.X);
        return o;
      },
      ex);
  SampleReport r;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  for (const auto& o : outcomes) {
    r.vanishing_failures += !o.vanish;
    r.containment_failures += !o.contain;
    if (!o.dump.empty() && r.counterexamples.size() < 3) r.counterexamples.push_back(o.dump);
  }
  return r;
}

NegativeControl negative_control(int n, std::uint64_t seed, int max_tries) {
  if (n < 3) throw ArgumentError(kModule, "a non-Hessenberg g needs n >= 3", "use n >= 3");
  NegativeControl out;
  for (int t = 0; t < max_tries; ++t) {
    ++out.tries;
    Sampler s(sample_seed(seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(t)));
    auto g = zeros(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g[i][j] = s.next();
    if (g[2][0] == 0) g[2][0] = 1;
    if (determinant(g) == 0) continue;
    // Column j of X̂ (j >= 1) is a combination of g's first j columns cut to
    // rows 0..j, so every F_i vanishes; X = X̂ + c Id stays upper triangular.
    auto X = zeros(n);
    for (int j = 1; j < n; ++j)
      for (int l = 0; l < j; ++l) {
        Rational coef = s.next();
        for (int r = 0; r <= j; ++r) X[r][j] += coef * g[r][l];
      }
    Rational c = s.next();
    for (int i = 0; i < n; ++i) X[i][i] += c;
    bool all_zero = true;
    for (int i = 1; i < n; ++i) all_zero = all_zero && F(i, X, g) == 0;
    if (!all_zero) continue;
    if (!conjugate_is_upper(g, X)) {
      out.found = true;
      out.g = g;
      out.X = X;
      out.dump = "g=" + to_string(g) + " X=" + to_string(X);
      return out;
    }
  }
  return out;
}

}  // namespace coxlink::mfcheck

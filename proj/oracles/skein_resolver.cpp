#include "skein_resolver.hpp"

#include <map>
#include <stdexcept>

namespace coxlink::oracles {

namespace {

using polyalg::LaurentPoly;
using Word = std::vector<homfly::Crossing>;

const std::vector<std::string> kVars{"a", "z"};

LaurentPoly mono(int a, int z, long c = 1) { return LaurentPoly::monomial(kVars, {a, z}, c); }

// (a - a^{-1}) / z: the value of the 2-component unlink.
LaurentPoly unlink_factor() { return mono(1, -1) - mono(-1, -1); }

struct Walk {
  int components = 0;
  int first_bad = -1;  // crossing first met from below, or -1 if descending
};

// Traverse the closure component by component (ordered by smallest bottom
// position, starting there). A diagram whose every crossing is first met on
// the over strand is descending, hence an unlink.
Walk walk(int strands, const Word& w) {
  Walk out;
  std::vector<bool> start_seen(strands, false);
  std::vector<bool> crossing_seen(w.size(), false);
  for (int base = 0; base < strands; ++base) {
    if (start_seen[base]) continue;
    ++out.components;
    int pos = base;
    do {
      start_seen[pos] = true;
      for (std::size_t l = 0; l < w.size(); ++l) {
        const auto& c = w[l];
        int left = c.index - 1, right = c.index;
        if (pos != left && pos != right) continue;
        // Positive crossing: the strand travelling left -> right passes over.
        bool over = (pos == left) == (c.sign > 0);
        if (!crossing_seen[l]) {
          crossing_seen[l] = true;
          if (!over && out.first_bad < 0) out.first_bad = static_cast<int>(l);
        }
        pos = pos == left ? right : left;
      }
    } while (pos != base);
  }
  return out;
}

LaurentPoly resolve(int strands, const Word& w, int depth) {
  if (depth > 64) throw std::runtime_error("skein recursion too deep");
  Walk info = walk(strands, w);
  if (info.first_bad < 0) return unlink_factor().pow(static_cast<unsigned>(info.components - 1));
  const std::size_t p = static_cast<std::size_t>(info.first_bad);
  Word switched = w, smoothed = w;
  switched[p].sign = -switched[p].sign;
  smoothed.erase(smoothed.begin() + static_cast<long>(p));
  LaurentPoly other = resolve(strands, switched, depth + 1);
  LaurentPoly zero = resolve(strands, smoothed, depth + 1);
  if (w[p].sign > 0) {
    // P+ = a^{-2} P- + a^{-1} z P0
    return mono(-2, 0) * other + mono(-1, 1) * zero;
  }
  // P- = a^2 P+ - a z P0
  return mono(2, 0) * other - mono(1, 1) * zero;
}

}  // namespace

LaurentPoly skein_homfly(const homfly::BraidWord& b) {
  b.validate();
  if (b.word.size() > 12) throw std::runtime_error("skein oracle limited to 12 crossings");
  return resolve(b.strands, b.word, 0);
}

}  // namespace coxlink::oracles

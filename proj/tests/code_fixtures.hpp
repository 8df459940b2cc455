#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "bmf/braid.hpp"
#include "bmf/codes.hpp"

namespace bmf::codes {

// Simple path codes with at least one interior symbol, covering every start
// and end case, crossings of h_s in both directions, and arcs that wind
// around a point.
inline const std::vector<std::pair<int, const char*>> kArcs = {
    {3, "q0, h1, q2^-1"},
    {3, "q2, h1^-1, q0^-1"},
    {3, "q0, l1, q2^-1"},
    {3, "q2, l1^-1, q0^-1"},
    {3, "q1, h0^-1, o3, l0, l1, o1^-1, h1^-1, h0^-1, o3, l0, l1, q2^-1"},
    {3, "q1, l2, o2^-1, h2^-1, h1^-1, q0^-1"},
    {3, "q1, h2, o2, l2^-1, l1^-1, q0^-1"},
    {4, "q0, h1, h2, o2, l2^-1, o1^-1, h1^-1, o0, l1, l2, q3^-1"},
    {4, "q0, h1, h2, q3^-1"},
    {4, "q1, l0^-1, o4^-1, h0, h1, h2, q3^-1"},
    {4, "q3, h2^-1, h1^-1, o0, l1, q2^-1"},
    {4, "q2, h3, o3, l3^-1, l2^-1, l1^-1, l0^-1, o4^-1, h0, q1^-1"},
};

inline FreeWord cyclic_reduce(FreeWord w) {
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  return w;
}

inline bool free_conjugate(const FreeWord& a_in, const FreeWord& b_in) {
  const FreeWord a = cyclic_reduce(a_in);
  const FreeWord b = cyclic_reduce(b_in);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    FreeWord c(a.begin() + r, a.end());
    c.insert(c.end(), a.begin(), a.begin() + r);
    if (c == b) return true;
  }
  return false;
}

// Class of a closed code in the free group, ignoring the base point.
inline FreeWord l_word(const Code& c) {
  FreeWord w;
  for (const auto& s : c) {
    if (s.kind == SymbolKind::L) append_reduced(w, s.sign * (s.index + 1));
  }
  return w;
}

// Finds beta with (f1 f2)beta conjugate to the boundary loop of the arc; the
// full twist about that curve is then beta^-1 X_1^2 beta.
inline std::optional<BraidWord> arc_conjugator(const Code& path, int p, int max_len) {
  const FreeWord target = l_word(r_codes(path, p, 1, 2).r_sigma);
  std::vector<int> w;
  std::optional<BraidWord> found;
  std::function<void(int)> rec = [&](int left) {
    if (found) return;
    const BraidWord b = BraidWord::from_ints(p, w);
    const ArtinImage im = artin_image(b);
    if (free_conjugate(free_concat(im.image(1), im.image(2)), target)) {
      found = b;
      return;
    }
    if (left == 0) return;
    for (int g = -(p - 1); g <= p - 1; ++g) {
      if (g == 0 || (!w.empty() && w.back() == -g)) continue;
      w.push_back(g);
      rec(left - 1);
      w.pop_back();
    }
  };
  for (int len = 0; len <= max_len && !found; ++len) rec(len);
  return found;
}

}  // namespace bmf::codes

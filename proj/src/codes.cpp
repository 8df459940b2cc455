#include "bmf/codes.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "bmf/error.hpp"

namespace bmf::codes {

CodeSymbol u0(int sign) { return {SymbolKind::U, 0, sign}; }
CodeSymbol o(int index, int sign) { return {SymbolKind::O, index, sign}; }
CodeSymbol h(int index, int sign) { return {SymbolKind::H, index, sign}; }
CodeSymbol l(int index, int sign) { return {SymbolKind::L, index, sign}; }
CodeSymbol q(int index, int sign) { return {SymbolKind::Q, index, sign}; }

namespace {

bool is_marker(const CodeSymbol& s) { return s.kind == SymbolKind::U || s.kind == SymbolKind::Q; }

char kind_char(SymbolKind k) {
  switch (k) {
    case SymbolKind::U: return 'u';
    case SymbolKind::O: return 'o';
    case SymbolKind::H: return 'h';
    case SymbolKind::L: return 'l';
    case SymbolKind::Q: return 'q';
  }
  return '?';
}

// ---- regions of the cut disc ------------------------------------------------

struct Region {
  bool upper;
  int k;  // -1..p-1
  friend bool operator==(const Region&, const Region&) = default;
};

void check_symbol_range(const CodeSymbol& s, int p) {
  bool ok = true;
  switch (s.kind) {
    case SymbolKind::U: ok = s.index == 0; break;
    case SymbolKind::O: ok = s.index >= -1 && s.index <= p - 1; break;
    case SymbolKind::H:
    case SymbolKind::L:
    case SymbolKind::Q: ok = s.index >= 0 && s.index <= p - 1; break;
  }
  if (!ok || (s.sign != 1 && s.sign != -1)) {
    throw InputError(std::string("code symbol ") + kind_char(s.kind) + std::to_string(s.index) +
                     " out of range for p = " + std::to_string(p));
  }
}

// Region on the negative side of a crossing symbol (where a +1 crossing starts).
Region negative_side(const CodeSymbol& s) {
  switch (s.kind) {
    case SymbolKind::O: return {true, s.index};
    case SymbolKind::H: return {true, s.index - 1};
    case SymbolKind::L: return {false, s.index - 1};
    default: break;
  }
  throw InputError("not a crossing symbol");
}

Region positive_side(const CodeSymbol& s) {
  switch (s.kind) {
    case SymbolKind::O: return {false, s.index};
    case SymbolKind::H: return {true, s.index};
    case SymbolKind::L: return {false, s.index};
    default: break;
  }
  throw InputError("not a crossing symbol");
}

Region source(const CodeSymbol& s) { return s.sign > 0 ? negative_side(s) : positive_side(s); }
Region target(const CodeSymbol& s) { return s.sign > 0 ? positive_side(s) : negative_side(s); }

bool is_quadrant_of(const Region& r, int point) { return r.k == point || r.k == point - 1; }

// Walks the interior symbols starting from `start`; returns the final region.
Region walk(const Code& code, std::size_t first, std::size_t last, Region start) {
  Region cur = start;
  for (std::size_t i = first; i < last; ++i) {
    if (!(source(code[i]) == cur)) {
      throw InputError("inconsistent code: symbol " + std::to_string(i) +
                       " does not leave the current region");
    }
    cur = target(code[i]);
  }
  return cur;
}

// ---- region boundaries, counterclockwise ------------------------------------

struct Feature {
  enum class Type { Edge, Corner, Boundary } type;
  SymbolKind kind = SymbolKind::U;  // for edges
  int index = 0;                    // edge index or corner point
  friend bool operator==(const Feature&, const Feature&) = default;
};

std::vector<Feature> boundary_ccw(const Region& r, int p) {
  using T = Feature::Type;
  std::vector<Feature> f;
  const int k = r.k;
  if (r.upper) {
    if (k >= 0) f.push_back({T::Corner, SymbolKind::U, k});
    f.push_back({T::Edge, SymbolKind::O, k});
    if (k + 1 <= p - 1) {
      f.push_back({T::Corner, SymbolKind::U, k + 1});
      f.push_back({T::Edge, SymbolKind::H, k + 1});
    }
    f.push_back({T::Boundary, SymbolKind::U, 0});
    if (k >= 0) f.push_back({T::Edge, SymbolKind::H, k});
  } else {
    if (k + 1 <= p - 1) f.push_back({T::Corner, SymbolKind::U, k + 1});
    f.push_back({T::Edge, SymbolKind::O, k});
    if (k >= 0) {
      f.push_back({T::Corner, SymbolKind::U, k});
      f.push_back({T::Edge, SymbolKind::L, k});
    }
    f.push_back({T::Boundary, SymbolKind::U, 0});
    if (k + 1 <= p - 1) f.push_back({T::Edge, SymbolKind::L, k + 1});
  }
  return f;
}

Feature edge_of(const CodeSymbol& s) { return {Feature::Type::Edge, s.kind, s.index}; }

Region across(const Feature& edge, const Region& from) {
  const CodeSymbol s{edge.kind, edge.index, 1};
  const Region a = negative_side(s);
  return a == from ? positive_side(s) : a;
}

struct PathView {
  const Code& code;
  int start;
  int end;
};

struct Exit {
  Feature feature;
  int at;  // code position of the exit crossing, or -1 for a corner
};

// Continues the strand through crossing `x` into region r.
Exit exit_into(const PathView& pv, int x, const Region& r) {
  const int n = static_cast<int>(pv.code.size());
  int t;
  if (target(pv.code[x]) == r) {
    t = x + 1;
  } else if (source(pv.code[x]) == r) {
    t = x - 1;
  } else {
    throw InputError("crossing is not adjacent to the region");
  }
  if (t == 0) return {{Feature::Type::Corner, SymbolKind::U, pv.start}, -1};
  if (t == n - 1) return {{Feature::Type::Corner, SymbolKind::U, pv.end}, -1};
  return {edge_of(pv.code[t]), t};
}

// True iff crossing x precedes crossing y along `edge` in the counterclockwise
// boundary order of region r. Both strands are followed into r until they
// separate; non-crossing of the chords fixes the order.
bool precedes(const PathView& pv, int p, Region r, Feature edge, int x, int y, int depth = 0) {
  if (depth > static_cast<int>(pv.code.size()) + 2) {
    throw InputError("path code is not a simple arc (strands never separate)");
  }
  const Exit ex = exit_into(pv, x, r);
  const Exit ey = exit_into(pv, y, r);
  if (!(ex.feature == ey.feature)) {
    const auto b = boundary_ccw(r, p);
    const int n = static_cast<int>(b.size());
    auto pos = [&](const Feature& f) {
      const int base = static_cast<int>(std::find(b.begin(), b.end(), edge) - b.begin());
      const int at = static_cast<int>(std::find(b.begin(), b.end(), f) - b.begin());
      if (base == n || at == n) throw InputError("feature not on region boundary");
      return (at - base + n) % n;
    };
    return pos(ex.feature) > pos(ey.feature);
  }
  if (ex.feature.type != Feature::Type::Edge || ex.at == ey.at) {
    throw InputError("path code is not a simple arc");
  }
  return precedes(pv, p, across(ex.feature, r), ex.feature, ex.at, ey.at, depth + 1);
}

// ---- path helpers -------------------------------------------------------------

struct PathInfo {
  int start;
  int end;
  CodeSymbol a2;       // actual or virtual for frame segments
  CodeSymbol a_last;   // a_{n-1}, actual or virtual
  Code interior;       // a_2 .. a_{n-1}
  bool frame_segment;  // length-two code
};

PathInfo analyze_path(const Code& path, int p) {
  check_path(path, p);
  PathInfo info;
  info.start = path.front().index;
  info.end = path.back().index;
  info.interior.assign(path.begin() + 1, path.end() - 1);
  info.frame_segment = info.interior.empty();
  if (info.frame_segment) {
    // A frame segment is pushed slightly into the upper half-plane.
    if (info.end == info.start + 1) {
      info.a2 = h(info.start + 1, 1);
      info.a_last = h(info.end - 1, 1);
    } else {
      info.a2 = h(info.start - 1, -1);
      info.a_last = h(info.end + 1, -1);
    }
  } else {
    info.a2 = info.interior.front();
    info.a_last = info.interior.back();
  }
  return info;
}

std::array<CodeSymbol, 4> b_plus(int i, const CodeSymbol& a2) {
  if (a2 == h(i - 1, -1)) return {o(i - 1), l(i), o(i, -1), h(i, -1)};
  if (a2 == l(i - 1, -1)) return {l(i), o(i, -1), h(i, -1), o(i - 1)};
  if (a2 == l(i + 1, 1)) return {o(i, -1), h(i, -1), o(i - 1), l(i)};
  if (a2 == h(i + 1, 1)) return {h(i, -1), o(i - 1), l(i), o(i, -1)};
  throw InputError("second symbol of the path code is not one of the four start cases");
}

std::array<CodeSymbol, 4> b_minus(int j, const CodeSymbol& a) {
  if (a == h(j - 1, 1)) return {o(j - 1), l(j), o(j, -1), h(j, -1)};
  if (a == l(j - 1, 1)) return {l(j), o(j, -1), h(j, -1), o(j - 1)};
  if (a == l(j + 1, -1)) return {o(j, -1), h(j, -1), o(j - 1), l(j)};
  if (a == h(j + 1, -1)) return {h(j, -1), o(j - 1), l(j), o(j, -1)};
  throw InputError("penultimate symbol of the path code is not one of the four end cases");
}

Code as_code(const std::array<CodeSymbol, 4>& b) { return Code(b.begin(), b.end()); }

Code reverse_path(const Code& path) {
  Code out;
  out.reserve(path.size());
  out.push_back(q(path.back().index, 1));
  for (std::size_t i = path.size() - 2; i >= 1; --i) out.push_back(path[i].inverse());
  out.push_back(q(path.front().index, -1));
  return out;
}

struct Pieces {
  Code b_plus;
  Code b_minus;
};

Pieces pieces(const PathInfo& info) {
  return {as_code(b_plus(info.start, info.a2)),
          as_code(b_minus(info.end, info.a_last))};
}

// r_sigma = A b_- A^{-1} b_+, A = (a_2 .. a_{n-1})
Code r_sigma_of(const PathInfo& info, const Pieces& pc) {
  const Code& a = info.interior;
  return concat(concat(concat(a, pc.b_minus), inverse(a)), pc.b_plus);
}

struct SplitLoops {
  Code r_k;    // c+ b- c+^{-1} c-^{-1} b+ c-
  Code outer;  // c+ b- c+^{-1}
  Code inner;  // c-^{-1} b+ c-
};

// kpos: 0-based position of a_k in the full path code.
SplitLoops split_at(const PathInfo& info, const Pieces& pc, int kpos) {
  const Code& a = info.interior;
  // interior index of a_k is kpos - 1; c- = a[0 .. kpos-1], c+ = a[kpos ..]
  const Code c_minus(a.begin(), a.begin() + kpos);
  const Code c_plus(a.begin() + kpos, a.end());
  SplitLoops s;
  s.outer = concat(concat(c_plus, pc.b_minus), inverse(c_plus));
  s.inner = concat(concat(inverse(c_minus), pc.b_plus), c_minus);
  s.r_k = concat(s.outer, s.inner);
  return s;
}

// R_nu(sigma, k) = (outer inner)^mu (inner outer)^{-mu}; for mu = 1 this is
// the commutator [outer, inner].
Code r_nu_of(const SplitLoops& s, int nu) {
  const int mu = nu / 2;
  const Code ba = concat(s.outer, s.inner);
  const Code ab = concat(s.inner, s.outer);
  return reduce(concat(power(ba, mu), power(ab, -mu)));
}

}  // namespace

// ---- public API -------------------------------------------------------------

Code parse_code(int p, std::string_view text) {
  Code out;
  std::size_t pos = 0;
  int token_no = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    std::size_t offset = pos;
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) {
      tok.remove_prefix(1);
      ++offset;
    }
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    auto fail = [&](const std::string& why) {
      throw InputError("code token " + std::to_string(token_no) + " at offset " +
                       std::to_string(offset) + " ('" + std::string(tok) + "'): " + why);
    };
    if (tok.empty()) {
      if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) break;
      fail("empty symbol");
    }
    CodeSymbol s;
    switch (tok.front()) {
      case 'u': s.kind = SymbolKind::U; break;
      case 'o': s.kind = SymbolKind::O; break;
      case 'h': s.kind = SymbolKind::H; break;
      case 'l': s.kind = SymbolKind::L; break;
      case 'q': s.kind = SymbolKind::Q; break;
      default: fail("unknown symbol letter");
    }
    std::size_t i = 1;
    if (i < tok.size() && tok[i] == '_') ++i;
    const std::size_t digits_begin = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i == digits_begin) fail("missing index");
    s.index = std::stoi(std::string(tok.substr(digits_begin, i - digits_begin)));
    s.sign = 1;
    if (i < tok.size()) {
      std::string_view rest = tok.substr(i);
      if (rest == "^-1" || rest == "^{-1}") {
        s.sign = -1;
      } else if (rest != "^1" && rest != "^+1" && rest != "^{1}") {
        fail("malformed exponent");
      }
    }
    if (s.kind == SymbolKind::O && s.index == p) s.index = -1;
    try {
      check_symbol_range(s, p);
    } catch (const InputError& e) {
      fail(e.what());
    }
    out.push_back(s);
    ++token_no;
    pos = comma + 1;
  }
  return out;
}

std::string to_string(const Code& code, int p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) os << ", ";
    const auto& s = code[i];
    os << kind_char(s.kind) << (s.kind == SymbolKind::O && s.index == -1 ? p : s.index);
    if (s.sign < 0) os << "^-1";
  }
  return os.str();
}

Code concat(const Code& a, const Code& b) {
  Code out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Code inverse(const Code& c) {
  Code out;
  out.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Code power(const Code& c, int n) {
  const Code base = n >= 0 ? c : inverse(c);
  Code out;
  for (int i = 0; i < std::abs(n); ++i) out = concat(out, base);
  return out;
}

Code reduce(const Code& code) {
  Code out;
  out.reserve(code.size());
  for (const auto& s : code) {
    if (!out.empty() && !is_marker(s) && !is_marker(out.back()) && out.back() == s.inverse()) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

bool is_reduced(const Code& code) { return reduce(code).size() == code.size(); }

CodeShape shape_of(const Code& code) {
  if (code.size() >= 2 && code.front() == u0(1) && code.back() == u0(-1)) return CodeShape::Loop;
  if (code.size() >= 2 && code.front().kind == SymbolKind::Q && code.front().sign == 1 &&
      code.back().kind == SymbolKind::Q && code.back().sign == -1) {
    return CodeShape::Path;
  }
  throw InputError("code is neither a loop (u0 ... u0^-1) nor a path (q_i ... q_j^-1)");
}

bool codes_equal(const Code& a, const Code& b) {
  const CodeShape sa = shape_of(a);
  const CodeShape sb = shape_of(b);
  if (sa != sb) throw InputError("cannot compare a loop code with a path code");
  if (sa == CodeShape::Path &&
      (a.front().index != b.front().index || a.back().index != b.back().index)) {
    throw InputError("path codes have different endpoints");
  }
  return reduce(a) == reduce(b);
}

Code frame_loop(int s, int p) {
  if (s < 0 || s > p - 1) throw InputError("frame_loop index out of range 0..p-1");
  return {u0(1), o(s - 1), l(s), o(s, -1), h(s, -1), u0(-1)};
}

Code frame_path(int j, int p) {
  if (j < 1 || j > p - 1) throw InputError("frame_path index out of range 1..p-1");
  return {q(j - 1, 1), q(j, -1)};
}

void check_loop(const Code& loop, int p) {
  for (const auto& s : loop) check_symbol_range(s, p);
  if (shape_of(loop) != CodeShape::Loop) throw InputError("not a loop code");
  for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
    if (is_marker(loop[i])) throw InputError("loop code has an interior marker symbol");
  }
  if (loop.size() == 2) return;
  const Region start = source(loop[1]);
  if (!start.upper) throw InputError("loop code must start in the upper half (u0 side)");
  const Region end = walk(loop, 1, loop.size() - 1, start);
  if (!(end == start)) throw InputError("loop code does not return to its base region");
}

void check_path(const Code& path, int p) {
  for (const auto& s : path) check_symbol_range(s, p);
  if (shape_of(path) != CodeShape::Path) throw InputError("not a path code");
  const int i = path.front().index;
  const int j = path.back().index;
  if (i == j) throw InputError("path endpoints must differ");
  for (std::size_t t = 1; t + 1 < path.size(); ++t) {
    if (is_marker(path[t])) throw InputError("path code has an interior marker symbol");
  }
  if (path.size() == 2) {
    if (std::abs(i - j) != 1) throw InputError("a length-two path code must join adjacent points");
    return;
  }
  const CodeSymbol& a2 = path[1];
  const CodeSymbol& an1 = path[path.size() - 2];
  const bool start_ok = a2 == h(i - 1, -1) || a2 == l(i - 1, -1) || a2 == h(i + 1, 1) ||
                        a2 == l(i + 1, 1);
  const bool end_ok = an1 == h(j - 1, 1) || an1 == l(j - 1, 1) || an1 == h(j + 1, -1) ||
                      an1 == l(j + 1, -1);
  if (!start_ok) throw InputError("second symbol violates the start condition");
  if (!end_ok) throw InputError("penultimate symbol violates the end condition");
  const Region start = source(a2);
  if (!is_quadrant_of(start, i)) throw InputError("path does not leave from its start point");
  const Region end = walk(path, 1, path.size() - 1, start);
  if (!is_quadrant_of(end, j)) throw InputError("path does not arrive at its end point");
  if (!is_reduced(path)) throw InputError("path code is not reduced");
}

int sign_of(const Code& path, int p) {
  const PathInfo info = analyze_path(path, p);
  const int i = info.start;
  if (info.a2 == h(i - 1, -1) || info.a2 == l(i - 1, -1)) return 1;
  if (info.a2 == h(i + 1, 1) || info.a2 == l(i + 1, 1)) return -1;
  throw InputError("malformed second symbol");
}

std::array<CodeSymbol, 4> b_quadruple(const Code& path, int p, PathEnd side) {
  // Shape checks only; the case tables reject illegal neighbours of the ends.
  for (const auto& s : path) check_symbol_range(s, p);
  if (shape_of(path) != CodeShape::Path) throw InputError("not a path code");
  if (path.size() == 2) {
    const PathInfo info = analyze_path(path, p);
    return side == PathEnd::Plus ? b_plus(info.start, info.a2) : b_minus(info.end, info.a_last);
  }
  if (side == PathEnd::Plus) return b_plus(path.front().index, path[1]);
  return b_minus(path.back().index, path[path.size() - 2]);
}

RCodes r_codes(const Code& path, int p, int k, int nu) {
  if (nu < 2 || nu % 2 != 0) throw InputError("r_codes requires an even nu >= 2");
  const PathInfo info = analyze_path(path, p);
  const int n = static_cast<int>(path.size());
  if (k < 1 || k > n - 1) throw InputError("k out of range 1..n-1");
  const Pieces pc = pieces(info);
  const SplitLoops s = split_at(info, pc, k - 1);
  return {reduce(r_sigma_of(info, pc)), reduce(s.r_k), r_nu_of(s, nu)};
}

std::vector<int> ray_crossings_top_down(const Code& path, int p, int s) {
  const PathInfo info = analyze_path(path, p);
  (void)info;
  std::vector<int> xs;
  for (int t = 1; t + 1 < static_cast<int>(path.size()); ++t) {
    if (path[t].kind == SymbolKind::H && path[t].index == s) xs.push_back(t);
  }
  const PathView pv{path, path.front().index, path.back().index};
  const Region left{true, s - 1};
  const Feature ray{Feature::Type::Edge, SymbolKind::H, s};
  // Counterclockwise in U_{s-1} runs up h_s, so "precedes" means "lower".
  std::sort(xs.begin(), xs.end(),
            [&](int a, int b) { return a != b && precedes(pv, p, left, ray, b, a); });
  return xs;
}

Code act_on_frame_loop(const Code& path_in, int p, int nu, int s) {
  if (nu < 2 || nu % 2 != 0) throw InputError("act_on_frame_loop requires an even nu >= 2");
  if (s < 0 || s > p - 1) throw InputError("puncture index s out of range");
  check_path(path_in, p);
  // Orient the path so that q_s, if it is an endpoint, is the start.
  const Code path = (path_in.back().index == s) ? reverse_path(path_in) : path_in;
  const PathInfo info = analyze_path(path, p);
  const Pieces pc = pieces(info);
  const int mu = nu / 2;

  const std::vector<int> xs = ray_crossings_top_down(path, p, s);
  auto twist_product = [&]() {
    Code prod;
    for (const int kpos : xs) {
      const int eps = path[kpos].sign;
      Code r = r_nu_of(split_at(info, pc, kpos), nu);
      if (eps > 0) r = inverse(r);
      // R is based just past the crossing; bring it to the side of h_s that
      // carries the loop's tail.
      if (target(path[kpos]) == Region{true, s}) r = concat(concat({h(s, 1)}, r), {h(s, -1)});
      prod = concat(prod, r);
    }
    return prod;
  };

  const Code prod = twist_product();
  Code middle;
  if (info.start != s) {
    middle = {o(s - 1), l(s), o(s, -1), h(s, -1)};
  } else {
    const Code& a = info.interior;
    const Code delta0_prime = concat(concat(concat(concat(a, pc.b_minus), inverse(a)), pc.b_plus),
                                     concat(concat(a, inverse(pc.b_minus)), inverse(a)));
    const Code r = r_sigma_of(info, pc);
    const Code delta0 = concat(concat(power(r, mu - 1), delta0_prime), power(r, 1 - mu));
    if (info.a2 == h(s - 1, -1)) {
      middle = delta0;
    } else if (info.a2 == l(s - 1, -1)) {
      middle = concat(concat({o(s - 1)}, delta0), {o(s - 1, -1)});
    } else if (info.a2 == l(s + 1, 1)) {
      middle = concat(concat({o(s - 1), l(s)}, delta0), {l(s, -1), o(s - 1, -1)});
    } else {
      middle = concat(concat({o(s - 1), l(s), o(s, -1)}, delta0), {o(s), l(s, -1), o(s - 1, -1)});
    }
  }
  Code out{u0(1)};
  out = concat(out, prod);
  out = concat(out, middle);
  out = concat(out, inverse(prod));
  out.push_back(u0(-1));
  return reduce(out);
}

FreeWord loop_to_free_word(const Code& loop, int p) {
  check_loop(loop, p);
  FreeWord w;
  for (std::size_t i = 1; i + 1 < loop.size(); ++i) {
    if (loop[i].kind == SymbolKind::L) append_reduced(w, loop[i].sign * (loop[i].index + 1));
  }
  return w;
}

}  // namespace bmf::codes

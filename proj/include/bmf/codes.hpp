#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bmf/free_group.hpp"

namespace bmf::codes {

// Standard configuration for p points: q_k = (k, 0), k = 0..p-1. The real
// axis is cut into segments o_k (k = 0..p-1, o_k joins q_k to q_{k+1}, o_{p-1}
// is the right ray) and the left ray, written o_p. The vertical line through
// q_k is split into the upper half-line h_k and the lower half-line l_k.
//
// Crossing signs: downward through a segment is +1, rightward through a
// vertical half-line is +1.
//
// The complement of these cuts is a union of discs U_k (upper) and L_k
// (lower), k = -1..p-1, where U_k lies between the lines v1 = k and v1 = k+1.
enum class SymbolKind { U, O, H, L, Q };

struct CodeSymbol {
  SymbolKind kind = SymbolKind::U;
  // For O, index -1 stands for the left ray (text "o_p").
  int index = 0;
  int sign = 1;
  CodeSymbol inverse() const { return {kind, index, -sign}; }
  friend bool operator==(const CodeSymbol&, const CodeSymbol&) = default;
};

using Code = std::vector<CodeSymbol>;

CodeSymbol u0(int sign = 1);
CodeSymbol o(int index, int sign = 1);
CodeSymbol h(int index, int sign = 1);
CodeSymbol l(int index, int sign = 1);
CodeSymbol q(int index, int sign = 1);

// Comma-separated symbols, e.g. "u0, o3, h2^-1, l0, q1^-1". Errors report
// the offending token and its character offset.
Code parse_code(int p, std::string_view text);
std::string to_string(const Code& code, int p);

Code concat(const Code& a, const Code& b);
Code inverse(const Code& c);
Code power(const Code& c, int n);

// Deletes adjacent inverse pairs until none remain. The endpoint markers
// (u0 and q symbols) are never cancelled.
Code reduce(const Code& code);
bool is_reduced(const Code& code);

enum class CodeShape { Loop, Path };
CodeShape shape_of(const Code& code);

// Reduced codes compared symbol-wise. Throws InputError when one is a loop and
// the other a path, or when paths have different endpoints.
bool codes_equal(const Code& a, const Code& b);

// (u0, o_{s-1}, l_s, o_s^{-1}, h_s^{-1}, u0^{-1}); 0 <= s <= p-1.
Code frame_loop(int s, int p);

// Path code of the frame segment joining q_{j-1} and q_j (1 <= j <= p-1).
Code frame_path(int j, int p);

// Validates a path code: endpoint markers, start/end quadrant conditions,
// consistency of the region walk, and reducedness. Frame segments of length
// two are accepted.
void check_path(const Code& path, int p);
// Validates a loop code: u0 markers, no q symbols, closed walk in the upper
// half.
void check_loop(const Code& loop, int p);

int sign_of(const Code& path, int p);

enum class PathEnd { Plus, Minus };  // + : start (q_i, a_2), - : end (a_{n-1}, q_j^{-1})
std::array<CodeSymbol, 4> b_quadruple(const Code& path, int p, PathEnd side);

struct RCodes {
  Code r_sigma;
  Code r_sigma_k;
  Code r_nu;
};

// k is the 1-based position of a_k in the path code (a_1 = q_i),
// 1 <= k <= n-1. nu must be even.
RCodes r_codes(const Code& path, int p, int k, int nu);

// Code of the frame loop around q_s after the nu-th power (nu even) of the
// half-twist along `path` has acted on it. Result is reduced.
Code act_on_frame_loop(const Code& path, int p, int nu, int s);

// Class of a loop code in pi_1(D \ K) written in the free generators: the
// frame loop around q_k is f_{k+1}.
FreeWord loop_to_free_word(const Code& loop, int p);

// Indices (0-based positions in the code) of the crossings of the upper
// half-line h_s, ordered from the highest crossing to the lowest.
std::vector<int> ray_crossings_top_down(const Code& path, int p, int s);

}  // namespace bmf::codes

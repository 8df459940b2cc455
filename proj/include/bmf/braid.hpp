#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmf/free_group.hpp"

namespace bmf {

// Artin generator X_index^sign of B_p, index in 1..p-1, sign in {+1,-1}.
struct Generator {
  int index = 1;
  int sign = 1;
  Generator inverse() const { return {index, -sign}; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

// A word in the Artin generators of B_p. Words are kept exactly as built;
// equality of braids is decided by `equals`, not by operator==.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Generator> letters);

  // Signed-integer form: k means X_k, -k means X_k^{-1}.
  static BraidWord from_ints(int strands, std::span<const int> letters);
  // Whitespace-separated signed integers, e.g. "1 2 -1".
  static BraidWord parse(int strands, std::string_view text);
  static BraidWord generator(int strands, int index, int sign = 1);

  int strands() const { return strands_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::vector<int> to_ints() const;
  std::string to_string() const;

  // Syntactic equality only.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Generator> letters_;
};

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord operator*(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
// Cancels adjacent X_i X_i^{-1} pairs.
BraidWord free_reduce(const BraidWord& a);
BraidWord power(const BraidWord& a, int n);

// Action of the braid on the free group pi_1(D \ K) of rank p. Letters act
// left to right. X_i: f_i -> f_i f_{i+1} f_i^{-1}, f_{i+1} -> f_i.
ArtinImage artin_image(const BraidWord& w, std::size_t cap = kDefaultImageCap);
ArtinImage generator_image(int strands, Generator g);

// Garside left normal form Delta^inf A_1 ... A_m: each A_k is a permutation
// braid other than 1 and Delta, given by the final position of the strand
// starting at each 0-based position.
struct NormalForm {
  int strands = 1;
  long inf = 0;
  std::vector<std::vector<int>> factors;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};
NormalForm left_normal_form(const BraidWord& w);
BraidWord to_word(const NormalForm& nf);

bool is_identity(const BraidWord& w);
// Throws InputError on strand mismatch.
bool equals(const BraidWord& a, const BraidWord& b);

// (X_1 ... X_{p-1})^p
BraidWord delta_sq(int p);
// (X_i ... X_{j-1})^{j-i+1}
BraidWord delta_ij_sq(int i, int j, int p);
// inverse(Q) X_1^rho Q
BraidWord conj_halftwist(const BraidWord& q, int rho);

long exponent_sum(const BraidWord& w);
// Arrangement after the motion: result[k] is the (1-based) strand occupying
// position k+1, starting from the identity arrangement.
std::vector<int> permutation(const BraidWord& w);
bool is_transposition(std::span<const int> perm);
bool is_identity_permutation(std::span<const int> perm);

}  // namespace bmf

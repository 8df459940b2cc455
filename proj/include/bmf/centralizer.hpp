#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bmf/braid.hpp"

namespace bmf {

// A named generator of the centralizer of X = H_1^nu.
struct CentralizerGenerator {
  enum class Kind { FullTwist, HalfTwist };
  Kind kind;
  int index;  // j of Delta^2_{1,j} or of H_j
  BraidWord word;
  std::string name() const;  // "D1j(4)" or "H(3)"
};

struct CentralizerGenSet {
  int p;
  int nu;
  std::vector<CentralizerGenerator> generators;  // full twists first, then half-twists
};

// Delta^2_{1,j}, j = 3..p, and H_j, j = 1, 3, 4, ..., p-1.
CentralizerGenSet generators(int p, int nu);

// equals(w x, x w)
bool commutes_with(const BraidWord& w, const BraidWord& x);

// One letter of a membership witness: generator `gen` (index into the
// generator set) raised to `exponent`.
struct GenPower {
  int gen;
  int exponent;
};

struct MembershipWitness {
  std::vector<GenPower> letters;
  std::string to_string(const CentralizerGenSet& set) const;
  BraidWord expand(const CentralizerGenSet& set) const;
};

struct NotInCentralizer {};
struct SearchExhausted {
  std::size_t states_explored;
};
using MembershipResult = std::variant<MembershipWitness, NotInCentralizer, SearchExhausted>;

struct MembershipOptions {
  int max_depth = 8;
  std::size_t state_budget = 500'000;
};

MembershipResult membership_search(const BraidWord& w, int p, int nu,
                                   const MembershipOptions& opts = {});

struct EnumerateOptions {
  // Cap on the number of reduced words visited.
  std::size_t word_cap = 5'000'000;
  // 1 selects the serial kernel; >1 partitions by first letter under OpenMP.
  int threads = 1;
};

// All freely reduced words of length <= maxlen commuting with X_1^nu, one
// representative per braid (ArtinImage), ordered by (length, letters).
std::vector<BraidWord> enumerate_commuting(int p, int nu, int maxlen,
                                           const EnumerateOptions& opts = {});

}  // namespace bmf

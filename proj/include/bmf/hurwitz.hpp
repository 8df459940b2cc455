#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bmf/factorization.hpp"

namespace bmf {

enum class MoveDirection { Forward, Backward };  // R_k, R_k^{-1}

struct Move {
  int k;  // 1-based position, 1 <= k <= r-1
  MoveDirection dir;
  friend bool operator==(const Move&, const Move&) = default;
};

// Hurwitz moves applied in order, followed by one simultaneous conjugation.
struct MoveSequence {
  std::vector<Move> steps;
  std::optional<BraidWord> final_conjugator;
};

// (t_k, t_{k+1}) -> (t_k t_{k+1} t_k^{-1}, t_k)
Factorization apply_R(const Factorization& f, int k);
// (t_k, t_{k+1}) -> (t_{k+1}, t_{k+1}^{-1} t_k t_{k+1})
Factorization apply_R_inv(const Factorization& f, int k);
Factorization apply_move(const Factorization& f, Move m);
// t -> z^{-1} t z for every factor
Factorization conjugate_all(const Factorization& f, const BraidWord& z);
Factorization replay(const Factorization& f, const MoveSequence& moves);

struct Scrambled {
  Factorization factorization;
  MoveSequence moves;
};
// n uniformly random moves (position and direction) from a seeded generator.
Scrambled scramble(const Factorization& f, int n, std::uint64_t seed);

struct Equivalent {
  MoveSequence witness;
};
struct Distinguished {
  std::string invariant;
};
struct Unknown {
  std::size_t states_explored;
};
using EquivalenceVerdict = std::variant<Equivalent, Distinguished, Unknown>;

struct SearchOptions {
  // Distinct canonical keys explored over both search directions.
  std::size_t budget = 100'000;
  // Include simultaneous conjugation by X_i^{+-1} as search edges.
  bool conjugations = true;
  // 1 selects the serial frontier expansion; >1 the OpenMP kernel.
  int threads = 1;
};

EquivalenceVerdict search_equivalence(const Factorization& f1, const Factorization& f2,
                                      const SearchOptions& opts = {});

}  // namespace bmf

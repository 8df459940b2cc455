#pragma once

#include <optional>
#include <vector>

#include "bmf/braid.hpp"

namespace bmf {

// One factor of a braid factorization. Either a conjugated power of the frame
// half-twist, inverse(Q) X_1^rho Q, or an arbitrary ("raw") braid word.
class Factor {
 public:
  static Factor half_twist(BraidWord conjugator, int rho);
  static Factor raw(BraidWord word);

  bool is_half_twist() const { return !raw_.has_value(); }
  const BraidWord& conjugator() const { return conjugator_; }
  int rho() const { return rho_; }
  int strands() const { return raw_ ? raw_->strands() : conjugator_.strands(); }

  BraidWord word() const;
  // z^{-1} (this) z; keeps (Q, rho) form as (Q z, rho).
  Factor conjugated(const BraidWord& z) const;

 private:
  Factor() = default;
  BraidWord conjugator_;
  int rho_ = 0;
  std::optional<BraidWord> raw_;
};

struct SingularityProfile {
  int branch_points = 0;
  int nodes = 0;
  int cusps = 0;
  friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
};

class Factorization {
 public:
  Factorization(int strands, std::vector<Factor> factors, bool cuspidal = false);

  int strands() const { return strands_; }
  bool cuspidal() const { return cuspidal_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool all_half_twists() const;

  // Factor words in order.
  std::vector<BraidWord> words() const;

 private:
  int strands_;
  std::vector<Factor> factors_;
  bool cuspidal_;
};

BraidWord evaluate(const Factorization& f);
// True iff the product equals the full twist of B_p.
bool validate(const Factorization& f);
// Requires the cuspidal flag.
SingularityProfile profile(const Factorization& f);
// Sum of the factor exponent sums (equals sum of rho in (Q, rho) form).
long total_exponent(const Factorization& f);

// Factor-wise braid equality.
bool factorwise_equal(const Factorization& a, const Factorization& b);

struct ClassifyOptions {
  // Maximum conjugator length explored (split across a bidirectional search).
  int max_conjugator_length = 12;
  // Distinct braids kept per search side.
  std::size_t state_budget = 200'000;
};

struct HalfTwistWitness {
  BraidWord conjugator;
  int rho;
};

// Tries to write w as inverse(Q) X_1^rho Q. Absent when not found in budget.
std::optional<HalfTwistWitness> classify_positive(const BraidWord& w,
                                                  const ClassifyOptions& opts = {});

}  // namespace bmf

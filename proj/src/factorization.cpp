#include "bmf/factorization.hpp"

#include <deque>
#include <unordered_map>

#include "bmf/error.hpp"

namespace bmf {

Factor Factor::half_twist(BraidWord conjugator, int rho) {
  if (rho < 1) throw InputError("factor exponent rho must be >= 1");
  if (conjugator.strands() < 2) throw InputError("half-twist factor needs p >= 2");
  Factor f;
  f.conjugator_ = std::move(conjugator);
  f.rho_ = rho;
  return f;
}

Factor Factor::raw(BraidWord word) {
  Factor f;
  f.conjugator_ = BraidWord(word.strands());
  f.raw_ = std::move(word);
  return f;
}

BraidWord Factor::word() const {
  if (raw_) return *raw_;
  return conj_halftwist(conjugator_, rho_);
}

Factor Factor::conjugated(const BraidWord& z) const {
  if (z.strands() != strands()) throw InputError("strand mismatch in conjugation");
  if (raw_) return raw(inverse(z) * *raw_ * z);
  return half_twist(conjugator_ * z, rho_);
}

Factorization::Factorization(int strands, std::vector<Factor> factors, bool cuspidal)
    : strands_(strands), factors_(std::move(factors)), cuspidal_(cuspidal) {
  if (strands < 1) throw InputError("strand count must be >= 1");
  for (const auto& f : factors_) {
    if (f.strands() != strands_) throw InputError("factor strand count differs from p");
    if (cuspidal_) {
      if (!f.is_half_twist()) throw InputError("cuspidal factorization requires (Q, rho) factors");
      if (f.rho() < 1 || f.rho() > 3) throw InputError("cuspidal factor rho must be in {1,2,3}");
    }
  }
}

bool Factorization::all_half_twists() const {
  for (const auto& f : factors_) {
    if (!f.is_half_twist()) return false;
  }
  return true;
}

std::vector<BraidWord> Factorization::words() const {
  std::vector<BraidWord> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.word());
  return out;
}

BraidWord evaluate(const Factorization& f) {
  BraidWord out(f.strands());
  for (const auto& factor : f.factors()) out = out * factor.word();
  return out;
}

bool validate(const Factorization& f) {
  if (f.strands() < 2) throw InputError("validate requires p >= 2");
  return equals(evaluate(f), delta_sq(f.strands()));
}

SingularityProfile profile(const Factorization& f) {
  if (!f.cuspidal()) throw InputError("profile requires a cuspidal factorization");
  SingularityProfile prof;
  for (const auto& factor : f.factors()) {
    switch (factor.rho()) {
      case 1: ++prof.branch_points; break;
      case 2: ++prof.nodes; break;
      default: ++prof.cusps; break;
    }
  }
  return prof;
}

long total_exponent(const Factorization& f) {
  long total = 0;
  for (const auto& factor : f.factors()) {
    total += factor.is_half_twist() ? factor.rho() : exponent_sum(factor.word());
  }
  return total;
}

bool factorwise_equal(const Factorization& a, const Factorization& b) {
  if (a.strands() != b.strands() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equals(a.factors()[i].word(), b.factors()[i].word())) return false;
  }
  return true;
}

namespace {

struct SearchNode {
  ArtinImage image;
  BraidWord conjugator;  // node = inverse(conjugator) * root * conjugator
};

// Breadth-first expansion of conjugates of `root` by single generators.
// Returns visited image -> conjugator.
class ConjugateBall {
 public:
  ConjugateBall(const BraidWord& root, std::size_t budget) : budget_(budget) {
    const int p = root.strands();
    for (int i = 1; i < p; ++i) {
      for (int s : {1, -1}) {
        const Generator g{i, s};
        letters_.push_back({generator_image(p, g), generator_image(p, g.inverse()), g});
      }
    }
    const ArtinImage img = artin_image(root);
    visited_.emplace(img, BraidWord(p));
    frontier_.push_back(img);
  }

  const std::unordered_map<ArtinImage, BraidWord, ArtinImageHash>& visited() const {
    return visited_;
  }

  // Expands one more layer; returns false when the budget is exhausted.
  bool expand() {
    std::vector<ArtinImage> next;
    for (const auto& img : frontier_) {
      const BraidWord base = visited_.at(img);
      for (const auto& l : letters_) {
        // g^{-1} x g acting on the right: first g^{-1}, then x, then g.
        ArtinImage conj = l.inv.then(img).then(l.fwd);
        if (visited_.contains(conj)) continue;
        if (visited_.size() >= budget_) return false;
        BraidWord q = base * BraidWord(base.strands(), {l.gen});
        visited_.emplace(conj, std::move(q));
        next.push_back(std::move(conj));
      }
    }
    frontier_ = std::move(next);
    return true;
  }

 private:
  struct Letter {
    ArtinImage fwd;
    ArtinImage inv;
    Generator gen;
  };
  std::size_t budget_;
  std::vector<Letter> letters_;
  std::unordered_map<ArtinImage, BraidWord, ArtinImageHash> visited_;
  std::vector<ArtinImage> frontier_;
};

}  // namespace

std::optional<HalfTwistWitness> classify_positive(const BraidWord& w, const ClassifyOptions& opts) {
  const int p = w.strands();
  if (p < 2) return std::nullopt;
  const long e = exponent_sum(w);
  if (e < 1) return std::nullopt;
  const int rho = static_cast<int>(e);
  const auto perm = permutation(w);
  if (rho % 2 == 1 ? !is_transposition(perm) : !is_identity_permutation(perm)) {
    return std::nullopt;
  }
  const BraidWord core = power(BraidWord::generator(p, 1), rho);
  if (p == 2) return HalfTwistWitness{BraidWord(2), rho};
  // X_1^rho is not central for p >= 3, so central braids (full twists) are
  // rejected without searching.
  bool central = true;
  for (int i = 1; i < p && central; ++i) {
    const BraidWord x = BraidWord::generator(p, i);
    central = equals(w * x, x * w);
  }
  if (central) return std::nullopt;

  ConjugateBall from_core(core, opts.state_budget);
  ConjugateBall from_target(w, opts.state_budget);
  auto meet = [&]() -> std::optional<HalfTwistWitness> {
    // core^{Q1} = w^{Q2}  =>  w = core^{Q1 Q2^{-1}}
    for (const auto& [img, q2] : from_target.visited()) {
      auto it = from_core.visited().find(img);
      if (it != from_core.visited().end()) {
        return HalfTwistWitness{it->second * inverse(q2), rho};
      }
    }
    return std::nullopt;
  };
  if (auto hit = meet()) return hit;
  for (int depth = 1; depth <= opts.max_conjugator_length; ++depth) {
    const bool ok = (depth % 2 == 1) ? from_core.expand() : from_target.expand();
    if (auto hit = meet()) return hit;
    if (!ok) break;
  }
  return std::nullopt;
}

}  // namespace bmf

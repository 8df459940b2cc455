#include <algorithm>

#include "bmf/braid.hpp"
#include "bmf/error.hpp"

namespace bmf {

namespace {

using Perm = std::vector<int>;

Perm delta_perm(int p) {
  Perm d(p);
  for (int j = 0; j < p; ++j) d[j] = p - 1 - j;
  return d;
}

bool is_trivial(const Perm& a) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != static_cast<int>(j)) return false;
  }
  return true;
}

bool is_delta(const Perm& a) {
  const int p = static_cast<int>(a.size());
  for (int j = 0; j < p; ++j) {
    if (a[j] != p - 1 - j) return false;
  }
  return true;
}

Perm tau(const Perm& a) {
  const int p = static_cast<int>(a.size());
  Perm t(p);
  for (int j = 0; j < p; ++j) t[j] = p - 1 - a[p - 1 - j];
  return t;
}

// a[j] is the final position of the strand starting at position j.
// i is a left descent of b when b = s_i b'; a right descent of a when a = a' s_i.
bool left_descent(const Perm& b, int i) { return b[i] > b[i + 1]; }

bool right_descent(const Perm& a_inv, int i) { return a_inv[i] > a_inv[i + 1]; }

Perm inverse_perm(const Perm& a) {
  Perm inv(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) inv[a[j]] = static_cast<int>(j);
  return inv;
}

// Makes (a, b) left-weighted in place. Returns true if a changed.
bool left_weight(Perm& a, Perm& b) {
  const int p = static_cast<int>(a.size());
  bool changed = false;
  Perm a_inv = inverse_perm(a);
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < p; ++i) {
      if (left_descent(b, i) && !right_descent(a_inv, i)) {
        // a <- a s_i swaps the values i, i+1; b <- s_i^{-1} b swaps entries i, i+1
        std::swap(a[a_inv[i]], a[a_inv[i + 1]]);
        std::swap(a_inv[i], a_inv[i + 1]);
        std::swap(b[i], b[i + 1]);
        changed = again = true;
      }
    }
  }
  return changed;
}

// Delta^inf A_1 ... A_m, with the A_k stored untwisted: the actual factors are
// tau^twist(A_k). tau is an automorphism, so left-weighting commutes with it.
class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int p) : p_(p), delta_(delta_perm(p)) {}

  void push(Generator g) {
    Perm s(p_);
    for (int j = 0; j < p_; ++j) s[j] = j;
    const int i = g.index - 1;
    if (g.sign > 0) {
      std::swap(s[i], s[i + 1]);
      append(std::move(s));
    } else {
      // X_i^{-1} = Delta^{-1} (Delta s_i^{-1}); moving Delta^{-1} to the
      // front twists every existing factor.
      Perm b = delta_;
      for (int j = 0; j < p_; ++j) {
        if (b[j] == i) b[j] = i + 1;
        else if (b[j] == i + 1) b[j] = i;
      }
      --inf_;
      twist_ ^= 1;
      append(std::move(b));
    }
  }

  NormalForm finish() {
    NormalForm nf;
    nf.strands = p_;
    nf.inf = inf_;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      nf.factors.push_back(twist_ ? tau(factors_[k]) : factors_[k]);
    }
    return nf;
  }

 private:
  void append(Perm s) {
    if (twist_) s = tau(s);
    factors_.push_back(std::move(s));
    for (std::size_t k = factors_.size() - 1; k > 0; --k) {
      if (!left_weight(factors_[k - 1], factors_[k])) break;
    }
    while (!factors_.empty() && is_trivial(factors_.back())) factors_.pop_back();
    std::size_t lead = 0;
    while (lead < factors_.size() && is_delta(factors_[lead])) ++lead;
    inf_ += static_cast<long>(lead);
    factors_.erase(factors_.begin(), factors_.begin() + static_cast<long>(lead));
  }

  int p_;
  Perm delta_;
  long inf_ = 0;
  int twist_ = 0;
  std::vector<Perm> factors_;
};

}  // namespace

NormalForm left_normal_form(const BraidWord& w) {
  NormalFormBuilder b(w.strands());
  if (w.strands() >= 2) {
    for (const Generator& g : w.letters()) b.push(g);
  }
  return b.finish();
}

BraidWord to_word(const NormalForm& nf) {
  const int p = nf.strands;
  std::vector<int> letters;
  // Delta is its own reverse, so negating its letters in place gives Delta^{-1}
  for (long n = 0; n < std::abs(nf.inf); ++n) {
    for (int k = 1; k < p; ++k) {
      for (int i = p - 1; i >= k; --i) letters.push_back(nf.inf > 0 ? i : -i);
    }
  }
  for (Perm a : nf.factors) {
    for (;;) {
      int i = 0;
      while (i + 1 < p && !left_descent(a, i)) ++i;
      if (i + 1 >= p) break;
      letters.push_back(i + 1);
      std::swap(a[i], a[i + 1]);
    }
  }
  return BraidWord::from_ints(p, letters);
}

}  // namespace bmf

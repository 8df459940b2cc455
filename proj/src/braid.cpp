#include "bmf/braid.hpp"

#include <cstdlib>
#include <sstream>

#include "bmf/error.hpp"

namespace bmf {

namespace {

void check_letter(int strands, Generator g) {
  if (g.index < 1 || g.index >= strands) {
    throw InputError("generator index " + std::to_string(g.index) + " out of range for B_" +
                     std::to_string(strands));
  }
  if (g.sign != 1 && g.sign != -1) throw InputError("generator sign must be +1 or -1");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw InputError("strand count must be >= 1");
}

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw InputError("strand count must be >= 1");
  for (const auto& g : letters_) check_letter(strands_, g);
}

BraidWord BraidWord::from_ints(int strands, std::span<const int> letters) {
  std::vector<Generator> gens;
  gens.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw InputError("braid letter 0 is not a generator");
    gens.push_back({std::abs(x), x > 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(gens));
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<int> ints;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer in braid word: '" + tok + "'");
    }
    if (used != tok.size()) throw InputError("not an integer in braid word: '" + tok + "'");
    ints.push_back(v);
  }
  return from_ints(strands, ints);
}

BraidWord BraidWord::generator(int strands, int index, int sign) {
  return BraidWord(strands, {Generator{index, sign}});
}

std::vector<int> BraidWord::to_ints() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& g : letters_) out.push_back(g.sign * g.index);
  return out;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i].sign * letters_[i].index;
  }
  return os.str();
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InputError("strand-count mismatch in compose");
  std::vector<Generator> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) { return compose(a, b); }

BraidWord free_reduce(const BraidWord& a) {
  std::vector<Generator> out;
  out.reserve(a.length());
  for (const Generator& g : a.letters()) {
    if (!out.empty() && out.back() == g.inverse()) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return BraidWord(a.strands(), std::move(out));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<Generator> letters;
  letters.reserve(a.length());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord power(const BraidWord& a, int n) {
  const BraidWord base = n >= 0 ? a : inverse(a);
  BraidWord out(a.strands());
  for (int k = 0; k < std::abs(n); ++k) out = out * base;
  return out;
}

ArtinImage generator_image(int strands, Generator g) {
  check_letter(strands, g);
  std::vector<FreeWord> images(strands);
  for (int k = 0; k < strands; ++k) images[k] = {k + 1};
  const int i = g.index;
  if (g.sign > 0) {
    images[i - 1] = {i, i + 1, -i};
    images[i] = {i};
  } else {
    images[i - 1] = {i + 1};
    images[i] = {-(i + 1), i, i + 1};
  }
  return ArtinImage::from_images_unchecked(std::move(images));
}

ArtinImage artin_image(const BraidWord& w, std::size_t cap) {
  const int p = w.strands();
  // Substituting one generator only touches letters i and i+1, so rewrite
  // the current images in place rather than composing full automorphisms.
  std::vector<FreeWord> images(p);
  for (int k = 0; k < p; ++k) images[k] = {k + 1};
  std::size_t total = p;
  for (const auto& g : w.letters()) {
    const int i = g.index;
    total = 0;
    for (auto& img : images) {
      FreeWord out;
      out.reserve(img.size() + 4);
      for (int x : img) {
        const int a = std::abs(x);
        if (a != i && a != i + 1) {
          append_reduced(out, x);
          continue;
        }
        // Image of f_a under X_i^{sign}, then inverted if x < 0.
        int sub[3];
        int n = 0;
        if (g.sign > 0) {
          if (a == i) {
            sub[0] = i; sub[1] = i + 1; sub[2] = -i; n = 3;
          } else {
            sub[0] = i; n = 1;
          }
        } else {
          if (a == i) {
            sub[0] = i + 1; n = 1;
          } else {
            sub[0] = -(i + 1); sub[1] = i; sub[2] = i + 1; n = 3;
          }
        }
        if (x > 0) {
          for (int k = 0; k < n; ++k) append_reduced(out, sub[k]);
        } else {
          for (int k = n - 1; k >= 0; --k) append_reduced(out, -sub[k]);
        }
      }
      img = std::move(out);
      total += img.size();
    }
    if (total > cap) throw ResourceError("artin image exceeds length cap");
  }
  return ArtinImage::from_images_unchecked(std::move(images));
}

bool is_identity(const BraidWord& w) {
  const NormalForm nf = left_normal_form(w);
  return nf.inf == 0 && nf.factors.empty();
}

bool equals(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw InputError("strand-count mismatch in equals");
  if (exponent_sum(a) != exponent_sum(b)) return false;
  // a = P x S, b = P y S: only x and y need normal forms
  const BraidWord ra = free_reduce(a);
  const BraidWord rb = free_reduce(b);
  const auto& x = ra.letters();
  const auto& y = rb.letters();
  std::size_t pre = 0;
  while (pre < x.size() && pre < y.size() && x[pre] == y[pre]) ++pre;
  std::size_t suf = 0;
  while (suf < x.size() - pre && suf < y.size() - pre && x[x.size() - 1 - suf] == y[y.size() - 1 - suf]) ++suf;
  const BraidWord xs(a.strands(), {x.begin() + pre, x.end() - suf});
  const BraidWord ys(b.strands(), {y.begin() + pre, y.end() - suf});
  return left_normal_form(xs) == left_normal_form(ys);
}

BraidWord delta_sq(int p) {
  if (p < 2) throw InputError("delta_sq requires p >= 2");
  return delta_ij_sq(1, p, p);
}

BraidWord delta_ij_sq(int i, int j, int p) {
  if (!(1 <= i && i < j && j <= p)) throw InputError("delta_ij_sq requires 1 <= i < j <= p");
  std::vector<Generator> letters;
  for (int rep = 0; rep < j - i + 1; ++rep) {
    for (int k = i; k < j; ++k) letters.push_back({k, 1});
  }
  return BraidWord(p, std::move(letters));
}

BraidWord conj_halftwist(const BraidWord& q, int rho) {
  if (rho < 1) throw InputError("half-twist exponent must be >= 1");
  if (q.strands() < 2) throw InputError("half-twist needs at least two strands");
  return inverse(q) * power(BraidWord::generator(q.strands(), 1), rho) * q;
}

long exponent_sum(const BraidWord& w) {
  long s = 0;
  for (const auto& g : w.letters()) s += g.sign;
  return s;
}

std::vector<int> permutation(const BraidWord& w) {
  std::vector<int> arrangement(w.strands());
  for (int k = 0; k < w.strands(); ++k) arrangement[k] = k + 1;
  for (const auto& g : w.letters()) std::swap(arrangement[g.index - 1], arrangement[g.index]);
  return arrangement;
}

bool is_identity_permutation(std::span<const int> perm) {
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

bool is_transposition(std::span<const int> perm) {
  int moved = 0;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] != static_cast<int>(k) + 1) {
      ++moved;
      const int other = perm[k] - 1;
      if (perm[other] != static_cast<int>(k) + 1) return false;
    }
  }
  return moved == 2;
}

}  // namespace bmf

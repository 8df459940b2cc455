#include "bmf/centralizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bmf/error.hpp"

namespace bmf {

std::string CentralizerGenerator::name() const {
  std::ostringstream os;
  if (kind == Kind::FullTwist) {
    os << "D1j(" << index << ")";
  } else {
    os << "H(" << index << ")";
  }
  return os.str();
}

CentralizerGenSet generators(int p, int nu) {
  if (p < 2) throw InputError("centralizer generators require p >= 2");
  if (nu < 1) throw InputError("nu must be >= 1");
  CentralizerGenSet set{p, nu, {}};
  for (int j = 3; j <= p; ++j) {
    set.generators.push_back({CentralizerGenerator::Kind::FullTwist, j, delta_ij_sq(1, j, p)});
  }
  for (int j = 1; j <= p - 1; ++j) {
    if (j == 2) continue;  // the generating set skips H_2
    set.generators.push_back(
        {CentralizerGenerator::Kind::HalfTwist, j, BraidWord::generator(p, j)});
  }
  return set;
}

bool commutes_with(const BraidWord& w, const BraidWord& x) {
  if (w.strands() != x.strands()) throw InputError("strand mismatch in commutes_with");
  return equals(w * x, x * w);
}

std::string MembershipWitness::to_string(const CentralizerGenSet& set) const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << set.generators[letters[i].gen].name();
    if (letters[i].exponent != 1) os << '^' << letters[i].exponent;
  }
  return os.str();
}

BraidWord MembershipWitness::expand(const CentralizerGenSet& set) const {
  BraidWord out(set.p);
  for (const auto& l : letters) out = out * power(set.generators[l.gen].word, l.exponent);
  return out;
}

namespace {

MembershipWitness compress(const std::vector<int>& signed_gens) {
  // signed_gens: +(g+1) or -(g+1)
  MembershipWitness w;
  for (int s : signed_gens) {
    const int g = std::abs(s) - 1;
    const int e = s > 0 ? 1 : -1;
    if (!w.letters.empty() && w.letters.back().gen == g) {
      w.letters.back().exponent += e;
      if (w.letters.back().exponent == 0) w.letters.pop_back();
    } else {
      w.letters.push_back({g, e});
    }
  }
  return w;
}

}  // namespace

MembershipResult membership_search(const BraidWord& w, int p, int nu,
                                   const MembershipOptions& opts) {
  if (w.strands() != p) throw InputError("strand mismatch in membership_search");
  const BraidWord x = power(BraidWord::generator(p, 1), nu);
  if (!commutes_with(w, x)) return NotInCentralizer{};

  const CentralizerGenSet set = generators(p, nu);
  const ArtinImage target = artin_image(w);
  std::vector<ArtinImage> step;  // index 2g: generator g, 2g+1: inverse
  for (const auto& g : set.generators) {
    step.push_back(artin_image(g.word));
    step.push_back(artin_image(inverse(g.word)));
  }

  // Layered breadth-first search over the Cayley graph of the generated
  // subgroup, deduplicated by ArtinImage; yields a shortest witness.
  std::unordered_map<ArtinImage, std::vector<int>, ArtinImageHash> seen;
  const ArtinImage id = ArtinImage::identity(p);
  seen.emplace(id, std::vector<int>{});
  if (id == target) return MembershipWitness{};
  std::vector<ArtinImage> frontier{id};
  for (int depth = 1; depth <= opts.max_depth; ++depth) {
    std::vector<ArtinImage> next;
    for (const auto& cur : frontier) {
      const std::vector<int> path = seen.at(cur);
      for (std::size_t s = 0; s < step.size(); ++s) {
        ArtinImage img = cur.then(step[s]);
        if (seen.contains(img)) continue;
        if (seen.size() >= opts.state_budget) return SearchExhausted{seen.size()};
        std::vector<int> np = path;
        const int g = static_cast<int>(s / 2) + 1;
        np.push_back(s % 2 == 0 ? g : -g);
        if (img == target) {
          MembershipWitness wit = compress(np);
          return wit;
        }
        seen.emplace(img, std::move(np));
        next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return SearchExhausted{seen.size()};
}

namespace {

struct Found {
  std::vector<int> letters;
  ArtinImage image;
};

bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Depth-first enumeration of reduced words starting with `first`.
void enumerate_from(int first, int p, int maxlen, const ArtinImage& x_img,
                    const std::vector<ArtinImage>& letter_img, const std::vector<int>& alphabet,
                    std::size_t cap, std::vector<Found>& out, std::size_t& visited) {
  std::vector<int> word{first};
  std::vector<ArtinImage> prefix_img{letter_img[first > 0 ? 2 * (first - 1) : 2 * (-first - 1) + 1]};
  std::vector<std::size_t> next_choice{0};
  auto record = [&]() {
    const ArtinImage& img = prefix_img.back();
    if (img.then(x_img) == x_img.then(img)) out.push_back({word, img});
  };
  ++visited;
  record();
  while (!word.empty()) {
    if (visited > cap) throw ResourceError("enumerate_commuting exceeded the word cap");
    if (static_cast<int>(word.size()) >= maxlen || next_choice.back() >= alphabet.size()) {
      word.pop_back();
      prefix_img.pop_back();
      next_choice.pop_back();
      continue;
    }
    const int l = alphabet[next_choice.back()++];
    if (l == -word.back()) continue;
    const int li = l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1;
    word.push_back(l);
    prefix_img.push_back(prefix_img.back().then(letter_img[li]));
    next_choice.push_back(0);
    ++visited;
    record();
  }
  (void)p;
}

}  // namespace

std::vector<BraidWord> enumerate_commuting(int p, int nu, int maxlen,
                                           const EnumerateOptions& opts) {
  if (p < 2) throw InputError("enumerate_commuting requires p >= 2");
  if (nu < 1 || maxlen < 0) throw InputError("enumerate_commuting requires nu >= 1, maxlen >= 0");
  const ArtinImage x_img = artin_image(power(BraidWord::generator(p, 1), nu));
  std::vector<ArtinImage> letter_img;
  std::vector<int> alphabet;
  for (int i = 1; i < p; ++i) {
    letter_img.push_back(generator_image(p, {i, 1}));
    letter_img.push_back(generator_image(p, {i, -1}));
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }

  std::vector<std::vector<Found>> parts(alphabet.size());
  std::vector<std::size_t> visited(alphabet.size(), 0);
  if (maxlen > 0) {
    bool overflow = false;
    if (opts.threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
#endif
      for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(alphabet.size()); ++a) {
        try {
          enumerate_from(alphabet[a], p, maxlen, x_img, letter_img, alphabet,
                         opts.word_cap / alphabet.size() + 1, parts[a], visited[a]);
        } catch (const ResourceError&) {
#ifdef _OPENMP
#pragma omp atomic write
#endif
          overflow = true;
        }
      }
    } else {
      for (std::size_t a = 0; a < alphabet.size() && !overflow; ++a) {
        try {
          enumerate_from(alphabet[a], p, maxlen, x_img, letter_img, alphabet,
                         opts.word_cap / alphabet.size() + 1, parts[a], visited[a]);
        } catch (const ResourceError&) {
          overflow = true;
        }
      }
    }
    if (overflow) throw ResourceError("enumerate_commuting exceeded the word cap");
  }

  std::vector<Found> all;
  all.push_back({{}, ArtinImage::identity(p)});
  for (auto& part : parts) {
    for (auto& f : part) all.push_back(std::move(f));
  }
  std::sort(all.begin(), all.end(),
            [](const Found& a, const Found& b) { return canonical_less(a.letters, b.letters); });
  std::unordered_set<ArtinImage, ArtinImageHash> seen;
  std::vector<BraidWord> out;
  for (const auto& f : all) {
    if (seen.insert(f.image).second) out.push_back(BraidWord::from_ints(p, f.letters));
  }
  return out;
}

}  // namespace bmf

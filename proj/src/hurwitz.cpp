#include "bmf/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bmf/error.hpp"

namespace bmf {

namespace {

void check_position(const Factorization& f, int k) {
  if (k < 1 || k >= static_cast<int>(f.size())) {
    throw InputError("Hurwitz move position " + std::to_string(k) + " out of range 1.." +
                     std::to_string(static_cast<int>(f.size()) - 1));
  }
}

// z^{-1} t z with z given as a factor word; keeps (Q, rho) form when possible.
Factor conjugate_factor(const Factor& t, const BraidWord& z) {
  const Factor c = t.conjugated(z);
  if (c.is_half_twist()) return Factor::half_twist(free_reduce(c.conjugator()), c.rho());
  return Factor::raw(free_reduce(c.word()));
}

}  // namespace

Factorization apply_R(const Factorization& f, int k) {
  check_position(f, k);
  std::vector<Factor> out = f.factors();
  const Factor& tk = f.factors()[k - 1];
  const Factor& tk1 = f.factors()[k];
  // t_k t_{k+1} t_k^{-1} = conjugate of t_{k+1} by t_k^{-1}
  out[k - 1] = conjugate_factor(tk1, inverse(tk.word()));
  out[k] = tk;
  return Factorization(f.strands(), std::move(out), f.cuspidal());
}

Factorization apply_R_inv(const Factorization& f, int k) {
  check_position(f, k);
  std::vector<Factor> out = f.factors();
  const Factor& tk = f.factors()[k - 1];
  const Factor& tk1 = f.factors()[k];
  out[k - 1] = tk1;
  out[k] = conjugate_factor(tk, tk1.word());
  return Factorization(f.strands(), std::move(out), f.cuspidal());
}

Factorization apply_move(const Factorization& f, Move m) {
  return m.dir == MoveDirection::Forward ? apply_R(f, m.k) : apply_R_inv(f, m.k);
}

Factorization conjugate_all(const Factorization& f, const BraidWord& z) {
  if (z.strands() != f.strands()) throw InputError("strand mismatch in conjugate_all");
  std::vector<Factor> out;
  out.reserve(f.size());
  for (const auto& t : f.factors()) out.push_back(conjugate_factor(t, z));
  return Factorization(f.strands(), std::move(out), f.cuspidal());
}

Factorization replay(const Factorization& f, const MoveSequence& moves) {
  Factorization cur = f;
  for (const auto& m : moves.steps) cur = apply_move(cur, m);
  if (moves.final_conjugator) cur = conjugate_all(cur, *moves.final_conjugator);
  return cur;
}

Scrambled scramble(const Factorization& f, int n, std::uint64_t seed) {
  if (n < 0) throw InputError("scramble count must be >= 0");
  MoveSequence seq;
  Factorization cur = f;
  if (f.size() < 2 || n == 0) return {cur, seq};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pos(1, static_cast<int>(f.size()) - 1);
  std::uniform_int_distribution<int> dir(0, 1);
  for (int i = 0; i < n; ++i) {
    const Move m{pos(rng), dir(rng) == 0 ? MoveDirection::Forward : MoveDirection::Backward};
    cur = apply_move(cur, m);
    seq.steps.push_back(m);
  }
  return {cur, seq};
}

namespace {

struct FactorAction {
  ArtinImage fwd;
  ArtinImage inv;
};

using State = std::vector<FactorAction>;

struct Key {
  std::vector<ArtinImage> images;
  std::size_t hash;
  friend bool operator==(const Key& a, const Key& b) {
    return a.hash == b.hash && a.images == b.images;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const { return k.hash; }
};

Key make_key(const State& s) {
  Key k;
  k.images.reserve(s.size());
  std::size_t h = s.size();
  for (const auto& fa : s) {
    k.images.push_back(fa.fwd);
    h = hash_combine(h, fa.fwd.hash());
  }
  k.hash = h;
  return k;
}

struct Edge {
  bool is_move = true;
  Move move{1, MoveDirection::Forward};
  Generator gen{1, 1};
};

Edge inverse_edge(const Edge& e) {
  Edge out = e;
  if (e.is_move) {
    out.move.dir = e.move.dir == MoveDirection::Forward ? MoveDirection::Backward
                                                         : MoveDirection::Forward;
  } else {
    out.gen = e.gen.inverse();
  }
  return out;
}

struct Node {
  State state;
  int parent = -1;
  Edge via;
};

class Side {
 public:
  std::vector<Node> nodes;
  std::unordered_map<Key, int, KeyHash> index;
  std::vector<int> frontier;
};

// Successor kernel: the edge order is (position, direction) for moves, then
// conjugations by X_1, X_1^{-1}, X_2, ...
std::vector<std::pair<Edge, State>> successors(const State& s, int p, bool conjugations,
                                               const std::vector<FactorAction>& gens,
                                               const std::vector<Generator>& gen_names) {
  std::vector<std::pair<Edge, State>> out;
  const int r = static_cast<int>(s.size());
  for (int k = 1; k < r; ++k) {
    const FactorAction& a = s[k - 1];
    const FactorAction& b = s[k];
    {
      // R_k: (a, b) -> (a b a^{-1}, a)
      State t = s;
      t[k - 1] = {a.fwd.then(b.fwd).then(a.inv), a.fwd.then(b.inv).then(a.inv)};
      t[k] = a;
      out.push_back({Edge{true, {k, MoveDirection::Forward}, {}}, std::move(t)});
    }
    {
      // R_k^{-1}: (a, b) -> (b, b^{-1} a b)
      State t = s;
      t[k - 1] = b;
      t[k] = {b.inv.then(a.fwd).then(b.fwd), b.inv.then(a.inv).then(b.fwd)};
      out.push_back({Edge{true, {k, MoveDirection::Backward}, {}}, std::move(t)});
    }
  }
  if (conjugations) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      // z = gens[g]; t -> z^{-1} t z
      const FactorAction& z = gens[g];
      State t;
      t.reserve(s.size());
      for (const auto& fa : s) {
        t.push_back({z.inv.then(fa.fwd).then(z.fwd), z.inv.then(fa.inv).then(z.fwd)});
      }
      Edge e;
      e.is_move = false;
      e.gen = gen_names[g];
      out.push_back({e, std::move(t)});
    }
  }
  (void)p;
  return out;
}

std::vector<Edge> path_to_root(const Side& side, int node) {
  std::vector<Edge> edges;
  while (side.nodes[node].parent >= 0) {
    edges.push_back(side.nodes[node].via);
    node = side.nodes[node].parent;
  }
  std::reverse(edges.begin(), edges.end());
  return edges;
}

// Moves in order, conjugations collected into one final conjugator. Valid
// because simultaneous conjugation commutes with every Hurwitz move.
MoveSequence normalize(const std::vector<Edge>& edges, int p) {
  MoveSequence seq;
  BraidWord z(p);
  bool any_conj = false;
  for (const auto& e : edges) {
    if (e.is_move) {
      seq.steps.push_back(e.move);
    } else {
      z = z * BraidWord(p, {e.gen});
      any_conj = true;
    }
  }
  if (any_conj) seq.final_conjugator = z;
  return seq;
}

std::map<long, int> exponent_multiset(const Factorization& f) {
  std::map<long, int> m;
  for (const auto& t : f.factors()) ++m[exponent_sum(t.word())];
  return m;
}

std::map<std::vector<int>, int> cycle_type_multiset(const Factorization& f) {
  std::map<std::vector<int>, int> m;
  for (const auto& t : f.factors()) {
    const auto perm = permutation(t.word());
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = perm[j] - 1) {
        seen[j] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    ++m[cycles];
  }
  return m;
}

bool is_central(const BraidWord& w) {
  const ArtinImage img = artin_image(w);
  for (int i = 1; i < w.strands(); ++i) {
    const ArtinImage g = generator_image(w.strands(), {i, 1});
    if (!(img.then(g) == g.then(img))) return false;
  }
  return true;
}

State make_state(const Factorization& f) {
  State s;
  for (const auto& t : f.factors()) {
    const BraidWord w = t.word();
    s.push_back({artin_image(w), artin_image(inverse(w))});
  }
  return s;
}

}  // namespace

EquivalenceVerdict search_equivalence(const Factorization& f1, const Factorization& f2,
                                      const SearchOptions& opts) {
  if (f1.strands() != f2.strands()) return Distinguished{"strand count"};
  if (f1.size() != f2.size()) return Distinguished{"factor count"};
  if (total_exponent(f1) != total_exponent(f2)) return Distinguished{"total exponent"};
  if (exponent_multiset(f1) != exponent_multiset(f2)) return Distinguished{"rho multiset"};
  if (cycle_type_multiset(f1) != cycle_type_multiset(f2)) {
    return Distinguished{"factor permutation types"};
  }
  const int p = f1.strands();
  const BraidWord e1 = evaluate(f1);
  const BraidWord e2 = evaluate(f2);
  if (!equals(e1, e2)) {
    // Products of equivalent factorizations are conjugate; a central product
    // has no other conjugates.
    if (is_central(e1) || is_central(e2)) return Distinguished{"product"};
    if (!opts.conjugations) return Distinguished{"product"};
  }

  std::vector<FactorAction> gens;
  std::vector<Generator> gen_names;
  for (int i = 1; i < p; ++i) {
    for (int s : {1, -1}) {
      const Generator g{i, s};
      gens.push_back({generator_image(p, g), generator_image(p, g.inverse())});
      gen_names.push_back(g);
    }
  }

  Side fwd, bwd;
  auto add_root = [](Side& side, State s) {
    Key k = make_key(s);
    side.nodes.push_back({std::move(s), -1, {}});
    side.index.emplace(std::move(k), 0);
    side.frontier = {0};
  };
  add_root(fwd, make_state(f1));
  add_root(bwd, make_state(f2));

  auto finish = [&](int fwd_node, int bwd_node) -> EquivalenceVerdict {
    std::vector<Edge> edges = path_to_root(fwd, fwd_node);
    std::vector<Edge> back = path_to_root(bwd, bwd_node);
    for (auto it = back.rbegin(); it != back.rend(); ++it) edges.push_back(inverse_edge(*it));
    MoveSequence seq = normalize(edges, p);
    if (!factorwise_equal(replay(f1, seq), f2)) {
      throw std::logic_error("Hurwitz search produced a non-replaying witness");
    }
    return Equivalent{std::move(seq)};
  };

  {
    auto it = bwd.index.find(make_key(fwd.nodes[0].state));
    if (it != bwd.index.end()) return finish(0, it->second);
  }

  auto explored = [&]() { return fwd.nodes.size() + bwd.nodes.size(); };

  while (!fwd.frontier.empty() || !bwd.frontier.empty()) {
    const bool expand_fwd =
        bwd.frontier.empty() ||
        (!fwd.frontier.empty() && fwd.frontier.size() <= bwd.frontier.size());
    Side& side = expand_fwd ? fwd : bwd;
    Side& other = expand_fwd ? bwd : fwd;

    const std::vector<int> layer = std::move(side.frontier);
    side.frontier.clear();
    std::vector<std::vector<std::pair<Edge, State>>> succ(layer.size());

    if (opts.threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opts.threads)
#endif
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(layer.size()); ++i) {
        succ[i] = successors(side.nodes[layer[i]].state, p, opts.conjugations, gens, gen_names);
      }
    } else {
      for (std::size_t i = 0; i < layer.size(); ++i) {
        succ[i] = successors(side.nodes[layer[i]].state, p, opts.conjugations, gens, gen_names);
      }
    }

    // Deterministic merge in (frontier order, edge order).
    for (std::size_t i = 0; i < layer.size(); ++i) {
      for (auto& [edge, state] : succ[i]) {
        Key key = make_key(state);
        if (side.index.contains(key)) continue;
        if (explored() >= opts.budget) return Unknown{explored()};
        const int id = static_cast<int>(side.nodes.size());
        side.nodes.push_back({std::move(state), layer[i], edge});
        auto hit = other.index.find(key);
        side.index.emplace(std::move(key), id);
        side.frontier.push_back(id);
        if (hit != other.index.end()) {
          return expand_fwd ? finish(id, hit->second) : finish(hit->second, id);
        }
      }
    }
  }
  return Unknown{explored()};
}

}  // namespace bmf
